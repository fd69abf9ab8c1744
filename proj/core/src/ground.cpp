/*
 *  Copyright 2026 The aspdbg Authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */

#include <aspdbg/ground.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace aspdbg {

const Term* Substitution::find(const std::string& var) const {
    for (const auto& [name, value] : bindings) {
        if (name == var) {
            return &value;
        }
    }
    return nullptr;
}

std::string format_substitution(const Substitution& s) {
    std::string out;
    for (const auto& [name, value] : s.bindings) {
        if (!out.empty()) {
            out += ", ";
        }
        out += name + "=" + value.name();
    }
    return out;
}

Atom apply(const Substitution& s, const Atom& a) {
    Atom out{a.predicate, {}};
    out.args.reserve(a.args.size());
    for (const auto& t : a.args) {
        const Term* v = t.is_variable() ? s.find(t.name()) : nullptr;
        out.args.push_back(v ? *v : t);
    }
    return out;
}

Rule apply(const Substitution& s, const Rule& r) {
    Rule out;
    out.id            = r.id;
    out.span          = r.span;
    out.is_background = r.is_background;
    for (const auto& h : r.head) {
        out.head.push_back(apply(s, h));
    }
    for (const auto& l : r.body) {
        out.body.push_back({apply(s, l.atom), l.positive});
    }
    return out;
}

void GroundProgram::add(Rule r, std::optional<Origin> from) {
    for (const auto& h : r.head) {
        base.insert(h);
    }
    for (const auto& l : r.body) {
        base.insert(l.atom);
    }
    rules.push_back(std::move(r));
    origin.push_back(std::move(from));
}

namespace {

using Key = std::pair<std::string, std::size_t>;

class Instantiator {
public:
    explicit Instantiator(const Program& p) : prog_(p) {}

    GroundProgram run() {
        struct Instance {
            RuleId            id;
            std::size_t       index;
            std::vector<Term> values;
        };
        std::vector<std::set<std::vector<Term>>> seen(prog_.rules.size());
        std::vector<std::vector<std::string>>    vars(prog_.rules.size());
        for (std::size_t i = 0; i != prog_.rules.size(); ++i) {
            vars[i] = body_variables(prog_.rules[i]);
            if (prog_.rules[i].is_ground()) {
                seen[i].insert(std::vector<Term>{});
                add_heads(prog_.rules[i]);
            }
        }
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t i = 0; i != prog_.rules.size(); ++i) {
                const Rule& r = prog_.rules[i];
                if (r.is_ground()) {
                    continue;
                }
                std::vector<Atom> pos;
                for (const auto& a : r.positive_body()) {
                    if (!is_reserved_atom(a)) {
                        pos.push_back(a);
                    }
                }
                std::vector<std::vector<Term>> found;
                Substitution                   sub;
                match(pos, 0, sub, vars[i], found);
                for (auto& values : found) {
                    if (seen[i].insert(values).second) {
                        add_heads(apply(make_subst(vars[i], values), r));
                        changed = true;
                    }
                }
            }
        }

        std::vector<Instance> all;
        for (std::size_t i = 0; i != prog_.rules.size(); ++i) {
            for (const auto& values : seen[i]) {
                all.push_back({prog_.rules[i].id, i, values});
            }
        }
        std::sort(all.begin(), all.end(), [](const Instance& a, const Instance& b) {
            return a.id != b.id ? a.id < b.id : a.values < b.values;
        });

        GroundProgram g;
        for (const auto& r : prog_.rules) {
            g.source_ids.insert(r.id);
            for (const auto& a : r.head) {
                collect_constants(a, g.universe);
            }
            for (const auto& l : r.body) {
                collect_constants(l.atom, g.universe);
            }
        }
        for (const auto& inst : all) {
            auto sub = make_subst(vars[inst.index], inst.values);
            g.add(apply(sub, prog_.rules[inst.index]), Origin{inst.id, sub});
        }
        return g;
    }

private:
    static void collect_constants(const Atom& a, std::set<Term>& out) {
        for (const auto& t : a.args) {
            if (!t.is_variable()) {
                out.insert(t);
            }
        }
    }

    static Substitution make_subst(const std::vector<std::string>& vars, const std::vector<Term>& values) {
        Substitution s;
        for (std::size_t k = 0; k != vars.size(); ++k) {
            s.bindings.emplace_back(vars[k], values[k]);
        }
        return s;
    }

    void add_heads(const Rule& r) {
        for (const auto& h : r.head) {
            if (derivable_.insert(h).second) {
                by_pred_[{h.predicate, h.arity()}].push_back(h);
            }
        }
    }

    // Binds the variables of pos[k..] against derivable atoms; every complete
    // binding is appended to `out` as a value tuple ordered like `vars`.
    void match(const std::vector<Atom>& pos, std::size_t k, Substitution& sub, const std::vector<std::string>& vars,
               std::vector<std::vector<Term>>& out) const {
        if (k == pos.size()) {
            std::vector<Term> values;
            values.reserve(vars.size());
            for (const auto& v : vars) {
                const Term* t = sub.find(v);
                if (!t) {
                    return; // only bound through reserved atoms
                }
                values.push_back(*t);
            }
            out.push_back(std::move(values));
            return;
        }
        const Atom& pattern = pos[k];
        auto        it      = by_pred_.find({pattern.predicate, pattern.arity()});
        if (it == by_pred_.end()) {
            return;
        }
        for (const auto& cand : it->second) {
            std::size_t mark = sub.bindings.size();
            bool        ok   = true;
            for (std::size_t j = 0; ok && j != pattern.args.size(); ++j) {
                const Term& t = pattern.args[j];
                if (!t.is_variable()) {
                    ok = t == cand.args[j];
                }
                else if (const Term* b = sub.find(t.name())) {
                    ok = *b == cand.args[j];
                }
                else {
                    sub.bindings.emplace_back(t.name(), cand.args[j]);
                }
            }
            if (ok) {
                match(pos, k + 1, sub, vars, out);
            }
            sub.bindings.resize(mark);
        }
    }

    const Program&                     prog_;
    std::set<Atom>                     derivable_;
    std::map<Key, std::vector<Atom>>   by_pred_;
};

} // namespace

GroundProgram ground(const Program& p) { return Instantiator(p).run(); }

std::vector<std::pair<Substitution, Rule>> substitutions_of(const GroundProgram& g, RuleId id) {
    if (!g.source_ids.contains(id)) {
        throw Error("unknown rule id " + std::to_string(id));
    }
    std::vector<std::pair<Substitution, Rule>> out;
    for (std::size_t i = 0; i != g.rules.size(); ++i) {
        if (g.origin[i] && g.origin[i]->rule_id == id) {
            out.emplace_back(g.origin[i]->substitution, g.rules[i]);
        }
    }
    return out;
}

std::string format_ground_program(const GroundProgram& g) {
    std::ostringstream os;
    for (const auto& r : g.rules) {
        os << format_rule(r) << '\n';
    }
    return os.str();
}

} // namespace aspdbg
