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

#include <aspdbg/solver.hpp>

#include <aspdbg/error.hpp>

#include "sat.hpp"

#include <algorithm>

namespace aspdbg {

using detail::Lit;
using detail::neg_lit;
using detail::pos_lit;

AssumptionSet::AssumptionSet(std::initializer_list<Literal> lits) {
    for (const auto& l : lits) {
        add(l);
    }
}

bool AssumptionSet::add(const Literal& l) {
    if (contains(l.complement())) {
        throw Error("complementary assumption: " + format_literal(l));
    }
    if (contains(l)) {
        return false;
    }
    lits_.push_back(l);
    return true;
}

void AssumptionSet::add_all(const AssumptionSet& other) {
    for (const auto& l : other) {
        add(l);
    }
}

bool AssumptionSet::remove(const Literal& l) {
    auto it = std::find(lits_.begin(), lits_.end(), l);
    if (it == lits_.end()) {
        return false;
    }
    lits_.erase(it);
    return true;
}

bool AssumptionSet::contains(const Literal& l) const { return std::find(lits_.begin(), lits_.end(), l) != lits_.end(); }

Engine::Engine(const GroundProgram& g) : atoms_(g.base.begin(), g.base.end()) {
    const int n = static_cast<int>(atoms_.size());
    for (int i = 0; i != n; ++i) {
        index_.emplace(atoms_[i], i);
        free_.push_back(is_reserved_atom(atoms_[i]));
    }
    std::vector<std::vector<int>> head_rules(atoms_.size());
    for (const auto& r : g.rules) {
        CompiledRule c;
        for (const auto& h : r.head) {
            c.head.push_back(index_.at(h));
        }
        for (const auto& l : r.body) {
            (l.positive ? c.pos : c.neg).push_back(index_.at(l.atom));
        }
        for (int h : c.head) {
            head_rules[h].push_back(static_cast<int>(rules_.size()));
        }
        rules_.push_back(std::move(c));
    }

    auto s = std::make_unique<detail::Sat>(n);
    for (const auto& r : rules_) {
        // body -> head
        std::vector<Lit> c;
        for (int a : r.pos) {
            c.push_back(neg_lit(a));
        }
        for (int a : r.neg) {
            c.push_back(pos_lit(a));
        }
        for (int a : r.head) {
            c.push_back(pos_lit(a));
        }
        s->add_clause(std::move(c));
        // body variable -> body
        int b = s->new_var();
        body_var_.push_back(b);
        for (int a : r.pos) {
            s->add_clause({neg_lit(b), pos_lit(a)});
        }
        for (int a : r.neg) {
            s->add_clause({neg_lit(b), neg_lit(a)});
        }
    }
    // a true atom needs a rule with a true body and no other true head atom
    for (int a = 0; a != n; ++a) {
        if (free_[a]) {
            continue;
        }
        std::vector<Lit> support = {neg_lit(a)};
        for (int ri : head_rules[a]) {
            const auto& r = rules_[ri];
            if (r.head.size() == 1) {
                support.push_back(pos_lit(body_var_[ri]));
                continue;
            }
            int y = s->new_var();
            s->add_clause({neg_lit(y), pos_lit(body_var_[ri])});
            for (int h : r.head) {
                if (h != a) {
                    s->add_clause({neg_lit(y), neg_lit(h)});
                }
            }
            support.push_back(pos_lit(y));
        }
        s->add_clause(std::move(support));
    }
    base_ = std::move(s);
}

Engine::~Engine()                            = default;
Engine::Engine(Engine&&) noexcept            = default;
Engine& Engine::operator=(Engine&&) noexcept = default;

int Engine::index_of(const Atom& a) const {
    auto it = index_.find(a);
    return it == index_.end() ? -1 : it->second;
}

std::vector<int> Engine::unfounded(const std::vector<bool>& m) const {
    // reduct rules whose positive body holds in m, heads restricted to m
    std::vector<std::vector<int>> heads, bodies;
    bool                          normal = true;
    for (const auto& r : rules_) {
        if (std::any_of(r.neg.begin(), r.neg.end(), [&](int a) { return m[a]; }) ||
            std::any_of(r.pos.begin(), r.pos.end(), [&](int a) { return !m[a]; })) {
            continue;
        }
        std::vector<int> h;
        for (int a : r.head) {
            if (m[a]) {
                h.push_back(a);
            }
        }
        normal = normal && h.size() <= 1;
        heads.push_back(std::move(h));
        bodies.push_back(r.pos);
    }
    const int        n = static_cast<int>(atoms_.size());
    std::vector<int> out;
    if (normal) {
        std::vector<bool> least(atoms_.size(), false);
        for (int a = 0; a != n; ++a) {
            least[a] = free_[a] && m[a];
        }
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t k = 0; k != heads.size(); ++k) {
                if (heads[k].empty() || least[heads[k][0]]) {
                    continue;
                }
                if (std::all_of(bodies[k].begin(), bodies[k].end(), [&](int a) { return least[a]; })) {
                    least[heads[k][0]] = true;
                    changed            = true;
                }
            }
        }
        for (int a = 0; a != n; ++a) {
            if (m[a] && !least[a]) {
                out.push_back(a);
            }
        }
        return out;
    }
    detail::Sat      sat(n);
    std::vector<Lit> shrink;
    for (int a = 0; a != n; ++a) {
        if (!m[a]) {
            sat.add_clause({neg_lit(a)});
        }
        else if (free_[a]) {
            sat.add_clause({pos_lit(a)});
        }
        else {
            shrink.push_back(neg_lit(a));
        }
    }
    if (shrink.empty()) {
        return out;
    }
    sat.add_clause(std::move(shrink));
    for (std::size_t k = 0; k != heads.size(); ++k) {
        std::vector<Lit> c;
        for (int a : bodies[k]) {
            c.push_back(neg_lit(a));
        }
        for (int a : heads[k]) {
            c.push_back(pos_lit(a));
        }
        sat.add_clause(std::move(c));
    }
    if (sat.solve({})) {
        for (int a = 0; a != n; ++a) {
            if (m[a] && sat.model()[a] == 0) {
                out.push_back(a);
            }
        }
    }
    return out;
}

void Engine::add_loop_formula(detail::Sat& s, const std::vector<int>& u) const {
    std::vector<bool> in_u(atoms_.size(), false);
    for (int a : u) {
        in_u[a] = true;
    }
    // some rule with a head atom in u and no positive body atom in u must fire
    // with its head atoms outside u false
    std::vector<Lit> external;
    for (std::size_t ri = 0; ri != rules_.size(); ++ri) {
        const auto& r = rules_[ri];
        if (std::none_of(r.head.begin(), r.head.end(), [&](int a) { return in_u[a]; }) ||
            std::any_of(r.pos.begin(), r.pos.end(), [&](int a) { return in_u[a]; })) {
            continue;
        }
        std::vector<int> others;
        for (int h : r.head) {
            if (!in_u[h]) {
                others.push_back(h);
            }
        }
        if (others.empty()) {
            external.push_back(pos_lit(body_var_[ri]));
            continue;
        }
        int y = s.new_var();
        s.add_clause({neg_lit(y), pos_lit(body_var_[ri])});
        for (int h : others) {
            s.add_clause({neg_lit(y), neg_lit(h)});
        }
        external.push_back(pos_lit(y));
    }
    for (int a : u) {
        std::vector<Lit> c = external;
        c.push_back(neg_lit(a));
        s.add_clause(std::move(c));
    }
}

void Engine::search(const AssumptionSet& assume, const std::function<bool(const Interpretation&)>& on_model) const {
    const int         n = static_cast<int>(atoms_.size());
    std::vector<Lit>  lits;
    std::vector<bool> fixed(atoms_.size(), false);
    Interpretation    extra; // true free atoms the program does not mention
    for (const auto& l : assume) {
        int k = index_of(l.atom);
        if (k < 0) {
            if (l.positive) {
                if (!is_reserved_atom(l.atom)) {
                    return;
                }
                extra.insert(l.atom);
            }
            continue;
        }
        lits.push_back(l.positive ? pos_lit(k) : neg_lit(k));
        fixed[k] = true;
    }
    detail::Sat s = *base_;
    while (s.solve(lits)) {
        std::vector<bool> m(atoms_.size());
        for (int a = 0; a != n; ++a) {
            m[a] = s.model()[a] == 1;
        }
        if (auto u = unfounded(m); !u.empty()) {
            add_loop_formula(s, u);
            continue;
        }
        Interpretation out = extra;
        for (int a = 0; a != n; ++a) {
            if (m[a]) {
                out.insert(atoms_[a]);
            }
        }
        if (!on_model(out)) {
            return;
        }
        std::vector<Lit> block;
        for (int a = 0; a != n; ++a) {
            if (!fixed[a]) {
                block.push_back(m[a] ? neg_lit(a) : pos_lit(a));
            }
        }
        if (block.empty() || !s.add_clause(std::move(block))) {
            return;
        }
    }
}

std::optional<Interpretation> Engine::solve(const AssumptionSet& assume) const {
    std::optional<Interpretation> out;
    search(assume, [&](const Interpretation& m) {
        out = m;
        return false;
    });
    return out;
}

std::vector<Interpretation> Engine::enumerate(const AssumptionSet& assume, std::size_t limit) const {
    std::vector<Interpretation> out;
    if (limit == 0) {
        return out;
    }
    search(assume, [&](const Interpretation& m) {
        out.push_back(m);
        return out.size() < limit;
    });
    return out;
}

bool Engine::coherent(const AssumptionSet& assume) const { return solve(assume).has_value(); }

bool Engine::is_minimal(const Interpretation& m) const {
    std::vector<bool> v(atoms_.size(), false);
    for (const auto& a : m) {
        int k = index_of(a);
        if (k < 0) {
            if (!is_reserved_atom(a)) {
                return false;
            }
            continue;
        }
        v[k] = true;
    }
    return unfounded(v).empty();
}

bool is_model(const GroundProgram& g, const Interpretation& i) {
    for (const auto& r : g.rules) {
        bool body = std::all_of(r.body.begin(), r.body.end(),
                                [&](const Literal& l) { return i.contains(l.atom) == l.positive; });
        if (body && std::none_of(r.head.begin(), r.head.end(), [&](const Atom& a) { return i.contains(a); })) {
            return false;
        }
    }
    return true;
}

GroundProgram reduct(const GroundProgram& g, const Interpretation& i) {
    GroundProgram out;
    out.universe   = g.universe;
    out.source_ids = g.source_ids;
    for (std::size_t k = 0; k != g.rules.size(); ++k) {
        const auto& r = g.rules[k];
        if (std::any_of(r.body.begin(), r.body.end(),
                        [&](const Literal& l) { return !l.positive && i.contains(l.atom); })) {
            continue;
        }
        Rule s = r;
        std::erase_if(s.body, [](const Literal& l) { return !l.positive; });
        out.rules.push_back(std::move(s));
        out.origin.push_back(g.origin[k]);
    }
    out.base = g.base;
    return out;
}

bool is_answer_set(const GroundProgram& g, const Interpretation& m) {
    return is_model(g, m) && Engine(g).is_minimal(m);
}

std::vector<Interpretation> enumerate(const GroundProgram& g, const AssumptionSet& assume, std::size_t limit) {
    return Engine(g).enumerate(assume, limit);
}

bool is_coherent(const GroundProgram& g, const AssumptionSet& assume) { return Engine(g).coherent(assume); }

std::variant<Interpretation, Core> solve_with_core(const Engine& e, const AssumptionSet& assume,
                                                   const AssumptionSet& context) {
    auto with_context = [&](const std::vector<Literal>& lits) {
        AssumptionSet a = context;
        for (const auto& l : lits) {
            a.add(l);
        }
        return a;
    };
    if (auto m = e.solve(with_context(assume.literals()))) {
        return *m;
    }
    std::vector<Literal> core = assume.literals();
    for (std::size_t i = 0; i < core.size();) {
        std::vector<Literal> candidate = core;
        candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(i));
        if (!e.coherent(with_context(candidate))) {
            core = std::move(candidate);
        }
        else {
            ++i;
        }
    }
    return Core{std::move(core)};
}

std::variant<Interpretation, Core> solve_with_core(const GroundProgram& g, const AssumptionSet& assume,
                                                   const AssumptionSet& context) {
    return solve_with_core(Engine(g), assume, context);
}

std::string format_interpretation(const Interpretation& i) {
    std::string out;
    for (const auto& a : i) {
        if (!out.empty()) {
            out += ' ';
        }
        out += format_atom(a);
    }
    return out;
}

} // namespace aspdbg
