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

#include <aspdbg/debugger.hpp>

#include <algorithm>
#include <cstdlib>

namespace aspdbg {

std::set<Atom> support_pool(const GroundProgram& g, const Atom& u) {
    std::set<Atom> q;
    auto           add = [&](const Atom& a) {
        if (!is_reserved_atom(a)) {
            q.insert(a);
        }
    };
    for (const auto& r : g.rules) {
        if (std::find(r.head.begin(), r.head.end(), u) == r.head.end()) {
            continue;
        }
        for (const auto& h : r.head) {
            if (h != u) {
                add(h);
            }
        }
        for (const auto& l : r.body) {
            add(l.atom);
        }
    }
    return q;
}

Interpretation project_to_program(const Interpretation& i) {
    Interpretation out;
    for (const auto& a : i) {
        if (!is_reserved_atom(a)) {
            out.insert(a);
        }
    }
    return out;
}

Session::Session(const Program& p, const TestCase& t, SessionOptions opts)
    : opts_(opts)
    , debug_(build_debug_program(apply_test_case(p, t)))
    , ground_(add_support_rules(aspdbg::ground(debug_.rewritten), debug_))
    , engine_(ground_) {
    for (const auto& a : ground_.base) {
        if (is_debug_atom(a)) {
            soft_.add({a, true});
        }
    }
    for (const auto& [atom, support] : debug_.support_registry) {
        soft_.add({support, false});
        supported_by_.emplace(support, atom);
    }
    for (std::size_t i = 0; i != ground_.rules.size(); ++i) {
        const Rule& r = ground_.rules[i];
        if (const Atom* d = debug_atom_of(r)) {
            debug_rule_.emplace(*d, i);
        }
        if (ground_.origin[i]) {
            const Rule* src = debug_.original.find(ground_.origin[i]->rule_id);
            if (src && src->is_background) {
                background_atoms_.insert(r.head.begin(), r.head.end());
            }
        }
    }
    if (auto m = engine_.solve(soft_)) {
        throw CoherentProgram(project_to_program(*m));
    }
}

AssumptionSet Session::answer_context() const {
    AssumptionSet a;
    for (const auto& l : answers_) {
        a.add(l);
    }
    return a;
}

AssumptionSet Session::assumptions() const {
    AssumptionSet a = soft_;
    for (const auto& l : answers_) {
        a.add(l);
    }
    return a;
}

AssumptionSet Session::relaxed(const std::vector<Literal>& removed) const {
    AssumptionSet a;
    for (const auto& l : soft_) {
        if (std::find(removed.begin(), removed.end(), l) == removed.end()) {
            a.add(l);
        }
    }
    for (const auto& l : answers_) {
        a.add(l);
    }
    return a;
}

const CoreReport& Session::require_core() const {
    if (!report_) {
        throw Error("no core computed; call step first");
    }
    return *report_;
}

const CoreReport& Session::step() {
    diagnoses_.reset();
    report_.reset();
    auto result = solve_with_core(engine_, soft_, answer_context());
    if (auto* m = std::get_if<Interpretation>(&result)) {
        throw UnexpectedlyCoherent(project_to_program(*m));
    }
    CoreReport rep;
    rep.core = std::get<Core>(result).literals;
    if (rep.core.empty() && !answers_.empty()) {
        AssumptionSet given;
        for (const auto& l : answers_) {
            given.add(l);
        }
        auto clash = solve_with_core(engine_, given);
        if (auto* c = std::get_if<Core>(&clash)) {
            rep.conflicting_expectations = c->literals;
            rep.core                     = c->literals;
        }
    }
    for (const auto& l : rep.core) {
        if (l.positive && is_debug_atom(l.atom)) {
            auto it = debug_rule_.find(l.atom);
            if (it == debug_rule_.end()) {
                continue;
            }
            std::size_t idx = it->second;
            CoreRule    cr{idx, ground_.rules[idx], 0, {}};
            if (ground_.origin[idx]) {
                cr.origin_id    = ground_.origin[idx]->rule_id;
                cr.substitution = ground_.origin[idx]->substitution;
            }
            rep.nonground_rule_ids.insert(cr.origin_id);
            rep.ground_rules.push_back(std::move(cr));
        }
        else if (!l.positive && is_support_atom(l.atom)) {
            if (auto it = supported_by_.find(l.atom); it != supported_by_.end()) {
                rep.unsupported_atoms.insert(it->second);
            }
        }
    }
    report_ = std::move(rep);
    return *report_;
}

std::vector<Diagnosis> Session::compute_diagnoses(std::size_t bound) {
    const CoreReport& rep = require_core();
    if (diagnoses_ && diagnoses_->first == bound) {
        return diagnoses_->second;
    }
    std::vector<Literal> candidates;
    for (const auto& l : rep.core) {
        if (l.positive && is_debug_atom(l.atom)) {
            candidates.push_back(l);
        }
    }
    std::vector<Diagnosis> out;
    const std::size_t      n = candidates.size();
    for (std::size_t size = 1; size <= n && out.size() < bound; ++size) {
        // combinations of `size` indexes in lexicographic order
        std::vector<std::size_t> pick(size);
        for (std::size_t k = 0; k != size; ++k) {
            pick[k] = k;
        }
        while (out.size() < bound) {
            std::vector<Literal> removed;
            for (auto k : pick) {
                removed.push_back(candidates[k]);
            }
            bool superset = std::any_of(out.begin(), out.end(), [&](const Diagnosis& d) {
                return std::all_of(d.removed.begin(), d.removed.end(), [&](const Literal& l) {
                    return std::find(removed.begin(), removed.end(), l) != removed.end();
                });
            });
            if (!superset && engine_.coherent(relaxed(removed))) {
                out.push_back({std::move(removed)});
            }
            std::size_t k = size;
            while (k > 0 && pick[k - 1] == n - size + (k - 1)) {
                --k;
            }
            if (k == 0) {
                break;
            }
            ++pick[k - 1];
            for (std::size_t j = k; j != size; ++j) {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    diagnoses_.emplace(bound, out);
    return out;
}

std::vector<RankedQuery> Session::ranked_queries() {
    const CoreReport& rep = require_core();
    std::set<Atom>    answered;
    for (const auto& l : answers_) {
        answered.insert(l.atom);
    }
    std::set<Atom> hinted;
    for (const auto& u : rep.unsupported_atoms) {
        auto q = support_pool(ground_, u);
        hinted.insert(q.begin(), q.end());
    }
    std::map<Atom, std::size_t> hits;
    std::size_t                 samples = 0;
    for (const auto& d : compute_diagnoses(opts_.diagnosis_bound)) {
        for (const auto& m : engine_.enumerate(relaxed(d.removed), opts_.answers_per_diagnosis)) {
            ++samples;
            for (const auto& a : m) {
                if (!is_reserved_atom(a) && !answered.contains(a) && !background_atoms_.contains(a)) {
                    ++hits[a];
                }
            }
        }
    }
    std::vector<RankedQuery> out;
    for (const auto& [atom, n] : hits) {
        out.push_back({atom, n, samples, hinted.contains(atom)});
    }
    // distance from a half split: |hits/samples - 1/2| scaled by 2*samples
    auto distance = [](const RankedQuery& q) {
        return std::llabs(2 * static_cast<long long>(q.hits) - static_cast<long long>(q.samples));
    };
    std::stable_sort(out.begin(), out.end(), [&](const RankedQuery& a, const RankedQuery& b) {
        auto da = distance(a), db = distance(b);
        if (da != db) {
            return da < db;
        }
        if (a.support_hint != b.support_hint) {
            return a.support_hint;
        }
        return a.atom < b.atom;
    });
    if (out.size() > opts_.max_queries) {
        out.resize(opts_.max_queries);
    }
    return out;
}

std::optional<Atom> Session::compute_query() {
    auto q = ranked_queries();
    if (q.empty()) {
        return std::nullopt;
    }
    return q.front().atom;
}

std::set<Atom> Session::support_query_pool(const Atom& u) const {
    const CoreReport& rep = require_core();
    if (!rep.unsupported_atoms.contains(u)) {
        throw Error("atom is not flagged unsupported: " + format_atom(u));
    }
    return support_pool(ground_, u);
}

void Session::answer_query(const Atom& q, bool expected_true) {
    if (!q.is_ground() || is_reserved_atom(q)) {
        throw Error("cannot answer for atom " + format_atom(q));
    }
    Literal l{q, expected_true};
    if (std::find(answers_.begin(), answers_.end(), l) != answers_.end()) {
        return;
    }
    if (std::find(answers_.begin(), answers_.end(), l.complement()) != answers_.end()) {
        throw ContradictoryAnswer("atom " + format_atom(q) + " was already answered " +
                                  (expected_true ? "false" : "true"));
    }
    answers_.push_back(std::move(l));
    report_.reset();
    diagnoses_.reset();
}

bool Session::undo() {
    if (answers_.empty()) {
        return false;
    }
    answers_.pop_back();
    report_.reset();
    diagnoses_.reset();
    return true;
}

} // namespace aspdbg
