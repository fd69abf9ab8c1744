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

#include "suites.hpp"

#include "generators.hpp"
#include "oracle.hpp"

#include <aspdbg/debugger.hpp>
#include <aspdbg/parser.hpp>
#include <aspdbg/rewrite.hpp>

#include <random>
#include <variant>

namespace aspdbg::testing {

void SuiteResult::fail(std::string what) {
    if (failures.size() < 20) {
        failures.push_back(std::move(what));
    }
}

namespace {

std::string describe(const Program& p) {
    std::string out;
    for (const auto& r : p.rules) {
        out += format_rule(r) + " ";
    }
    return out;
}

AssumptionSet random_assumptions(std::mt19937& rng, const GroundProgram& g, std::size_t max) {
    std::vector<Atom> atoms(g.base.begin(), g.base.end());
    AssumptionSet     a;
    if (atoms.empty()) {
        return a;
    }
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, max)(rng);
    for (std::size_t i = 0; i != n; ++i) {
        const Atom& at = atoms[std::uniform_int_distribution<std::size_t>(0, atoms.size() - 1)(rng)];
        Literal     l{at, std::bernoulli_distribution(0.5)(rng)};
        if (!a.contains(l.complement())) {
            a.add(l);
        }
    }
    return a;
}

AssumptionSet all_debug_true(const GroundProgram& g) {
    AssumptionSet a;
    for (const auto& atom : g.base) {
        if (is_debug_atom(atom)) {
            a.add({atom, true});
        }
    }
    return a;
}

void check_core(SuiteResult& r, const Engine& e, const AssumptionSet& assume, const AssumptionSet& context,
                const std::string& where) {
    auto res = solve_with_core(e, assume, context);
    if (auto* m = std::get_if<Interpretation>(&res)) {
        AssumptionSet all = context;
        all.add_all(assume);
        ++r.checked;
        if (!e.coherent(all)) {
            r.fail("answer set returned for an incoherent call: " + where);
        }
        return;
    }
    const auto&   core = std::get<Core>(res).literals;
    AssumptionSet c    = context;
    for (const auto& l : core) {
        ++r.checked;
        if (!assume.contains(l)) {
            r.fail("core literal outside the assumptions: " + format_literal(l) + " in " + where);
        }
        if (context.contains(l)) {
            r.fail("context literal in core: " + where);
        }
        c.add(l);
    }
    ++r.checked;
    if (e.coherent(c)) {
        r.fail("core is not incoherent: " + where);
    }
    for (const auto& l : core) {
        AssumptionSet less = c;
        less.remove(l);
        ++r.checked;
        if (!e.coherent(less)) {
            r.fail("core is not 1-minimal at " + format_literal(l) + ": " + where);
        }
    }
}

} // namespace

SuiteResult oracle_equivalence(std::uint32_t seed, std::size_t programs) {
    SuiteResult  r;
    std::mt19937 rng(seed);
    for (std::size_t i = 0; i != programs; ++i) {
        Program       p = random_ground_program(rng);
        GroundProgram g = ground(p);
        ++r.cases;
        auto got      = enumerate(g);
        auto expected = as_set(brute_force_answer_sets(g));
        ++r.checked;
        if (as_set(got) != expected || got.size() != expected.size()) {
            r.fail("answer sets differ for " + describe(p));
        }
        for (const auto& m : got) {
            ++r.checked;
            if (!is_answer_set(g, m)) {
                r.fail("is_answer_set rejects an enumerated model of " + describe(p));
            }
        }
        // the same under random assumptions
        AssumptionSet a = random_assumptions(rng, g, 3);
        ++r.checked;
        if (as_set(enumerate(g, a)) != as_set(brute_force_answer_sets(g, a))) {
            r.fail("answer sets under assumptions differ for " + describe(p));
        }
    }
    return r;
}

SuiteResult core_properties(std::uint32_t seed, std::size_t programs) {
    SuiteResult  r;
    std::mt19937 rng(seed);
    for (std::size_t i = 0; i != programs; ++i) {
        Program       p = random_ground_program(rng);
        GroundProgram g = ground(p);
        Engine        e(g);
        ++r.cases;
        check_core(r, e, random_assumptions(rng, g, 5), {}, describe(p));

        auto          d  = build_debug_program(p);
        auto          gd = add_support_rules(ground(d.rewritten), d);
        Engine        ed(gd);
        AssumptionSet soft = all_debug_true(gd);
        for (const auto& [atom, s] : d.support_registry) {
            soft.add({s, false});
        }
        if (!ed.coherent(soft)) {
            check_core(r, ed, soft, {}, "debug program of " + describe(p));
        }
    }
    return r;
}

SuiteResult semantics_preservation(std::uint32_t seed, std::size_t programs) {
    SuiteResult  r;
    std::mt19937 rng(seed);
    for (std::size_t i = 0; i != programs; ++i) {
        Program p        = random_ground_program(rng);
        auto    expected = as_set(brute_force_answer_sets(ground(p)));
        auto    d        = build_debug_program(p);
        auto    gd       = ground(d.rewritten);
        ++r.cases;

        ++r.checked;
        if (project(enumerate(gd, all_debug_true(gd))) != expected) {
            r.fail("debug atoms change the answer sets of " + describe(p));
        }
        auto          gs = add_support_rules(gd, d);
        AssumptionSet a  = all_debug_true(gs);
        for (const auto& [atom, s] : d.support_registry) {
            a.add({s, false});
        }
        ++r.checked;
        if (project(enumerate(gs, a)) != expected) {
            r.fail("support atoms change the answer sets of " + describe(p));
        }
        ++r.checked;
        if (project(brute_force_answer_sets(gs, a)) != expected) {
            r.fail("oracle disagrees on the support-extended program of " + describe(p));
        }
    }
    return r;
}

SuiteResult assumption_monotonicity(std::uint32_t seed, std::size_t programs) {
    SuiteResult  r;
    std::mt19937 rng(seed);
    for (std::size_t i = 0; i != programs; ++i) {
        Program       p = random_ground_program(rng);
        GroundProgram g = ground(p);
        Engine        e(g);
        ++r.cases;
        AssumptionSet a = random_assumptions(rng, g, 3);
        if (e.coherent(a)) {
            continue;
        }
        AssumptionSet more = a;
        for (const auto& l : random_assumptions(rng, g, 4)) {
            if (!more.contains(l.complement())) {
                more.add(l);
            }
        }
        ++r.checked;
        if (e.coherent(more)) {
            r.fail("more assumptions made " + describe(p) + " coherent");
        }
    }
    return r;
}

SuiteResult test_case_reduction(std::uint32_t seed, std::size_t programs) {
    SuiteResult  r;
    std::mt19937 rng(seed);
    for (std::size_t i = 0; i != programs; ++i) {
        Program       p = random_ground_program(rng);
        GroundProgram g = ground(p);
        ++r.cases;
        TestCase t;
        t.name = "random";
        for (const auto& l : random_assumptions(rng, g, 3)) {
            t.literals.push_back(l);
        }
        bool expected = false;
        for (const auto& m : brute_force_answer_sets(g)) {
            bool all = true;
            for (const auto& l : t.literals) {
                all = all && (m.contains(l.atom) == l.positive);
            }
            expected = expected || all;
        }
        ++r.checked;
        if (is_coherent(ground(apply_test_case(p, t))) != expected) {
            r.fail("test case reduction fails on " + describe(p));
        }
    }
    return r;
}

SuiteResult grounding_soundness(std::uint32_t seed, std::size_t programs) {
    SuiteResult  r;
    std::mt19937 rng(seed);
    for (std::size_t i = 0; i != programs; ++i) {
        std::string text = random_nonground_text(rng);
        Program     p    = parse_program(text, "random.lp");
        ++r.cases;
        GroundProgram g     = ground(p);
        GroundProgram naive = naive_ground(p);
        auto          all   = rule_texts(naive);
        for (std::size_t k = 0; k != g.rules.size(); ++k) {
            ++r.checked;
            if (!all.contains(format_rule(g.rules[k]))) {
                r.fail("instance " + format_rule(g.rules[k]) + " is not a naive instance of " + text);
            }
            if (g.origin[k] && g.rules[k].body.size() != p.find(g.origin[k]->rule_id)->body.size()) {
                r.fail("body simplified in " + format_rule(g.rules[k]));
            }
        }
        ++r.checked;
        auto got = as_set(enumerate(g));
        if (got != as_set(enumerate(naive))) {
            r.fail("grounding changes the answer sets of " + text);
        }
        if (g.base.size() <= 20) {
            ++r.checked;
            if (got != as_set(brute_force_answer_sets(g))) {
                r.fail("oracle disagrees on the grounding of " + text);
            }
        }
    }
    return r;
}

SuiteResult session_invariants(std::uint32_t seed, std::size_t programs) {
    SuiteResult  r;
    std::mt19937 rng(seed);
    for (std::size_t i = 0; i != programs; ++i) {
        Program p = random_ground_program(rng);
        if (is_coherent(ground(p))) {
            continue;
        }
        ++r.cases;
        Session s(p, {});
        s.step();
        auto diagnoses = s.compute_diagnoses(16);
        for (const auto& d : diagnoses) {
            AssumptionSet relaxed;
            for (const auto& l : s.assumptions()) {
                if (std::find(d.removed.begin(), d.removed.end(), l) == d.removed.end()) {
                    relaxed.add(l);
                }
            }
            ++r.checked;
            if (!is_coherent(s.ground(), relaxed)) {
                r.fail("diagnosis does not restore coherence in " + describe(p));
            }
            for (const auto& other : diagnoses) {
                bool subset = other.removed.size() < d.removed.size();
                for (const auto& l : other.removed) {
                    subset = subset && std::find(d.removed.begin(), d.removed.end(), l) != d.removed.end();
                }
                ++r.checked;
                if (subset) {
                    r.fail("diagnosis is not subset-minimal in " + describe(p));
                }
            }
        }
        if (diagnoses.empty()) {
            continue;
        }
        // answer every query from one intended answer set
        AssumptionSet relaxed;
        for (const auto& l : s.assumptions()) {
            if (std::find(diagnoses[0].removed.begin(), diagnoses[0].removed.end(), l) == diagnoses[0].removed.end()) {
                relaxed.add(l);
            }
        }
        auto intended = Engine(s.ground()).solve(relaxed);
        if (!intended) {
            continue;
        }
        for (int round = 0; round != 4; ++round) {
            auto q = s.compute_query();
            if (!q) {
                break;
            }
            s.answer_query(*q, intended->contains(*q));
            const auto& rep = s.step();
            for (const auto& l : rep.core) {
                ++r.checked;
                if (!is_reserved_atom(l.atom)) {
                    r.fail("answer " + format_literal(l) + " in a core of " + describe(p));
                }
            }
        }
    }
    return r;
}

} // namespace aspdbg::testing
