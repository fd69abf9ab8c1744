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

#pragma once

#include <aspdbg/error.hpp>
#include <aspdbg/ground.hpp>
#include <aspdbg/rewrite.hpp>
#include <aspdbg/solver.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace aspdbg {

struct SessionOptions {
    std::size_t answers_per_diagnosis = 4;  ///< answer sets sampled per relaxed program
    std::size_t diagnosis_bound       = 16; ///< diagnoses considered for queries
    std::size_t max_queries           = 9;  ///< length of the ranked query list
};

/// The program with the test case applied is coherent: the test passes.
class CoherentProgram : public Error {
public:
    explicit CoherentProgram(Interpretation witness)
        : Error("program is coherent under the test case; nothing to debug"), witness_(std::move(witness)) {}
    [[nodiscard]] const Interpretation& witness() const { return witness_; }

private:
    Interpretation witness_;
};

/// The user's answers are satisfied by some answer set of the debugging
/// program, so the assumptions no longer conflict.
class UnexpectedlyCoherent : public Error {
public:
    explicit UnexpectedlyCoherent(Interpretation answer_set)
        : Error("expectations are satisfied by an answer set"), answer_set_(std::move(answer_set)) {}
    [[nodiscard]] const Interpretation& answer_set() const { return answer_set_; }

private:
    Interpretation answer_set_;
};

class ContradictoryAnswer : public Error {
public:
    using Error::Error;
};

struct CoreRule {
    std::size_t  ground_index = 0; ///< index into Session::ground().rules
    Rule         rule;             ///< ground rule including its debug atom
    RuleId       origin_id = 0;
    Substitution substitution;
};

struct CoreReport {
    std::vector<Literal>  core;
    std::vector<CoreRule> ground_rules;
    std::set<RuleId>      nonground_rule_ids;
    std::set<Atom>        unsupported_atoms;
    /// Non-empty when the user's answers clash with the background knowledge on
    /// their own; holds a minimal clashing subset of the answers.
    std::vector<Literal>  conflicting_expectations;
};

struct Diagnosis {
    std::vector<Literal> removed;
};

struct RankedQuery {
    Atom        atom;
    std::size_t hits    = 0; ///< sampled answer sets containing the atom
    std::size_t samples = 0;
    bool        support_hint = false; ///< atom belongs to a missing-support pool
};

/// Atoms that may explain why `u` is not derived: for every rule with `u` in
/// the head, the other head atoms, the positive body atoms and the atoms of
/// negative body literals. Debug and support atoms are left out.
std::set<Atom> support_pool(const GroundProgram& g, const Atom& u);

/// One interactive debugging session over a program and a failing test case.
///
/// Assumptions are all ground debug atoms (true) followed by all supporting
/// atoms (false), each group in atom order. Answers are kept apart: they are
/// fixed during core minimization and diagnosis search.
class Session {
public:
    /// Throws CoherentProgram if the test case passes.
    Session(const Program& p, const TestCase& t, SessionOptions opts = {});

    /// Computes a minimal core under the current assumptions and maps it back
    /// to rules. Throws UnexpectedlyCoherent if the assumptions no longer conflict.
    const CoreReport& step();

    /// Subset-minimal diagnoses over the debug atoms of the current core,
    /// smallest first. Throws Error if no core has been computed.
    std::vector<Diagnosis> compute_diagnoses(std::size_t bound);

    /// Candidate query atoms, best first, at most `max_queries`.
    std::vector<RankedQuery> ranked_queries();
    std::optional<Atom>      compute_query();

    /// Throws Error unless `u` is flagged unsupported by the current report.
    std::set<Atom> support_query_pool(const Atom& u) const;

    /// Records that `q` is expected true (or false). Answering twice with the
    /// same value is a no-op; with the opposite value it throws ContradictoryAnswer.
    void answer_query(const Atom& q, bool expected_true);
    /// Retracts the last answer. Returns false if there is none.
    bool undo();

    [[nodiscard]] const Program&              program() const { return debug_.original; }
    [[nodiscard]] const DebugProgram&         debug_program() const { return debug_; }
    [[nodiscard]] const GroundProgram&        ground() const { return ground_; }
    [[nodiscard]] const AssumptionSet&        base_assumptions() const { return soft_; }
    [[nodiscard]] AssumptionSet               assumptions() const;
    [[nodiscard]] const std::vector<Literal>& answers() const { return answers_; }
    [[nodiscard]] const std::optional<CoreReport>& report() const { return report_; }
    [[nodiscard]] const SessionOptions&       options() const { return opts_; }
    /// Atoms never offered as queries: heads of background rules.
    [[nodiscard]] const std::set<Atom>&       background_atoms() const { return background_atoms_; }

private:
    [[nodiscard]] AssumptionSet answer_context() const;
    [[nodiscard]] AssumptionSet relaxed(const std::vector<Literal>& removed) const;
    [[nodiscard]] const CoreReport& require_core() const;

    SessionOptions                     opts_;
    DebugProgram                       debug_;
    GroundProgram                      ground_;
    Engine                             engine_;
    AssumptionSet                      soft_;
    std::vector<Literal>               answers_;
    std::map<Atom, std::size_t>        debug_rule_;
    std::map<Atom, Atom>               supported_by_;
    std::set<Atom>                     background_atoms_;
    std::optional<CoreReport>          report_;
    std::optional<std::pair<std::size_t, std::vector<Diagnosis>>> diagnoses_;
};

/// Drops debug and support atoms.
Interpretation project_to_program(const Interpretation& i);

} // namespace aspdbg
