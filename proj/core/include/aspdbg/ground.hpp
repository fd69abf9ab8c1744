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
#include <aspdbg/syntax.hpp>

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace aspdbg {

/// Variable bindings, kept in first-occurrence order of the variables in the rule body.
struct Substitution {
    std::vector<std::pair<std::string, Term>> bindings;

    [[nodiscard]] const Term* find(const std::string& var) const;
    [[nodiscard]] bool        empty() const { return bindings.empty(); }

    bool operator==(const Substitution&) const = default;
};

std::string format_substitution(const Substitution& s);

Atom apply(const Substitution& s, const Atom& a);
Rule apply(const Substitution& s, const Rule& r);

struct Origin {
    RuleId       rule_id = 0;
    Substitution substitution;
};

/// A variable-free program. `origin[i]` describes where `rules[i]` came from;
/// it is empty only for rules added after grounding (support rules).
struct GroundProgram {
    std::vector<Rule>                  rules;
    std::vector<std::optional<Origin>> origin;
    std::set<Term>                     universe;
    std::set<Atom>                     base;
    /// Ids of all rules of the program that was grounded.
    std::set<RuleId>                   source_ids;

    void add(Rule r, std::optional<Origin> from);
};

/// Instantiates `p` bottom-up over the atoms that may become true.
///
/// A rule instance is produced once every positive body atom is potentially
/// derivable, i.e. a head of an instance produced so far. Negative literals
/// never block an instance, debug and support atoms are always considered
/// derivable and rules that are already ground are always kept. Instances are
/// emitted verbatim: bodies are not simplified and no instance is dropped.
/// Output is ordered by origin rule id, then by the bound constants.
GroundProgram ground(const Program& p);

/// All instances of rule `id` in `g`. Throws Error for unknown ids.
std::vector<std::pair<Substitution, Rule>> substitutions_of(const GroundProgram& g, RuleId id);

std::string format_ground_program(const GroundProgram& g);

} // namespace aspdbg
