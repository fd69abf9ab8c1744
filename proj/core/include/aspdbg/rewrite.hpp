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

#include <aspdbg/ground.hpp>
#include <aspdbg/syntax.hpp>

#include <map>
#include <string>
#include <vector>

namespace aspdbg {

/// Literals asserted to hold together in some answer set.
struct TestCase {
    std::string          name;
    std::vector<Literal> literals;
    Span                 span; ///< location of the assertion in the test file
};

/// Adds `:- complement(l).` for every asserted literal. The new constraints
/// are not background knowledge and get fresh ids after `p.max_id()`.
Program apply_test_case(const Program& p, const TestCase& t);

struct DebugAtom {
    std::string              predicate;
    std::vector<std::string> variables;
};

struct DebugProgram {
    Program                     original;
    Program                     rewritten;
    std::map<RuleId, DebugAtom> debug_registry;
    /// atom -> its supporting atom; filled by add_support_rules
    std::map<Atom, Atom>        support_registry;
};

std::string debug_predicate(RuleId id);
Atom        support_atom_for(const Atom& a);

/// Appends `_debug_<id>(vars)` to every non-background rule; `vars` lists the
/// body variables in order of first occurrence. Background rules are copied.
DebugProgram build_debug_program(const Program& p);

/// Returns `g` extended by `a :- _support_a.` for every atom `a` of `g` that
/// is neither a debug nor a support atom, and records the pairs in `d`.
GroundProgram add_support_rules(const GroundProgram& g, DebugProgram& d);

/// The debug atom in the body of a ground rule of a debugging program, if any.
const Atom* debug_atom_of(const Rule& ground_rule);

/// Drops debug literals from a rule, for display.
Rule strip_debug(const Rule& r);

} // namespace aspdbg
