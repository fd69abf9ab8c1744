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
#include <aspdbg/solver.hpp>
#include <aspdbg/syntax.hpp>

#include <set>
#include <string>
#include <vector>

namespace aspdbg::testing {

/// Stable models by exhaustive search over interpretations. Atoms fixed by
/// `assume` are not enumerated; debug and support atoms are free, as in the
/// engine. Throws std::length_error beyond 24 open atoms.
std::vector<Interpretation> brute_force_answer_sets(const GroundProgram& g, const AssumptionSet& assume = {});

bool brute_force_coherent(const GroundProgram& g, const AssumptionSet& assume = {});

/// Every instance of every rule over the constants of the program.
GroundProgram naive_ground(const Program& p);

/// Rules of a ground program as text, for set comparisons.
std::multiset<std::string> rule_texts(const GroundProgram& g);

std::set<Interpretation> as_set(const std::vector<Interpretation>& v);

/// Keeps only atoms that are neither debug nor support atoms.
std::set<Interpretation> project(const std::vector<Interpretation>& v);

} // namespace aspdbg::testing
