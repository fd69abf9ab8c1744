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

#include <aspdbg/syntax.hpp>

#include <random>
#include <string>

namespace aspdbg::testing {

struct GroundShape {
    std::size_t max_atoms = 12;
    std::size_t max_rules = 10;
    double      negation  = 0.35; ///< chance that a body literal is negative
};

/// Propositional program over atoms a0..a(n-1) mixing facts, constraints,
/// normal and disjunctive rules. Every rule is a non-background rule.
Program random_ground_program(std::mt19937& rng, const GroundShape& shape = {});

/// Safe non-ground program text: facts over v/1 and e/2 plus rules deriving
/// p/1, q/2 and r/0.
std::string random_nonground_text(std::mt19937& rng);

/// A rule with one variable missing from its positive body; returns the rule
/// text and that variable.
std::pair<std::string, std::string> random_unsafe_rule(std::mt19937& rng);

} // namespace aspdbg::testing
