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

#include <string>
#include <vector>

namespace aspdbg {

struct SourceBuffer {
    std::string name;
    std::string text;
};

struct ParseOptions {
    /// Mark every fact as background knowledge.
    bool facts_are_background = true;
    /// Accept `_debug_`/`_support_` names. Only for re-reading generated programs.
    bool allow_reserved = false;
};

/// Parses a set of buffers into one program.
///
/// Non-background rules are numbered 1..k in source order, background rules
/// follow with k+1..n, so debug atom identifiers stay small and dense. A
/// buffer containing the line `%#background.` contributes only background
/// rules.
///
/// Throws SyntaxError or SafetyError.
Program parse_program(const std::vector<SourceBuffer>& sources, const ParseOptions& opts = {});
Program parse_program(const std::string& text, const std::string& name = "<input>", const ParseOptions& opts = {});

/// Reads files from disk and parses them. The buffer name is the path as given.
Program load_program(const std::vector<std::string>& paths, const ParseOptions& opts = {});

/// Parses a comma separated list of ground literals, e.g. `a, not b(c)`.
std::vector<Literal> parse_literals(const std::string& text, const std::string& name, std::size_t line,
                                    std::size_t column);

std::string read_file(const std::string& path);

} // namespace aspdbg
