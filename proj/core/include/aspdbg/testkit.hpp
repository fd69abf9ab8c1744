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

#include <aspdbg/rewrite.hpp>
#include <aspdbg/syntax.hpp>

#include <string>
#include <vector>

namespace aspdbg {

/// Parses the text of a `.test` file. Lines of the form
/// `assert true: a, not b.` add literals; `%` starts a comment. An empty
/// file asserts only that some answer set exists.
TestCase parse_test(const std::string& text, const std::string& file, const std::string& name);

/// One test case per file, named by the file stem. Throws SyntaxError.
std::vector<TestCase> load_tests(const std::vector<std::string>& paths);

/// All `*.test` files of a directory, sorted by name.
std::vector<std::string> list_test_files(const std::string& dir);

enum class TestResult { pass, fail };

const char* to_string(TestResult r);

/// Fails iff the program with the test constraints added is incoherent.
TestResult run_test(const Program& p, const TestCase& t);

} // namespace aspdbg
