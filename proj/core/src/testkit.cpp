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

#include <aspdbg/testkit.hpp>

#include <aspdbg/ground.hpp>
#include <aspdbg/parser.hpp>
#include <aspdbg/solver.hpp>

#include <algorithm>
#include <filesystem>
#include <regex>
#include <sstream>

namespace aspdbg {

TestCase parse_test(const std::string& text, const std::string& file, const std::string& name) {
    static const std::regex assertion(R"(^(\s*assert\s+true\s*:)(.*)$)");
    TestCase                t;
    t.name      = name;
    t.span.file = file;
    std::istringstream in(text);
    std::string        line;
    std::size_t        lineno = 0, offset = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t line_offset = offset;
        offset += line.size() + 1;
        if (auto pct = line.find('%'); pct != std::string::npos) {
            line.erase(pct);
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::smatch m;
        if (!std::regex_match(line, m, assertion)) {
            auto col = line.find_first_not_of(" \t") + 1;
            throw SyntaxError(file, lineno, col, "expected 'assert true: <literals>.'");
        }
        std::string body = m[2].str();
        auto        last = body.find_last_not_of(" \t\r");
        if (last == std::string::npos || body[last] != '.') {
            throw SyntaxError(file, lineno, line.find_last_not_of(" \t\r") + 2, "expected '.' after the asserted literals");
        }
        auto lits = parse_literals(body, file, lineno, m[1].length() + 1);
        if (t.span.line == 0) {
            t.span.line   = lineno;
            t.span.column = line.find_first_not_of(" \t") + 1;
            t.span.begin  = line_offset;
        }
        t.span.end = line_offset + line.size();
        for (auto& l : lits) {
            if (std::find(t.literals.begin(), t.literals.end(), l) == t.literals.end()) {
                t.literals.push_back(std::move(l));
            }
        }
    }
    return t;
}

std::vector<TestCase> load_tests(const std::vector<std::string>& paths) {
    std::vector<TestCase> out;
    out.reserve(paths.size());
    for (const auto& path : paths) {
        out.push_back(parse_test(read_file(path), path, std::filesystem::path(path).stem().string()));
    }
    return out;
}

std::vector<std::string> list_test_files(const std::string& dir) {
    std::vector<std::string> out;
    std::error_code          ec;
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
        if (entry.is_regular_file() && entry.path().extension() == ".test") {
            out.push_back(entry.path().string());
        }
    }
    if (ec) {
        throw Error("cannot read test directory " + dir + ": " + ec.message());
    }
    std::sort(out.begin(), out.end());
    return out;
}

const char* to_string(TestResult r) { return r == TestResult::pass ? "PASS" : "FAIL"; }

TestResult run_test(const Program& p, const TestCase& t) {
    return is_coherent(ground(apply_test_case(p, t))) ? TestResult::pass : TestResult::fail;
}

} // namespace aspdbg
