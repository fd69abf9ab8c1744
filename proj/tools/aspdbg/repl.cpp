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

#include "repl.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace aspdbg::cli {

namespace {
constexpr const char* red   = "\x1b[31m";
constexpr const char* reset = "\x1b[0m";

void print_report(const Session& s, const CoreReport& rep, std::size_t iteration, std::ostream& out, bool color) {
    out << "iteration " << iteration << ": core of " << rep.core.size() << " assumption(s), "
        << rep.nonground_rule_ids.size() << " rule(s)\n";
    for (RuleId id : rep.nonground_rule_ids) {
        const Rule* r = s.program().find(id);
        if (!r) {
            continue;
        }
        out << "  " << r->span.file << ":" << r->span.line << ":" << r->span.column << "  [" << id << "] "
            << (color ? red : "") << format_rule(*r) << (color ? reset : "") << '\n';
        for (const auto& cr : rep.ground_rules) {
            if (cr.origin_id == id) {
                out << "      " << (cr.substitution.bindings.empty() ? "(ground)" : format_substitution(cr.substitution))
                    << ": " << format_rule(strip_debug(cr.rule)) << '\n';
            }
        }
    }
    for (const auto& a : rep.unsupported_atoms) {
        out << "  unsupported: " << format_atom(a) << '\n';
    }
    if (!rep.conflicting_expectations.empty()) {
        out << "  conflicting expectations:";
        for (const auto& l : rep.conflicting_expectations) {
            out << ' ' << format_literal(l);
        }
        out << '\n';
    }
}
} // namespace

int run_repl(Session& session, std::istream& in, std::ostream& out, bool color) {
    std::size_t iteration = 0;
    for (;;) {
        ++iteration;
        std::vector<RankedQuery> queries;
        try {
            print_report(session, session.step(), iteration, out, color);
            queries = session.ranked_queries();
        }
        catch (const UnexpectedlyCoherent& e) {
            out << "iteration " << iteration << ": expectations satisfied by answer set: "
                << format_interpretation(e.answer_set()) << '\n';
        }
        if (!queries.empty()) {
            out << "queries (is the atom true in the intended answer set?):\n";
            for (std::size_t i = 0; i != queries.size(); ++i) {
                out << "  " << i + 1 << ") " << format_atom(queries[i].atom) << '\n';
            }
        }
        else if (session.report()) {
            out << "no further queries\n";
        }
        for (;;) {
            out << "answer [<n> y|n, u=undo, q=quit]> " << std::flush;
            std::string line;
            if (!std::getline(in, line)) {
                out << '\n';
                return 0;
            }
            std::istringstream words(line);
            std::string        first, second;
            words >> first >> second;
            if (first.empty()) {
                continue;
            }
            if (first == "q" || first == "quit") {
                return 0;
            }
            if (first == "u" || first == "undo") {
                if (!session.undo()) {
                    out << "nothing to undo\n";
                    continue;
                }
                break;
            }
            std::size_t index = 1;
            std::string verdict = first;
            if (!second.empty()) {
                try {
                    index = std::stoul(first);
                }
                catch (const std::exception&) {
                    index = 0;
                }
                verdict = second;
            }
            if (index == 0 || index > queries.size() || (verdict != "y" && verdict != "n")) {
                out << "expected '<n> y', '<n> n', 'y', 'n', 'u' or 'q'\n";
                continue;
            }
            try {
                session.answer_query(queries[index - 1].atom, verdict == "y");
            }
            catch (const Error& e) {
                out << "error: " << e.what() << '\n';
                continue;
            }
            break;
        }
    }
}

} // namespace aspdbg::cli
