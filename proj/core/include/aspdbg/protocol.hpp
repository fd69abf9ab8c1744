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

#include <aspdbg/debugger.hpp>
#include <aspdbg/parser.hpp>
#include <aspdbg/rewrite.hpp>

#include <nlohmann/json.hpp>

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aspdbg {

/// Program sources and test cases the server works on.
struct Workspace {
    std::vector<SourceBuffer> sources;
    std::vector<TestCase>     tests;
    Program                   program;

    /// Parses the sources; throws SyntaxError or SafetyError.
    static Workspace load(const std::vector<std::string>& program_files, const std::string& test_dir,
                          const ParseOptions& opts = {});
    static Workspace from_buffers(std::vector<SourceBuffer> sources, std::vector<TestCase> tests,
                                  const ParseOptions& opts = {});

    [[nodiscard]] const TestCase* find_test(const std::string& name) const;
};

/// Line-delimited JSON protocol between a UI client and one debugging session.
///
/// Requests: list_workspace, list_tests, run_test, start_debug, answer, undo,
/// end_session. Replies: workspace, tests, test_result, session_started,
/// core_report, query, coherent, session_ended, error. Each request yields
/// one or more reply objects; the handler itself is deterministic apart from
/// the session id.
class ProtocolHandler {
public:
    using IdGenerator = std::function<std::string()>;

    explicit ProtocolHandler(Workspace ws, SessionOptions opts = {}, IdGenerator ids = {});

    std::vector<nlohmann::json> handle(const nlohmann::json& request);
    /// Parses one line and serializes each reply on its own line (no newline).
    std::vector<std::string> handle_line(std::string_view line);

    [[nodiscard]] bool               has_session() const { return session_ != nullptr; }
    [[nodiscard]] const Workspace&   workspace() const { return ws_; }

private:
    std::vector<nlohmann::json> start_debug(const nlohmann::json& req);
    std::vector<nlohmann::json> answer(const nlohmann::json& req);
    std::vector<nlohmann::json> undo();
    std::vector<nlohmann::json> end_session();
    std::vector<nlohmann::json> advance();
    nlohmann::json              core_report(const CoreReport& rep) const;
    nlohmann::json              query_message();
    nlohmann::json              error(const std::string& message, const nlohmann::json& req) const;

    Workspace                    ws_;
    SessionOptions               opts_;
    IdGenerator                  ids_;
    std::unique_ptr<Session>     session_;
    std::string                  session_id_;
    std::size_t                  iteration_ = 0;
    std::map<Atom, std::int64_t> query_ids_;
    std::map<std::int64_t, Atom> queries_by_id_;
};

/// Random 16 hex digit identifier.
std::string random_session_id();

/// Replaces the value of every `"session":"..."` field by `*`.
std::string mask_session_id(std::string_view line);

} // namespace aspdbg
