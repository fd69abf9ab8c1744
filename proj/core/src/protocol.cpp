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

#include <aspdbg/protocol.hpp>

#include <aspdbg/testkit.hpp>

#include <random>
#include <regex>

namespace aspdbg {

using nlohmann::json;

Workspace Workspace::from_buffers(std::vector<SourceBuffer> sources, std::vector<TestCase> tests,
                                  const ParseOptions& opts) {
    Workspace ws;
    ws.program = parse_program(sources, opts);
    ws.sources = std::move(sources);
    ws.tests   = std::move(tests);
    return ws;
}

Workspace Workspace::load(const std::vector<std::string>& program_files, const std::string& test_dir,
                          const ParseOptions& opts) {
    std::vector<SourceBuffer> sources;
    for (const auto& f : program_files) {
        sources.push_back({f, read_file(f)});
    }
    std::vector<TestCase> tests;
    if (!test_dir.empty()) {
        tests = load_tests(list_test_files(test_dir));
    }
    return from_buffers(std::move(sources), std::move(tests), opts);
}

const TestCase* Workspace::find_test(const std::string& name) const {
    for (const auto& t : tests) {
        if (t.name == name) {
            return &t;
        }
    }
    return nullptr;
}

std::string random_session_id() {
    static constexpr char hex[] = "0123456789abcdef";
    std::random_device    rd;
    std::mt19937_64       gen(rd());
    std::uint64_t         v = gen();
    std::string           out(16, '0');
    for (auto& c : out) {
        c = hex[v & 0xf];
        v >>= 4;
    }
    return out;
}

std::string mask_session_id(std::string_view line) {
    static const std::regex session(R"("session":"[^"]*")");
    return std::regex_replace(std::string(line), session, R"("session":"*")");
}

namespace {
json literal_list(const std::vector<Literal>& lits) {
    json out = json::array();
    for (const auto& l : lits) {
        out.push_back(format_literal(l));
    }
    return out;
}

json bindings(const Substitution& s) {
    json out = json::array();
    for (const auto& [var, value] : s.bindings) {
        out.push_back(json::array({var, value.name()}));
    }
    return out;
}

json instance(const Substitution& s, const Rule& ground_rule) {
    return {{"bindings", bindings(s)}, {"ground", format_rule(strip_debug(ground_rule))}};
}
} // namespace

ProtocolHandler::ProtocolHandler(Workspace ws, SessionOptions opts, IdGenerator ids)
    : ws_(std::move(ws)), opts_(opts), ids_(ids ? std::move(ids) : IdGenerator(random_session_id)) {}

json ProtocolHandler::error(const std::string& message, const json& req) const {
    json e = {{"type", "error"}, {"message", message}};
    if (req.is_object() && req.contains("type") && req["type"].is_string()) {
        e["request"] = req["type"];
    }
    return e;
}

std::vector<std::string> ProtocolHandler::handle_line(std::string_view line) {
    std::vector<json> replies;
    json              req = json::parse(line, nullptr, false);
    if (req.is_discarded()) {
        replies.push_back(error("malformed JSON", json()));
    }
    else {
        replies = handle(req);
    }
    std::vector<std::string> out;
    out.reserve(replies.size());
    for (const auto& r : replies) {
        out.push_back(r.dump());
    }
    return out;
}

std::vector<json> ProtocolHandler::handle(const json& req) {
    if (!req.is_object() || !req.contains("type") || !req["type"].is_string()) {
        return {error("request must be an object with a string field 'type'", req)};
    }
    const std::string type = req["type"];
    try {
        if (type == "list_workspace") {
            json files = json::array();
            for (const auto& s : ws_.sources) {
                files.push_back({{"name", s.name}, {"text", s.text}});
            }
            return {{{"type", "workspace"}, {"files", files}}};
        }
        if (type == "list_tests") {
            json tests = json::array();
            for (const auto& t : ws_.tests) {
                tests.push_back({{"name", t.name}, {"file", t.span.file}, {"literals", literal_list(t.literals)}});
            }
            return {{{"type", "tests"}, {"tests", tests}}};
        }
        if (type == "run_test") {
            if (!req.contains("test") || !req["test"].is_string()) {
                return {error("run_test needs a string field 'test'", req)};
            }
            const TestCase* t = ws_.find_test(req["test"]);
            if (!t) {
                return {error("unknown test: " + req["test"].get<std::string>(), req)};
            }
            return {{{"type", "test_result"}, {"test", t->name}, {"result", to_string(run_test(ws_.program, *t))}}};
        }
        if (type == "start_debug") {
            return start_debug(req);
        }
        if (type == "answer") {
            return answer(req);
        }
        if (type == "undo") {
            return undo();
        }
        if (type == "end_session") {
            return end_session();
        }
        return {error("unknown request type: " + type, req)};
    }
    catch (const Error& e) {
        return {error(e.what(), req)};
    }
    catch (const json::exception& e) {
        return {error(std::string("malformed request: ") + e.what(), req)};
    }
}

std::vector<json> ProtocolHandler::start_debug(const json& req) {
    TestCase test;
    if (req.contains("test") && !req["test"].is_null()) {
        if (!req["test"].is_string()) {
            return {error("field 'test' must be a string", req)};
        }
        const TestCase* t = ws_.find_test(req["test"]);
        if (!t) {
            return {error("unknown test: " + req["test"].get<std::string>(), req)};
        }
        test = *t;
    }
    std::unique_ptr<Session> s;
    try {
        s = std::make_unique<Session>(ws_.program, test, opts_);
    }
    catch (const CoherentProgram& e) {
        json m = {{"type", "error"}, {"request", "start_debug"}, {"message", e.what()}};
        m["witness"] = json::array();
        for (const auto& a : e.witness()) {
            m["witness"].push_back(format_atom(a));
        }
        return {m};
    }
    session_      = std::move(s);
    session_id_   = ids_();
    iteration_    = 0;
    query_ids_.clear();
    queries_by_id_.clear();
    std::vector<json> out = {{{"type", "session_started"}, {"session", session_id_}, {"test", test.name}}};
    auto              rest = advance();
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

std::vector<json> ProtocolHandler::advance() {
    ++iteration_;
    try {
        const CoreReport& rep = session_->step();
        return {core_report(rep), query_message()};
    }
    catch (const UnexpectedlyCoherent& e) {
        json as = json::array();
        for (const auto& a : e.answer_set()) {
            as.push_back(format_atom(a));
        }
        return {{{"type", "coherent"}, {"session", session_id_}, {"iteration", iteration_}, {"answer_set", as}}};
    }
}

json ProtocolHandler::core_report(const CoreReport& rep) const {
    json rules = json::array();
    for (RuleId id : rep.nonground_rule_ids) {
        const Rule* r = session_->program().find(id);
        if (!r) {
            continue;
        }
        json in_core = json::array();
        for (const auto& cr : rep.ground_rules) {
            if (cr.origin_id == id) {
                in_core.push_back(instance(cr.substitution, cr.rule));
            }
        }
        json all = json::array();
        for (const auto& [sub, g] : substitutions_of(session_->ground(), id)) {
            all.push_back(instance(sub, g));
        }
        rules.push_back({{"id", id},
                         {"file", r->span.file},
                         {"line", r->span.line},
                         {"column", r->span.column},
                         {"begin", r->span.begin},
                         {"end", r->span.end},
                         {"text", format_rule(*r)},
                         {"core_instances", in_core},
                         {"instances", all}});
    }
    json unsupported = json::array();
    for (const auto& a : rep.unsupported_atoms) {
        unsupported.push_back(format_atom(a));
    }
    return {{"type", "core_report"},
            {"session", session_id_},
            {"iteration", iteration_},
            {"core", literal_list(rep.core)},
            {"rules", rules},
            {"unsupported", unsupported},
            {"conflicting_expectations", literal_list(rep.conflicting_expectations)}};
}

json ProtocolHandler::query_message() {
    json queries = json::array();
    for (const auto& q : session_->ranked_queries()) {
        auto [it, fresh] = query_ids_.try_emplace(q.atom, static_cast<std::int64_t>(query_ids_.size() + 1));
        if (fresh) {
            queries_by_id_.emplace(it->second, q.atom);
        }
        queries.push_back({{"id", it->second},
                           {"atom", format_atom(q.atom)},
                           {"hits", q.hits},
                           {"samples", q.samples},
                           {"support_hint", q.support_hint}});
    }
    return {{"type", "query"}, {"session", session_id_}, {"iteration", iteration_}, {"queries", queries}};
}

std::vector<json> ProtocolHandler::answer(const json& req) {
    if (!session_) {
        return {error("no active session", req)};
    }
    if (!req.contains("query_id") || !req["query_id"].is_number_integer() || !req.contains("value") ||
        !req["value"].is_boolean()) {
        return {error("answer needs an integer 'query_id' and a boolean 'value'", req)};
    }
    auto it = queries_by_id_.find(req["query_id"].get<std::int64_t>());
    if (it == queries_by_id_.end()) {
        return {error("unknown query id " + std::to_string(req["query_id"].get<std::int64_t>()), req)};
    }
    for (const auto& l : session_->answers()) {
        if (l.atom == it->second) {
            return {error("query " + format_atom(it->second) + " was already answered", req)};
        }
    }
    session_->answer_query(it->second, req["value"].get<bool>());
    return advance();
}

std::vector<json> ProtocolHandler::undo() {
    if (!session_) {
        return {error("no active session", json{{"type", "undo"}})};
    }
    if (!session_->undo()) {
        return {error("nothing to undo", json{{"type", "undo"}})};
    }
    return advance();
}

std::vector<json> ProtocolHandler::end_session() {
    if (!session_) {
        return {error("no active session", json{{"type", "end_session"}})};
    }
    json out = {{"type", "session_ended"}, {"session", session_id_}};
    session_.reset();
    session_id_.clear();
    query_ids_.clear();
    queries_by_id_.clear();
    return {out};
}

} // namespace aspdbg
