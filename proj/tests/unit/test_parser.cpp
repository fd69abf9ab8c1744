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

#include "examples.hpp"

#include <aspdbg/parser.hpp>

#include <doctest.h>

#include <map>
#include <set>

using namespace aspdbg;

TEST_CASE("single fact") {
    auto p = parse_program("rainy.");
    REQUIRE(p.rules.size() == 1);
    CHECK(p.rules[0].head.size() == 1);
    CHECK(p.rules[0].body.empty());
    CHECK(p.rules[0].is_background);
}

TEST_CASE("the umbrella program") {
    auto                              p = testing::umbrella();
    std::map<RuleKind, std::size_t>   kinds;
    for (const auto& r : p.rules) {
        ++kinds[classify(r)];
    }
    CHECK(kinds[RuleKind::disjunctive] == 2);
    CHECK(kinds[RuleKind::constraint] == 3);
    CHECK(kinds[RuleKind::fact] == 1);
    CHECK(format_program(p) == testing::umbrella_text);
}

TEST_CASE("non-background rules are numbered first") {
    auto p = testing::bidding();
    CHECK(format_rule(*p.find(1)) == "some_bid(M,P) :- bid(M,P,X).");
    CHECK(format_rule(*p.find(2)) == "bid(M,P,1) :- not some_bid(M,P), pc(M), paper(P).");
    CHECK(format_rule(*p.find(3)) == "pc(m1).");
    CHECK(p.max_id() == 6);
    std::set<RuleId> ids;
    for (const auto& r : p.rules) {
        ids.insert(r.id);
    }
    CHECK(ids.size() == p.rules.size());
}

TEST_CASE("spans cover the rule text") {
    std::string text = "a.\n  b :- a,\n    not c.\n";
    auto        p    = parse_program(text, "f.lp");
    const Rule* r    = p.find(1);
    REQUIRE(r);
    CHECK(r->span.file == "f.lp");
    CHECK(r->span.line == 2);
    CHECK(r->span.column == 3);
    CHECK(text.substr(r->span.begin, r->span.end - r->span.begin) == "b :- a,\n    not c.");
}

TEST_CASE("comments and the background directive") {
    auto p = parse_program({{"kb.lp", "%#background.\nq(a) :- r(a). r(a).\n"}, {"main.lp", "p :- q(a). % trailing\n"}});
    REQUIRE(p.rules.size() == 3);
    CHECK(p.find(1)->head[0].predicate == "p");
    CHECK_FALSE(p.find(1)->is_background);
    CHECK(p.find(2)->is_background);
    CHECK(p.find(3)->is_background);
    CHECK(p.files == std::vector<std::string>{"kb.lp", "main.lp"});
}

TEST_CASE("facts may be kept out of the background") {
    ParseOptions opts;
    opts.facts_are_background = false;
    auto p = parse_program("a. b :- a.", "x.lp", opts);
    CHECK_FALSE(p.find(1)->is_background);
    CHECK(p.find(1)->head[0].predicate == "a");
}

TEST_CASE("duplicate literals collapse") {
    auto p = parse_program("a | a :- b, b, not c, not c.");
    CHECK(format_rule(p.rules[0]) == "a :- b, not c.");
}

TEST_CASE("safety violations name the variable") {
    try {
        parse_program("p(X) :- not q(X).", "s.lp");
        FAIL("expected a safety error");
    }
    catch (const SafetyError& e) {
        CHECK(e.variable() == "X");
        CHECK(std::string(e.what()).find("s.lp:1:1") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_program("p(X) | q(Y) :- r(X)."), SafetyError);
    CHECK_THROWS_AS(parse_program(":- not r(X)."), SafetyError);
    CHECK_NOTHROW(parse_program("p(X) :- r(X), not q(X)."));
}

TEST_CASE("syntax errors carry a location") {
    try {
        parse_program("a.\nb :- c\n", "e.lp");
        FAIL("expected a syntax error");
    }
    catch (const SyntaxError& e) {
        CHECK(e.file() == "e.lp");
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_program("a :- b c."), SyntaxError);
    CHECK_THROWS_AS(parse_program("p(X+1)."), SyntaxError);
    CHECK_THROWS_AS(parse_program("a :- not."), SyntaxError);
    CHECK_THROWS_AS(parse_program("a :- ."), SyntaxError);
    CHECK_THROWS_AS(parse_program(":- ."), SyntaxError);
    CHECK_THROWS_AS(parse_program("_debug_1."), SyntaxError);
    CHECK_THROWS_AS(parse_program("P."), SyntaxError);
}

TEST_CASE("reserved names with the matching option") {
    ParseOptions opts;
    opts.allow_reserved = true;
    auto p = parse_program("a :- b, _debug_1.", "x.lp", opts);
    CHECK(is_debug_atom(p.rules[0].body[1].atom));
}

TEST_CASE("ground literal lists") {
    auto lits = parse_literals("dry, not umbrella, bid(m2,p1,1)", "t", 1, 1);
    REQUIRE(lits.size() == 3);
    CHECK(lits[1] == testing::neg("umbrella"));
    CHECK(lits[2].atom.args.size() == 3);
    CHECK_THROWS_AS(parse_literals("p(X)", "t", 1, 1), SyntaxError);
    try {
        parse_literals("a, ,", "t.test", 4, 14);
        FAIL("expected a syntax error");
    }
    catch (const SyntaxError& e) {
        CHECK(e.line() == 4);
        CHECK(e.column() > 14);
    }
}
