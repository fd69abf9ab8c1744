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
#include "oracle.hpp"

#include <aspdbg/ground.hpp>
#include <aspdbg/rewrite.hpp>

#include <doctest.h>

using namespace aspdbg;

namespace {
TestCase test_of(std::vector<Literal> lits) {
    TestCase t;
    t.name     = "t";
    t.literals = std::move(lits);
    t.span     = {"t.test", 0, 10, 1, 1};
    return t;
}
} // namespace

TEST_CASE("a test case adds one constraint per literal") {
    auto p  = testing::umbrella();
    auto pt = apply_test_case(p, test_of({testing::pos("dry"), testing::pos("umbrella")}));
    REQUIRE(pt.rules.size() == p.rules.size() + 2);
    CHECK(format_rule(pt.rules[6]) == ":- not dry.");
    CHECK(format_rule(pt.rules[7]) == ":- not umbrella.");
    CHECK(pt.rules[6].id == 7);
    CHECK(pt.rules[7].id == 8);
    CHECK_FALSE(pt.rules[6].is_background);
    CHECK(pt.rules[6].span.file == "t.test");
}

TEST_CASE("empty and negative test cases") {
    auto p = testing::umbrella();
    CHECK(format_program(apply_test_case(p, test_of({}))) == format_program(p));
    auto pt = apply_test_case(p, test_of({testing::neg("wet")}));
    CHECK(format_rule(pt.rules.back()) == ":- wet.");
}

TEST_CASE("debug atoms for the bidding program") {
    auto d = build_debug_program(testing::bidding());
    CHECK(format_rule(*d.rewritten.find(1)) == "some_bid(M,P) :- bid(M,P,X), _debug_1(M,P,X).");
    CHECK(format_rule(*d.rewritten.find(2)) ==
          "bid(M,P,1) :- not some_bid(M,P), pc(M), paper(P), _debug_2(M,P).");
    for (RuleId id = 3; id <= 6; ++id) {
        CHECK(d.rewritten.find(id)->same_shape(*d.original.find(id)));
    }
    REQUIRE(d.debug_registry.size() == 2);
    CHECK(d.debug_registry.at(1).predicate == "_debug_1");
    CHECK(d.debug_registry.at(1).variables == std::vector<std::string>{"M", "P", "X"});
    CHECK(d.debug_registry.at(2).variables == std::vector<std::string>{"M", "P"});
}

TEST_CASE("facts only and ground constraints") {
    auto facts = build_debug_program(parse_program("a. b."));
    CHECK(facts.debug_registry.empty());
    CHECK(format_program(facts.rewritten) == format_program(facts.original));
    auto c = build_debug_program(parse_program(":- wet, umbrella."));
    CHECK(format_rule(c.rewritten.rules[0]) == ":- wet, umbrella, _debug_1.");
}

TEST_CASE("support rules for the umbrella program") {
    auto d = build_debug_program(testing::umbrella());
    auto g = add_support_rules(ground(d.rewritten), d);
    CHECK(d.support_registry.size() == 5);
    CHECK(d.support_registry.at(testing::atom("rainy")) == Atom{"_support_rainy", {}});
    std::size_t support_rules = 0;
    for (std::size_t i = 0; i != g.rules.size(); ++i) {
        if (!g.origin[i]) {
            ++support_rules;
            CHECK(g.rules[i].body.size() == 1);
            CHECK(is_support_atom(g.rules[i].body[0].atom));
        }
    }
    CHECK(support_rules == 5);
}

TEST_CASE("support rules for the bidding program cover its eight atoms") {
    auto d = build_debug_program(testing::bidding());
    auto g = add_support_rules(ground(d.rewritten), d);
    std::set<Atom> supported;
    for (const auto& [a, s] : d.support_registry) {
        supported.insert(a);
        CHECK(s == support_atom_for(a));
    }
    CHECK(supported == testing::interpretation({"pc(m1)", "pc(m2)", "paper(p1)", "bid(m1,p1,1)", "bid(m1,p1,2)",
                                                "bid(m2,p1,1)", "some_bid(m1,p1)", "some_bid(m2,p1)"}));
    CHECK(g.rules.size() == 9 + 8);
    CHECK(format_atom(support_atom_for(testing::atom("bid(m2,p1,1)"))) == "_support_bid(m2,p1,1)");
}

TEST_CASE("empty ground program gets no support rules") {
    DebugProgram d;
    auto         g = add_support_rules(GroundProgram{}, d);
    CHECK(g.rules.empty());
    CHECK(d.support_registry.empty());
}

TEST_CASE("debug atoms can be located and stripped") {
    auto d = build_debug_program(testing::bidding());
    auto g = ground(d.rewritten);
    for (std::size_t i = 0; i != g.rules.size(); ++i) {
        const Atom* a = debug_atom_of(g.rules[i]);
        CHECK((a != nullptr) == (g.origin[i]->rule_id <= 2));
        if (a) {
            CHECK(a->predicate == debug_predicate(g.origin[i]->rule_id));
            CHECK(debug_atom_of(strip_debug(g.rules[i])) == nullptr);
        }
    }
}
