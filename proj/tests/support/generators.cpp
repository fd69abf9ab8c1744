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

#include "generators.hpp"

#include <algorithm>

namespace aspdbg::testing {

namespace {

std::size_t uniform(std::mt19937& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool chance(std::mt19937& rng, double p) { return std::bernoulli_distribution(p)(rng); }

} // namespace

Program random_ground_program(std::mt19937& rng, const GroundShape& shape) {
    std::size_t n_atoms = uniform(rng, 1, shape.max_atoms);
    std::size_t n_rules = uniform(rng, 1, shape.max_rules);
    auto        atom    = [&] { return Atom{"a" + std::to_string(uniform(rng, 0, n_atoms - 1)), {}}; };
    Program     p;
    for (std::size_t i = 0; i != n_rules; ++i) {
        Rule r;
        r.id = static_cast<RuleId>(i + 1);
        std::size_t roll = uniform(rng, 0, 99);
        std::size_t head = roll < 15 ? 0 : roll < 70 ? 1 : uniform(rng, 2, 3);
        std::size_t body = uniform(rng, head == 0 ? 1 : 0, 3);
        for (std::size_t k = 0; k != head; ++k) {
            Atom a = atom();
            if (std::find(r.head.begin(), r.head.end(), a) == r.head.end()) {
                r.head.push_back(a);
            }
        }
        for (std::size_t k = 0; k != body; ++k) {
            Literal l{atom(), !chance(rng, shape.negation)};
            bool    clash = false;
            for (const auto& b : r.body) {
                clash = clash || b.atom == l.atom;
            }
            if (!clash) {
                r.body.push_back(l);
            }
        }
        r.span = {"<random>", 0, 0, i + 1, 1};
        p.rules.push_back(std::move(r));
    }
    return p;
}

std::string random_nonground_text(std::mt19937& rng) {
    static const char* consts[] = {"c1", "c2", "c3"};
    auto               c        = [&] { return std::string(consts[uniform(rng, 0, 2)]); };
    std::string        out;
    std::string        rules;
    std::size_t        facts = uniform(rng, 1, 4);
    for (std::size_t i = 0; i != facts; ++i) {
        out += chance(rng, 0.5) ? "v(" + c() + ").\n" : "e(" + c() + "," + c() + ").\n";
    }
    std::size_t n = uniform(rng, 1, 4);
    for (std::size_t i = 0; i != n; ++i) {
        // positive body binds X (and Y for binary atoms)
        bool        binary = chance(rng, 0.5);
        std::string pos    = binary ? (chance(rng, 0.5) ? "e(X,Y)" : "q(X,Y)") : (chance(rng, 0.5) ? "v(X)" : "p(X)");
        std::string y      = binary ? "Y" : "X";
        std::vector<std::string> body = {pos};
        if (chance(rng, 0.4)) {
            body.push_back(std::string("not ") + (chance(rng, 0.5) ? "p(" + y + ")" : "r"));
        }
        if (chance(rng, 0.2)) {
            body.push_back("v(" + c() + ")");
        }
        std::vector<std::string> head;
        std::size_t              heads = uniform(rng, 0, 9) == 0 ? 0 : uniform(rng, 1, 2);
        for (std::size_t k = 0; k != heads; ++k) {
            switch (uniform(rng, 0, 2)) {
            case 0: head.push_back("p(" + y + ")"); break;
            case 1: head.push_back("q(X," + (binary ? y : c()) + ")"); break;
            default: head.push_back("r"); break;
            }
        }
        if (heads == 2 && head[0] == head[1]) {
            head.pop_back();
        }
        std::string line;
        for (std::size_t k = 0; k != head.size(); ++k) {
            line += (k ? " | " : "") + head[k];
        }
        line += head.empty() ? ":- " : " :- ";
        for (std::size_t k = 0; k != body.size(); ++k) {
            line += (k ? ", " : "") + body[k];
        }
        rules += line + ".\n";
    }
    return out + rules;
}

std::pair<std::string, std::string> random_unsafe_rule(std::mt19937& rng) {
    static const char* fresh[] = {"Z", "W", "U", "Var"};
    std::string        z       = fresh[uniform(rng, 0, 3)];
    std::string        pos     = chance(rng, 0.5) ? "v(X)" : "e(X,Y)";
    switch (uniform(rng, 0, 3)) {
    case 0: return {"p(" + z + ") :- " + pos + ".", z};
    case 1: return {"p(X) :- " + pos + ", not q(X," + z + ").", z};
    case 2: return {"q(X," + z + ") | r :- " + pos + ".", z};
    default: return {":- " + pos + ", not p(" + z + ").", z};
    }
}

} // namespace aspdbg::testing
