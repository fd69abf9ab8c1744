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

#include <aspdbg/rewrite.hpp>

#include <algorithm>

namespace aspdbg {

Program apply_test_case(const Program& p, const TestCase& t) {
    Program out = p;
    RuleId  id  = p.max_id();
    for (const auto& lit : t.literals) {
        Rule c;
        c.id   = ++id;
        c.body = {lit.complement()};
        c.span = t.span;
        out.rules.push_back(std::move(c));
    }
    if (!t.literals.empty() && !t.span.file.empty() &&
        std::find(out.files.begin(), out.files.end(), t.span.file) == out.files.end()) {
        out.files.push_back(t.span.file);
    }
    return out;
}

std::string debug_predicate(RuleId id) { return std::string(debug_prefix) + std::to_string(id); }

Atom support_atom_for(const Atom& a) { return {std::string(support_prefix) + a.predicate, a.args}; }

DebugProgram build_debug_program(const Program& p) {
    DebugProgram d;
    d.original  = p;
    d.rewritten = p;
    for (auto& r : d.rewritten.rules) {
        if (r.is_background) {
            continue;
        }
        DebugAtom info{debug_predicate(r.id), body_variables(r)};
        Atom      atom{info.predicate, {}};
        for (const auto& v : info.variables) {
            atom.args.push_back(Term::variable(v));
        }
        r.body.push_back({std::move(atom), true});
        d.debug_registry.emplace(r.id, std::move(info));
    }
    return d;
}

GroundProgram add_support_rules(const GroundProgram& g, DebugProgram& d) {
    GroundProgram out = g;
    for (const auto& a : g.base) {
        if (is_reserved_atom(a)) {
            continue;
        }
        Atom s = support_atom_for(a);
        Rule r;
        r.head = {a};
        r.body = {{s, true}};
        out.add(std::move(r), std::nullopt);
        d.support_registry[a] = std::move(s);
    }
    return out;
}

const Atom* debug_atom_of(const Rule& ground_rule) {
    for (auto it = ground_rule.body.rbegin(); it != ground_rule.body.rend(); ++it) {
        if (it->positive && is_debug_atom(it->atom)) {
            return &it->atom;
        }
    }
    return nullptr;
}

Rule strip_debug(const Rule& r) {
    Rule out = r;
    std::erase_if(out.body, [](const Literal& l) { return is_debug_atom(l.atom); });
    return out;
}

} // namespace aspdbg
