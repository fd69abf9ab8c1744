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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace aspdbg {

using RuleId = std::uint32_t;

/// A variable or a constant. Integers are constants.
class Term {
public:
    enum class Kind : std::uint8_t { constant, variable };

    Term() = default;
    /// Kind is derived from the first character of `name`.
    explicit Term(std::string name);

    static Term constant(std::string name);
    static Term variable(std::string name);

    [[nodiscard]] Kind               kind() const { return kind_; }
    [[nodiscard]] bool               is_variable() const { return kind_ == Kind::variable; }
    [[nodiscard]] bool               is_integer() const;
    [[nodiscard]] const std::string& name() const { return name_; }

    bool operator==(const Term& other) const { return name_ == other.name_; }
    // Integers before symbolic constants, integers compared numerically.
    std::strong_ordering operator<=>(const Term& other) const;

private:
    Term(Kind k, std::string name) : kind_(k), name_(std::move(name)) {}

    Kind        kind_ = Kind::constant;
    std::string name_;
};

struct Atom {
    std::string       predicate;
    std::vector<Term> args;

    [[nodiscard]] bool        is_ground() const;
    [[nodiscard]] std::size_t arity() const { return args.size(); }

    bool                 operator==(const Atom&) const = default;
    std::strong_ordering operator<=>(const Atom& other) const;
};

struct Literal {
    Atom atom;
    bool positive = true;

    [[nodiscard]] Literal complement() const { return {atom, !positive}; }

    bool                 operator==(const Literal&) const = default;
    std::strong_ordering operator<=>(const Literal& other) const;
};

/// Location of a rule in its source buffer. Byte offsets are half-open.
struct Span {
    std::string file;
    std::size_t begin  = 0;
    std::size_t end    = 0;
    std::size_t line   = 0;
    std::size_t column = 0;

    bool operator==(const Span&) const = default;
};

enum class RuleKind : std::uint8_t { fact, constraint, normal, disjunctive };

const char* to_string(RuleKind k);

/// A disjunctive rule `h1 | ... | hm :- l1, ..., ln.` Body literals keep their
/// source order; duplicates are dropped when the rule is built by the parser.
struct Rule {
    RuleId               id = 0;
    std::vector<Atom>    head;
    std::vector<Literal> body;
    Span                 span;
    bool                 is_background = false;

    [[nodiscard]] std::vector<Atom> positive_body() const;
    [[nodiscard]] std::vector<Atom> negative_body() const;
    [[nodiscard]] bool              is_ground() const;

    /// Structural equality ignoring id, span and background flag.
    [[nodiscard]] bool same_shape(const Rule& other) const {
        return head == other.head && body == other.body;
    }
};

RuleKind classify(const Rule& r);

/// Variables of the rule body in order of first occurrence, without repetition.
std::vector<std::string> body_variables(const Rule& r);
/// Variables occurring anywhere in the rule, in order of first occurrence.
std::vector<std::string> rule_variables(const Rule& r);

struct Program {
    std::vector<Rule>        rules;
    std::vector<std::string> files;

    [[nodiscard]] const Rule* find(RuleId id) const;
    [[nodiscard]] RuleId      max_id() const;
};

// Names with these prefixes are reserved for atoms introduced by the debugger.
inline constexpr std::string_view debug_prefix   = "_debug_";
inline constexpr std::string_view support_prefix = "_support_";

bool is_debug_atom(const Atom& a);
bool is_support_atom(const Atom& a);
/// Debug and support atoms are not defined by rules; their truth value is
/// left open unless fixed by an assumption.
inline bool is_reserved_atom(const Atom& a) { return is_debug_atom(a) || is_support_atom(a); }

std::string format_term(const Term& t);
std::string format_atom(const Atom& a);
std::string format_literal(const Literal& l);
std::string format_rule(const Rule& r);
std::string format_program(const Program& p);

std::ostream& operator<<(std::ostream& os, const Term& t);
std::ostream& operator<<(std::ostream& os, const Atom& a);
std::ostream& operator<<(std::ostream& os, const Literal& l);
std::ostream& operator<<(std::ostream& os, const Rule& r);

} // namespace aspdbg
