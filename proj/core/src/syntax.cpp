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

#include <aspdbg/syntax.hpp>

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace aspdbg {

namespace {
bool starts_upper(std::string_view s) {
    return !s.empty() && std::isupper(static_cast<unsigned char>(s.front()));
}

std::string_view strip_zeros(std::string_view s) {
    auto nz = s.find_first_not_of('0');
    return nz == std::string_view::npos ? std::string_view("0") : s.substr(nz);
}

void push_unique(std::vector<std::string>& out, const std::string& v) {
    if (std::find(out.begin(), out.end(), v) == out.end()) {
        out.push_back(v);
    }
}

void collect_vars(const Atom& a, std::vector<std::string>& out) {
    for (const auto& t : a.args) {
        if (t.is_variable()) {
            push_unique(out, t.name());
        }
    }
}
} // namespace

Term::Term(std::string name) : kind_(starts_upper(name) ? Kind::variable : Kind::constant), name_(std::move(name)) {}

Term Term::constant(std::string name) { return {Kind::constant, std::move(name)}; }
Term Term::variable(std::string name) { return {Kind::variable, std::move(name)}; }

bool Term::is_integer() const {
    return !name_.empty() &&
           std::all_of(name_.begin(), name_.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::strong_ordering Term::operator<=>(const Term& other) const {
    if (kind_ != other.kind_) {
        return kind_ <=> other.kind_;
    }
    bool li = is_integer(), ri = other.is_integer();
    if (li != ri) {
        return li ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (li) {
        auto a = strip_zeros(name_), b = strip_zeros(other.name_);
        if (a.size() != b.size()) {
            return a.size() <=> b.size();
        }
        if (auto c = a.compare(b); c != 0) {
            return c <=> 0;
        }
    }
    return name_.compare(other.name_) <=> 0;
}

bool Atom::is_ground() const {
    return std::none_of(args.begin(), args.end(), [](const Term& t) { return t.is_variable(); });
}

std::strong_ordering Atom::operator<=>(const Atom& other) const {
    if (auto c = predicate.compare(other.predicate) <=> 0; c != 0) {
        return c;
    }
    if (auto c = args.size() <=> other.args.size(); c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(args.begin(), args.end(), other.args.begin(), other.args.end());
}

std::strong_ordering Literal::operator<=>(const Literal& other) const {
    if (auto c = atom <=> other.atom; c != 0) {
        return c;
    }
    // positive before negative
    return other.positive <=> positive;
}

const char* to_string(RuleKind k) {
    switch (k) {
        case RuleKind::fact       : return "fact";
        case RuleKind::constraint : return "constraint";
        case RuleKind::normal     : return "normal";
        case RuleKind::disjunctive: return "disjunctive";
    }
    return "unknown";
}

std::vector<Atom> Rule::positive_body() const {
    std::vector<Atom> out;
    for (const auto& l : body) {
        if (l.positive) {
            out.push_back(l.atom);
        }
    }
    return out;
}

std::vector<Atom> Rule::negative_body() const {
    std::vector<Atom> out;
    for (const auto& l : body) {
        if (!l.positive) {
            out.push_back(l.atom);
        }
    }
    return out;
}

bool Rule::is_ground() const {
    return std::all_of(head.begin(), head.end(), [](const Atom& a) { return a.is_ground(); }) &&
           std::all_of(body.begin(), body.end(), [](const Literal& l) { return l.atom.is_ground(); });
}

RuleKind classify(const Rule& r) {
    if (r.head.empty()) {
        return RuleKind::constraint;
    }
    if (r.head.size() == 1) {
        return r.body.empty() ? RuleKind::fact : RuleKind::normal;
    }
    return RuleKind::disjunctive;
}

std::vector<std::string> body_variables(const Rule& r) {
    std::vector<std::string> out;
    for (const auto& l : r.body) {
        collect_vars(l.atom, out);
    }
    return out;
}

std::vector<std::string> rule_variables(const Rule& r) {
    std::vector<std::string> out;
    for (const auto& a : r.head) {
        collect_vars(a, out);
    }
    for (const auto& l : r.body) {
        collect_vars(l.atom, out);
    }
    return out;
}

const Rule* Program::find(RuleId id) const {
    auto it = std::find_if(rules.begin(), rules.end(), [id](const Rule& r) { return r.id == id; });
    return it == rules.end() ? nullptr : &*it;
}

RuleId Program::max_id() const {
    RuleId m = 0;
    for (const auto& r : rules) {
        m = std::max(m, r.id);
    }
    return m;
}

bool is_debug_atom(const Atom& a) { return a.predicate.starts_with(debug_prefix); }
bool is_support_atom(const Atom& a) { return a.predicate.starts_with(support_prefix); }

std::string format_term(const Term& t) { return t.name(); }

std::string format_atom(const Atom& a) {
    std::string out = a.predicate;
    if (!a.args.empty()) {
        out += '(';
        for (std::size_t i = 0; i != a.args.size(); ++i) {
            if (i) {
                out += ',';
            }
            out += a.args[i].name();
        }
        out += ')';
    }
    return out;
}

std::string format_literal(const Literal& l) { return l.positive ? format_atom(l.atom) : "not " + format_atom(l.atom); }

std::string format_rule(const Rule& r) {
    std::string out;
    for (std::size_t i = 0; i != r.head.size(); ++i) {
        if (i) {
            out += " | ";
        }
        out += format_atom(r.head[i]);
    }
    if (!r.body.empty()) {
        out += r.head.empty() ? ":- " : " :- ";
        for (std::size_t i = 0; i != r.body.size(); ++i) {
            if (i) {
                out += ", ";
            }
            out += format_literal(r.body[i]);
        }
    }
    else if (r.head.empty()) {
        out += ":-";
    }
    out += '.';
    return out;
}

std::string format_program(const Program& p) {
    std::ostringstream os;
    for (const auto& r : p.rules) {
        os << format_rule(r) << '\n';
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << t.name(); }
std::ostream& operator<<(std::ostream& os, const Atom& a) { return os << format_atom(a); }
std::ostream& operator<<(std::ostream& os, const Literal& l) { return os << format_literal(l); }
std::ostream& operator<<(std::ostream& os, const Rule& r) { return os << format_rule(r); }

} // namespace aspdbg
