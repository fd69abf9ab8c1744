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

#include <aspdbg/parser.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace aspdbg {

namespace {

enum class Tok { ident, variable, integer, lparen, rparen, comma, dot, bar, implies, kw_not, end };

const char* describe(Tok t) {
    switch (t) {
        case Tok::ident   : return "identifier";
        case Tok::variable: return "variable";
        case Tok::integer : return "integer";
        case Tok::lparen  : return "'('";
        case Tok::rparen  : return "')'";
        case Tok::comma   : return "','";
        case Tok::dot     : return "'.'";
        case Tok::bar     : return "'|'";
        case Tok::implies : return "':-'";
        case Tok::kw_not  : return "'not'";
        case Tok::end     : return "end of input";
    }
    return "token";
}

struct Token {
    Tok         kind = Tok::end;
    std::string text;
    std::size_t offset = 0;
    std::size_t line   = 1;
    std::size_t column = 1;
};

bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
public:
    Lexer(std::string_view text, const std::string& file, bool allow_reserved)
        : text_(text), file_(file), allow_reserved_(allow_reserved) {}

    Token next() {
        skip_space();
        Token t;
        t.offset = pos_;
        t.line   = line_;
        t.column = col_;
        if (pos_ >= text_.size()) {
            return t;
        }
        char c = text_[pos_];
        auto single = [&](Tok k) {
            t.kind = k;
            t.text = std::string(1, c);
            advance();
            return t;
        };
        switch (c) {
            case '(': return single(Tok::lparen);
            case ')': return single(Tok::rparen);
            case ',': return single(Tok::comma);
            case '.': return single(Tok::dot);
            case '|': return single(Tok::bar);
            case ':':
                if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
                    advance();
                    advance();
                    t.kind = Tok::implies;
                    t.text = ":-";
                    return t;
                }
                fail(t, "expected ':-'");
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Tok::integer;
            t.text = take_while([](char x) { return std::isdigit(static_cast<unsigned char>(x)) != 0; });
            if (pos_ < text_.size() && is_ident_char(text_[pos_])) {
                fail(t, "malformed integer constant");
            }
            return t;
        }
        if (std::isupper(static_cast<unsigned char>(c))) {
            t.kind = Tok::variable;
            t.text = take_while(is_ident_char);
            return t;
        }
        if (std::islower(static_cast<unsigned char>(c)) || c == '_') {
            t.text = take_while(is_ident_char);
            if (c == '_') {
                if (!allow_reserved_) {
                    fail(t, "names starting with '_' are reserved: " + t.text);
                }
                if (t.text.size() == 1) {
                    fail(t, "anonymous variables are not supported");
                }
            }
            t.kind = t.text == "not" ? Tok::kw_not : Tok::ident;
            return t;
        }
        fail(t, std::string("unexpected character '") + c + "'");
    }

    [[nodiscard]] bool background_directive() const { return background_; }

    [[noreturn]] void fail(const Token& at, const std::string& msg) const {
        throw SyntaxError(file_, at.line, at.column, msg);
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        }
        else {
            ++col_;
        }
        ++pos_;
    }

    template <class Pred>
    std::string take_while(Pred p) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && p(text_[pos_])) {
            advance();
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                std::size_t start = pos_;
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    advance();
                }
                auto comment = text_.substr(start, pos_ - start);
                while (!comment.empty() && std::isspace(static_cast<unsigned char>(comment.back()))) {
                    comment.remove_suffix(1);
                }
                if (comment == "%#background.") {
                    background_ = true;
                }
            }
            else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            }
            else {
                break;
            }
        }
    }

    std::string_view   text_;
    const std::string& file_;
    bool               allow_reserved_;
    bool               background_ = false;
    std::size_t        pos_        = 0;
    std::size_t        line_       = 1;
    std::size_t        col_        = 1;
};

class Parser {
public:
    Parser(std::string_view text, const std::string& file, bool allow_reserved)
        : lex_(text, file, allow_reserved), file_(file) {
        tok_ = lex_.next();
    }

    std::vector<Rule> rules() {
        std::vector<Rule> out;
        while (tok_.kind != Tok::end) {
            out.push_back(rule());
        }
        return out;
    }

    std::vector<Literal> literal_list() {
        std::vector<Literal> out;
        if (tok_.kind == Tok::end || tok_.kind == Tok::dot) {
            return out;
        }
        add_unique(out, literal());
        while (tok_.kind == Tok::comma) {
            shift();
            add_unique(out, literal());
        }
        return out;
    }

    const Token& current() const { return tok_; }
    bool         background() const { return lex_.background_directive(); }

    [[noreturn]] void fail_here(const std::string& msg) const { lex_.fail(tok_, msg); }

    void expect(Tok k) {
        if (tok_.kind != k) {
            fail_here(std::string("expected ") + describe(k) + ", found " + describe(tok_.kind));
        }
        shift();
    }

private:
    template <class T>
    static void add_unique(std::vector<T>& v, T x) {
        if (std::find(v.begin(), v.end(), x) == v.end()) {
            v.push_back(std::move(x));
        }
    }

    void shift() { tok_ = lex_.next(); }

    Rule rule() {
        Rule r;
        Token first   = tok_;
        r.span.file   = file_;
        r.span.begin  = first.offset;
        r.span.line   = first.line;
        r.span.column = first.column;
        if (tok_.kind != Tok::implies) {
            add_unique(r.head, atom());
            while (tok_.kind == Tok::bar) {
                shift();
                add_unique(r.head, atom());
            }
        }
        if (tok_.kind == Tok::implies) {
            shift();
            add_unique(r.body, literal());
            while (tok_.kind == Tok::comma) {
                shift();
                add_unique(r.body, literal());
            }
        }
        if (tok_.kind != Tok::dot) {
            fail_here(std::string("expected '.' or ',', found ") + describe(tok_.kind));
        }
        r.span.end = tok_.offset + 1;
        shift();
        check_safety(r);
        return r;
    }

    Literal literal() {
        if (tok_.kind == Tok::kw_not) {
            shift();
            return {atom(), false};
        }
        return {atom(), true};
    }

    Atom atom() {
        if (tok_.kind != Tok::ident) {
            fail_here(std::string("expected atom, found ") + describe(tok_.kind));
        }
        Atom a{tok_.text, {}};
        shift();
        if (tok_.kind == Tok::lparen) {
            shift();
            a.args.push_back(term());
            while (tok_.kind == Tok::comma) {
                shift();
                a.args.push_back(term());
            }
            expect(Tok::rparen);
        }
        return a;
    }

    Term term() {
        switch (tok_.kind) {
            case Tok::variable: {
                auto t = Term::variable(tok_.text);
                shift();
                return t;
            }
            case Tok::ident:
            case Tok::integer: {
                auto t = Term::constant(tok_.text);
                shift();
                return t;
            }
            default: fail_here(std::string("expected term, found ") + describe(tok_.kind));
        }
    }

    void check_safety(const Rule& r) const {
        std::vector<std::string> bound;
        for (const auto& a : r.positive_body()) {
            for (const auto& t : a.args) {
                if (t.is_variable()) {
                    bound.push_back(t.name());
                }
            }
        }
        for (const auto& v : rule_variables(r)) {
            if (std::find(bound.begin(), bound.end(), v) == bound.end()) {
                throw SafetyError(file_ + ":" + std::to_string(r.span.line) + ":" + std::to_string(r.span.column),
                                  format_rule(r), v);
            }
        }
    }

    Lexer              lex_;
    const std::string& file_;
    Token              tok_;
};

} // namespace

Program parse_program(const std::vector<SourceBuffer>& sources, const ParseOptions& opts) {
    Program p;
    for (const auto& src : sources) {
        Parser parser(src.text, src.name, opts.allow_reserved);
        auto   rules = parser.rules();
        bool   bg    = parser.background();
        for (auto& r : rules) {
            r.is_background = bg || (opts.facts_are_background && classify(r) == RuleKind::fact);
            p.rules.push_back(std::move(r));
        }
        p.files.push_back(src.name);
    }
    RuleId next = 1;
    for (auto& r : p.rules) {
        if (!r.is_background) {
            r.id = next++;
        }
    }
    for (auto& r : p.rules) {
        if (r.is_background) {
            r.id = next++;
        }
    }
    return p;
}

Program parse_program(const std::string& text, const std::string& name, const ParseOptions& opts) {
    return parse_program(std::vector<SourceBuffer>{{name, text}}, opts);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open file: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Program load_program(const std::vector<std::string>& paths, const ParseOptions& opts) {
    std::vector<SourceBuffer> sources;
    sources.reserve(paths.size());
    for (const auto& path : paths) {
        sources.push_back({path, read_file(path)});
    }
    return parse_program(sources, opts);
}

std::vector<Literal> parse_literals(const std::string& text, const std::string& name, std::size_t line,
                                    std::size_t column) {
    try {
        Parser parser(text, name, false);
        auto   lits = parser.literal_list();
        if (parser.current().kind == Tok::dot) {
            parser.expect(Tok::dot);
        }
        if (parser.current().kind != Tok::end) {
            parser.fail_here(std::string("unexpected ") + describe(parser.current().kind));
        }
        for (const auto& l : lits) {
            if (!l.atom.is_ground()) {
                throw SyntaxError(name, 1, 1, "asserted literal must be ground: " + format_literal(l));
            }
        }
        return lits;
    }
    catch (const SyntaxError& e) {
        // shift positions relative to the enclosing line
        std::size_t col = e.line() == 1 ? column + e.column() - 1 : e.column();
        throw SyntaxError(name, line + e.line() - 1, col, e.message());
    }
}

} // namespace aspdbg
