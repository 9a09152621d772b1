// Copyright 2026 The liedyn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "liedyn/expr.hpp"

#include <cctype>
#include <limits>

namespace liedyn {

std::string presentation_name(Presentation p)
{
    switch (p) {
    case Presentation::Crossed:
        return "crossed";
    case Presentation::Root:
        return "root";
    case Presentation::Char:
        return "char";
    }
    return "crossed";
}

std::optional<Presentation> parse_presentation(std::string_view name)
{
    if (name == "crossed")
        return Presentation::Crossed;
    if (name == "root")
        return Presentation::Root;
    if (name == "char")
        return Presentation::Char;
    return std::nullopt;
}

namespace {

std::string describe_expected(const std::vector<std::string>& expected)
{
    std::string out;
    for (std::size_t i = 0; i < expected.size(); ++i)
        out += (i ? ", " : "") + expected[i];
    return out;
}

std::string type_word(ValueType t)
{
    switch (t) {
    case ValueType::Scalar:
        return "scalar";
    case ValueType::Function:
        return "function";
    case ValueType::Element:
        return "element";
    }
    return "scalar";
}

} // namespace

ParseError::ParseError(int line, int column, const std::string& message, std::vector<std::string> expected)
    : UsageError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message
                 + (expected.empty() ? "" : " (expected " + describe_expected(expected) + ")")),
      line_(line), column_(column), expected_(std::move(expected))
{
}

namespace {

// ------------------------------------------------------------------- lexer

enum class Tok { Int, Ident, Punct, End };

struct Token {
    Tok kind;
    std::string text;   // digits, identifier name or punctuation
    std::string suffix; // trailing digits of an identifier
    SourceLoc loc;
};

std::string show(const Token& t)
{
    switch (t.kind) {
    case Tok::End:
        return "end of input";
    case Tok::Ident:
        return "'" + t.text + t.suffix + "'";
    default:
        return "'" + t.text + "'";
    }
}

std::vector<Token> lex(std::string_view src)
{
    std::vector<Token> out;
    SourceLoc loc;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++loc.line;
                loc.column = 1;
            } else {
                ++loc.column;
            }
        }
    };
    auto digit = [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; };
    auto alpha = [](char ch) { return std::isalpha(static_cast<unsigned char>(ch)) != 0; };
    while (i < src.size()) {
        const char ch = src[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            advance(1);
            continue;
        }
        Token t{Tok::Punct, "", "", loc};
        std::size_t j = i;
        if (digit(ch)) {
            while (j < src.size() && digit(src[j]))
                ++j;
            t.kind = Tok::Int;
            t.text = std::string(src.substr(i, j - i));
        } else if (alpha(ch)) {
            while (j < src.size() && alpha(src[j]))
                ++j;
            const std::size_t k = j;
            while (j < src.size() && digit(src[j]))
                ++j;
            t.kind = Tok::Ident;
            t.text = std::string(src.substr(i, k - i));
            t.suffix = std::string(src.substr(k, j - k));
        } else if (std::string_view("+-*/^()[],").find(ch) != std::string_view::npos) {
            j = i + 1;
            t.text = std::string(1, ch);
        } else {
            throw ParseError(loc.line, loc.column, std::string("unexpected character '") + ch + "'");
        }
        out.push_back(std::move(t));
        advance(j - i);
    }
    out.push_back(Token{Tok::End, "", "", loc});
    return out;
}

// ------------------------------------------------------------------ parser

using NodePtr = std::unique_ptr<ExprNode>;

const std::vector<std::string> kFactorStart = {"integer", "'('", "'['", "'c'", "'chi'", "'delta'", "'one'",
                                               "'q'", "'X'", "'Y'", "'z'"};

class Parser {
public:
    Parser(std::string_view text, const SpaceSpec& space, std::optional<Presentation> requested)
        : tokens_(lex(text)), space_(space), requested_(requested)
    {
    }

    ParsedExpr run()
    {
        NodePtr root = expr();
        if (peek().kind != Tok::End)
            fail(peek(), "unexpected " + show(peek()), {"'+'", "'-'", "'*'", "end of input"});
        const Presentation p = resolved_.value_or(requested_.value_or(Presentation::Crossed));
        return ParsedExpr{std::move(root), space_, p};
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& take() { return tokens_[pos_++]; }

    bool is_punct(const char* p) const { return peek().kind == Tok::Punct && peek().text == p; }

    bool accept(const char* p)
    {
        if (!is_punct(p))
            return false;
        ++pos_;
        return true;
    }

    [[noreturn]] void fail(const Token& at, const std::string& message, std::vector<std::string> expected = {}) const
    {
        throw ParseError(at.loc.line, at.loc.column, message, std::move(expected));
    }

    [[noreturn]] void fail_at(const SourceLoc& loc, const std::string& message) const
    {
        throw ParseError(loc.line, loc.column, message);
    }

    const Token& expect(const char* p)
    {
        if (!is_punct(p))
            fail(peek(), "unexpected " + show(peek()), {std::string("'") + p + "'"});
        return take();
    }

    long integer()
    {
        if (peek().kind != Tok::Int)
            fail(peek(), "unexpected " + show(peek()), {"integer"});
        const Token& t = take();
        const Integer v(t.text);
        if (v > std::numeric_limits<int>::max())
            fail(t, "integer " + t.text + " is out of range");
        return v.get_si();
    }

    int signed_integer()
    {
        const bool neg = accept("-");
        return static_cast<int>(neg ? -integer() : integer());
    }

    int optional_exponent() { return accept("^") ? signed_integer() : 1; }

    static NodePtr node(ExprNode::Kind kind, SourceLoc loc, ValueType type)
    {
        auto n = std::make_unique<ExprNode>();
        n->kind = kind;
        n->loc = loc;
        n->type = type;
        return n;
    }

    void use_presentation(Presentation p, const Token& at)
    {
        if (requested_ && *requested_ != p)
            fail(at, "type error: " + show(at) + " belongs to the " + presentation_name(p)
                         + " presentation, but " + presentation_name(*requested_) + " was requested");
        if (resolved_ && *resolved_ != p)
            fail(at, "type error: " + show(at) + " mixes the " + presentation_name(p) + " and "
                         + presentation_name(*resolved_) + " presentations");
        resolved_ = p;
    }

    // Cyclic index in (-N, N), reduced modulo N.
    int point_index()
    {
        const Token& at = peek();
        const int k = signed_integer();
        const int n = space_.size();
        if (k <= -n || k >= n)
            fail(at, "index " + std::to_string(k) + " is out of range for " + space_.to_string() + " (need |k| < "
                         + std::to_string(n) + ")");
        return ((k % n) + n) % n;
    }

    void require_finite(const Token& at)
    {
        if (!space_.is_finite())
            fail(at, show(at) + " needs a finite space, got " + space_.to_string());
    }

    // Variable number of `z`/`q` on a torus: bare name for d = 1, else 1..d.
    int torus_variable(const Token& t)
    {
        if (space_.is_finite())
            fail(t, show(t) + " needs a torus space, got " + space_.to_string());
        const int d = space_.dim();
        if (t.suffix.empty()) {
            if (d != 1)
                fail(t, "bare '" + t.text + "' is ambiguous on " + space_.to_string() + "; write " + t.text + "1.."
                            + t.text + std::to_string(d));
            return 1;
        }
        const long i = std::stol(t.suffix);
        if (i < 1 || i > d)
            fail(t, show(t) + " is out of range for " + space_.to_string());
        return static_cast<int>(i);
    }

    NodePtr expr()
    {
        const Token& first = peek();
        NodePtr n;
        if (accept("-")) {
            NodePtr inner = term();
            n = node(ExprNode::Kind::Neg, first.loc, inner->type);
            n->args.push_back(std::move(inner));
        } else {
            n = term();
        }
        while (is_punct("+") || is_punct("-")) {
            const Token& op = take();
            NodePtr rhs = term();
            if (rhs->type != n->type)
                fail(op, "type error: cannot combine " + type_word(n->type) + " and " + type_word(rhs->type));
            NodePtr sum = node(op.text == "+" ? ExprNode::Kind::Add : ExprNode::Kind::Sub, op.loc, n->type);
            sum->args.push_back(std::move(n));
            sum->args.push_back(std::move(rhs));
            n = std::move(sum);
        }
        return n;
    }

    NodePtr term()
    {
        NodePtr n = factor();
        while (is_punct("*")) {
            const Token& op = take();
            NodePtr rhs = factor();
            const ValueType a = n->type;
            const ValueType b = rhs->type;
            ValueType t;
            if (a == ValueType::Element && b == ValueType::Element)
                fail(op, "type error: elements multiply only by scalars; use [a, b] for the bracket");
            else if ((a == ValueType::Element || b == ValueType::Element)
                     && (a == ValueType::Function || b == ValueType::Function))
                fail(op, "type error: cannot multiply a function and an element");
            if (a == ValueType::Element || b == ValueType::Element)
                t = ValueType::Element;
            else if (a == ValueType::Function || b == ValueType::Function)
                t = ValueType::Function;
            else
                t = ValueType::Scalar;
            NodePtr prod = node(ExprNode::Kind::Mul, op.loc, t);
            prod->args.push_back(std::move(n));
            prod->args.push_back(std::move(rhs));
            n = std::move(prod);
        }
        return n;
    }

    NodePtr function_argument(const Token& at)
    {
        NodePtr f = expr();
        if (f->type == ValueType::Element)
            fail(at, "type error: " + show(at) + " takes a function, got an element");
        return f;
    }

    NodePtr factor()
    {
        const Token& t = peek();
        if (t.kind == Tok::Int) {
            take();
            NodePtr n = node(ExprNode::Kind::Number, t.loc, ValueType::Scalar);
            n->value = Rational(Integer(t.text));
            if (accept("/")) {
                const Token& d = peek();
                if (d.kind != Tok::Int)
                    fail(d, "unexpected " + show(d), {"integer"});
                take();
                const Integer den(d.text);
                if (den == 0)
                    fail(d, "division by zero");
                n->value /= Rational(den);
            }
            return n;
        }
        if (accept("(")) {
            NodePtr inner = expr();
            expect(")");
            return inner;
        }
        if (is_punct("[")) {
            take();
            NodePtr first = expr();
            if (accept(",")) {
                NodePtr second = expr();
                expect("]");
                if (first->type != ValueType::Element || second->type != ValueType::Element)
                    fail(t, "type error: the bracket takes two elements");
                NodePtr n = node(ExprNode::Kind::Bracket, t.loc, ValueType::Element);
                n->args.push_back(std::move(first));
                n->args.push_back(std::move(second));
                return n;
            }
            if (!accept("]"))
                fail(peek(), "unexpected " + show(peek()), {"','", "']'"});
            const Token& u = peek();
            if (u.kind != Tok::Ident || u.text != "U" || !u.suffix.empty())
                fail(u, "unexpected " + show(u), {"'U'"});
            take();
            expect("^");
            if (first->type == ValueType::Element)
                fail(t, "type error: [f]U^n takes a function, got an element");
            use_presentation(Presentation::Crossed, t);
            NodePtr n = node(ExprNode::Kind::Crossed, t.loc, ValueType::Element);
            n->a = signed_integer();
            n->args.push_back(std::move(first));
            return n;
        }
        if (t.kind != Tok::Ident)
            fail(t, "unexpected " + show(t), kFactorStart);
        take();
        const std::string& name = t.text;
        auto no_suffix = [&] {
            if (!t.suffix.empty())
                fail(t, "unknown name " + show(t), kFactorStart);
        };
        if (name == "z") {
            if (space_.is_finite()) {
                if (t.suffix.empty())
                    fail(t, "roots of unity are written zN, e.g. z" + std::to_string(space_.size()));
                const long order = std::stol(t.suffix);
                if (order < 1 || space_.size() % order != 0)
                    fail(t, show(t) + " is not in the scalar field Q(zeta_" + std::to_string(space_.size()) + ")");
                NodePtr n = node(ExprNode::Kind::RootOfUnity, t.loc, ValueType::Scalar);
                n->a = static_cast<int>(order);
                n->b = optional_exponent();
                return n;
            }
            NodePtr n = node(ExprNode::Kind::Coordinate, t.loc, ValueType::Function);
            n->a = torus_variable(t);
            n->b = optional_exponent();
            return n;
        }
        if (name == "q") {
            NodePtr n = node(ExprNode::Kind::Angle, t.loc, ValueType::Scalar);
            n->a = torus_variable(t);
            n->b = optional_exponent();
            return n;
        }
        if (name == "delta" || name == "chi") {
            no_suffix();
            require_finite(t);
            expect("(");
            NodePtr n = node(name == "delta" ? ExprNode::Kind::Delta : ExprNode::Kind::Character, t.loc,
                             ValueType::Function);
            n->a = point_index();
            expect(")");
            return n;
        }
        if (name == "one") {
            no_suffix();
            return node(ExprNode::Kind::One, t.loc, ValueType::Function);
        }
        if (name == "c") {
            no_suffix();
            return node(ExprNode::Kind::Central, t.loc, ValueType::Element);
        }
        if (name == "X") {
            no_suffix();
            use_presentation(Presentation::Root, t);
            expect("[");
            NodePtr n = node(ExprNode::Kind::Root, t.loc, ValueType::Element);
            n->a = signed_integer();
            expect("]");
            expect("(");
            n->args.push_back(function_argument(t));
            expect(")");
            return n;
        }
        if (name == "Y") {
            no_suffix();
            use_presentation(Presentation::Char, t);
            expect("[");
            NodePtr n = node(ExprNode::Kind::Symbol, t.loc, ValueType::Element);
            if (space_.is_finite()) {
                const bool paren = accept("(");
                n->index = {point_index()};
                if (paren)
                    expect(")");
            } else {
                const Token& at = peek();
                if (accept("(")) {
                    n->index.push_back(signed_integer());
                    while (accept(","))
                        n->index.push_back(signed_integer());
                    expect(")");
                } else {
                    n->index.push_back(signed_integer());
                }
                if (static_cast<int>(n->index.size()) != space_.dim())
                    fail(at, "character index has " + std::to_string(n->index.size()) + " entries, "
                                 + space_.to_string() + " needs " + std::to_string(space_.dim()));
            }
            expect(",");
            n->a = signed_integer();
            expect("]");
            return n;
        }
        fail(t, "unknown name " + show(t), kFactorStart);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    SpaceSpec space_;
    std::optional<Presentation> requested_;
    std::optional<Presentation> resolved_;
};

// -------------------------------------------------------------- evaluation

template <class F>
Element zip(const Element& a, const Element& b, F&& f)
{
    return std::visit(
        [&](const auto& x) -> Element {
            using T = std::decay_t<decltype(x)>;
            return Element(f(x, std::get<T>(b)));
        },
        a);
}

Element scale(const Element& e, const Scalar& s)
{
    return std::visit(
        [&](auto x) -> Element {
            x *= s;
            return Element(std::move(x));
        },
        e);
}

LieElem bracket_of(const LieElem& a, const LieElem& b)
{
    return bracket_extended(a, b);
}
RootElem bracket_of(const RootElem& a, const RootElem& b)
{
    return bracket_root(a, b);
}
CharBasisElem bracket_of(const CharBasisElem& a, const CharBasisElem& b)
{
    return bracket_Y(a, b);
}

class Evaluator {
public:
    explicit Evaluator(const ParsedExpr& e) : space_(e.space), presentation_(e.presentation) {}

    Value eval(const ExprNode& n) const
    {
        using K = ExprNode::Kind;
        switch (n.kind) {
        case K::Number:
            return Scalar(n.value);
        case K::RootOfUnity:
            return Scalar::root_of_unity(n.a, n.b);
        case K::Angle:
            return Scalar::q_power(space_.dim(), n.a - 1, n.b);
        case K::Coordinate: {
            Freq k(static_cast<std::size_t>(space_.dim()));
            k[static_cast<std::size_t>(n.a - 1)] = n.b;
            return FnElem::torus_monomial(space_, k);
        }
        case K::Delta:
            return FnElem::delta(space_, n.a);
        case K::Character:
            return FnElem::character(space_, n.a);
        case K::One:
            return FnElem::one(space_);
        case K::Central:
            return central();
        case K::Crossed:
            return Element(LieElem::monomial(n.a, function(eval(*n.args[0]))));
        case K::Root:
            return Element(RootElem::monomial(n.a, function(eval(*n.args[0]))));
        case K::Symbol:
            return Element(CharBasisElem::symbol(CharSymbol(space_, n.index), n.a));
        case K::Neg:
            return negate(eval(*n.args[0]));
        case K::Add:
        case K::Sub: {
            const Value a = eval(*n.args[0]);
            Value b = eval(*n.args[1]);
            if (n.kind == K::Sub)
                b = negate(b);
            return add(a, b);
        }
        case K::Mul:
            return multiply(eval(*n.args[0]), eval(*n.args[1]));
        case K::Bracket:
            return bracket(std::get<Element>(eval(*n.args[0])), std::get<Element>(eval(*n.args[1])));
        }
        throw DomainError("unknown expression node");
    }

private:
    Element central() const
    {
        switch (presentation_) {
        case Presentation::Crossed:
            return LieElem::central_element(space_, Scalar(1));
        case Presentation::Root:
            return RootElem::central_element(space_, Scalar(1));
        case Presentation::Char:
            return CharBasisElem::central_element(space_, Scalar(1));
        }
        return LieElem::central_element(space_, Scalar(1));
    }

    FnElem function(const Value& v) const
    {
        if (const auto* s = std::get_if<Scalar>(&v))
            return FnElem::constant(space_, *s);
        return std::get<FnElem>(v);
    }

    static Value negate(const Value& v)
    {
        if (const auto* s = std::get_if<Scalar>(&v))
            return -*s;
        if (const auto* f = std::get_if<FnElem>(&v))
            return -*f;
        return scale(std::get<Element>(v), Scalar(-1));
    }

    static Value add(const Value& a, const Value& b)
    {
        if (const auto* s = std::get_if<Scalar>(&a))
            return *s + std::get<Scalar>(b);
        if (const auto* f = std::get_if<FnElem>(&a))
            return *f + std::get<FnElem>(b);
        return zip(std::get<Element>(a), std::get<Element>(b), [](const auto& x, const auto& y) { return x + y; });
    }

    static Value multiply(const Value& a, const Value& b)
    {
        const auto* sa = std::get_if<Scalar>(&a);
        const auto* sb = std::get_if<Scalar>(&b);
        if (sa && sb)
            return *sa * *sb;
        if (sa && std::holds_alternative<FnElem>(b))
            return std::get<FnElem>(b) * *sa;
        if (sb && std::holds_alternative<FnElem>(a))
            return std::get<FnElem>(a) * *sb;
        if (std::holds_alternative<FnElem>(a) && std::holds_alternative<FnElem>(b))
            return fn_mul(std::get<FnElem>(a), std::get<FnElem>(b));
        if (sa)
            return scale(std::get<Element>(b), *sa);
        return scale(std::get<Element>(a), *sb);
    }

    SpaceSpec space_;
    Presentation presentation_;
};

} // namespace

ParsedExpr parse_expression(std::string_view text, const SpaceSpec& space, std::optional<Presentation> presentation)
{
    return Parser(text, space, presentation).run();
}

Value evaluate(const ParsedExpr& expr)
{
    return Evaluator(expr).eval(*expr.root);
}

Element bracket(const Element& a, const Element& b)
{
    if (a.index() != b.index())
        throw UsageError("bracket operands use different presentations");
    return zip(a, b, [](const auto& x, const auto& y) { return bracket_of(x, y); });
}

Presentation presentation_of(const Element& e)
{
    switch (e.index()) {
    case 1:
        return Presentation::Root;
    case 2:
        return Presentation::Char;
    default:
        return Presentation::Crossed;
    }
}

std::string render(const Element& e)
{
    return std::visit([](const auto& x) { return to_string(x); }, e);
}

std::string render(const Value& v)
{
    if (const auto* s = std::get_if<Scalar>(&v))
        return s->to_string();
    if (const auto* f = std::get_if<FnElem>(&v))
        return f->to_string();
    return render(std::get<Element>(v));
}

std::string type_name(const Value& v)
{
    if (std::holds_alternative<Scalar>(v))
        return "scalar";
    if (std::holds_alternative<FnElem>(v))
        return "function";
    return "element";
}

} // namespace liedyn
