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

#pragma once

// Element expressions shared by the command-line tools.
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := INT ['/' INT]
//           | 'z' N ['^' exp]              root of unity (finite spaces)
//           | 'z' [i] ['^' exp]            coordinate function (tori)
//           | 'q' [i] ['^' exp]            formal angle (tori)
//           | 'delta' '(' idx ')' | 'chi' '(' idx ')' | 'one' | 'c'
//           | 'X' '[' exp ']' '(' expr ')'
//           | 'Y' '[' (idx | '(' idx (',' idx)* ')') ',' exp ']'
//           | '(' expr ')'
//           | '[' expr (',' expr ']' | ']' 'U' '^' exp)
//   exp    := ['-'] INT
//   idx    := ['-'] INT
//
// `[a, b]` is the bracket of the active presentation; `[f]U^n` is a
// crossed-product monomial. An expression uses a single presentation.

#include "liedyn/error.hpp"
#include "liedyn/spectrum.hpp"
#include "liedyn/rootform.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace liedyn {

enum class Presentation { Crossed, Root, Char };

std::string presentation_name(Presentation p);
/// `crossed`, `root` or `char`.
std::optional<Presentation> parse_presentation(std::string_view name);

/// Lexical, syntax, type and index-range errors, with a 1-based position
/// and the tokens that would have been accepted there.
class ParseError : public UsageError {
public:
    ParseError(int line, int column, const std::string& message, std::vector<std::string> expected = {});

    int line() const { return line_; }
    int column() const { return column_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    int line_;
    int column_;
    std::vector<std::string> expected_;
};

enum class ValueType { Scalar, Function, Element };

struct SourceLoc {
    int line = 1;
    int column = 1;
};

struct ExprNode {
    enum class Kind {
        Number,     // value
        RootOfUnity, // order a, power b
        Angle,      // variable a, power b
        Coordinate, // variable a, power b
        Delta,      // point a
        Character,  // index a
        One,
        Central,
        Crossed,    // grade a, args[0]
        Root,       // grade a, args[0]
        Symbol,     // index, grade a
        Neg,
        Add,
        Sub,
        Mul,
        Bracket,
    };

    Kind kind;
    SourceLoc loc;
    ValueType type = ValueType::Scalar;
    Rational value;
    int a = 0;
    int b = 0;
    CharIndex index;
    std::vector<std::unique_ptr<ExprNode>> args;
};

struct ParsedExpr {
    std::unique_ptr<ExprNode> root;
    SpaceSpec space;
    /// Presentation of element-valued expressions; `c` alone defaults to
    /// the requested one, else crossed.
    Presentation presentation;
};

/// Parses and type-checks. `presentation`, when given, is required of
/// every presentation-specific atom.
ParsedExpr parse_expression(std::string_view text, const SpaceSpec& space,
                            std::optional<Presentation> presentation = std::nullopt);

using Element = std::variant<LieElem, RootElem, CharBasisElem>;
using Value = std::variant<Scalar, FnElem, Element>;

Value evaluate(const ParsedExpr& expr);

/// Bracket in the presentation of the operands.
Element bracket(const Element& a, const Element& b);

Presentation presentation_of(const Element& e);
std::string render(const Element& e);
/// Canonical text accepted back by parse_expression.
std::string render(const Value& v);
std::string type_name(const Value& v);

} // namespace liedyn
