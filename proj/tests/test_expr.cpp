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


#include "doctest.h"

#include "liedyn/expr.hpp"
#include "liedyn/random.hpp"

#include <algorithm>

using namespace liedyn;

namespace {

std::string eval(const std::string& text, const std::string& space, std::optional<Presentation> p = std::nullopt)
{
    return render(evaluate(parse_expression(text, SpaceSpec::parse(space), p)));
}

ParseError parse_failure(const std::string& text, const std::string& space)
{
    try {
        parse_expression(text, SpaceSpec::parse(space));
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error for " << text);
    return ParseError(0, 0, "");
}

Element reparse(const Element& e, const SpaceSpec& space)
{
    const auto v = evaluate(parse_expression(render(e), space, presentation_of(e)));
    return std::get<Element>(v);
}

} // namespace

TEST_CASE("evaluation of brackets")
{
    CHECK(eval("[[delta(0)]U^1,[delta(1)]U^-1]", "cyclic:2") == "[1*delta(0) - 1*delta(1)]U^0 + 1/2*c");
    CHECK(eval("[X[1](one), X[-1](one)]", "cyclic:3") == "1*c");
    CHECK(eval("[Y[1,1],Y[-1,-1]]", "cyclic:4") == "(-z4^1)*c");
    CHECK(eval("[X[1](delta(0)), X[-1](delta(0))]", "cyclic:3") == "X[0](2/3*delta(0) - 1/3*delta(1) - 1/3*delta(2)) + 1/3*c");
    CHECK(eval("[[z^1]U^1, [z^-1]U^-1]", "torus:1") == "(q^-1)*c");
    CHECK(eval("[Y[1,2], Y[1,1]]", "cyclic:4") == "(-z4^1 - 1)*Y[2,3]");
}

TEST_CASE("scalars and functions")
{
    CHECK(eval("1/2 + 1/3", "cyclic:3") == "5/6");
    CHECK(eval("z4^2", "cyclic:4") == "-1");
    CHECK(eval("2*delta(1) - delta(1)", "cyclic:3") == "1*delta(1)");
    CHECK(eval("-(1 + 2) * 3", "cyclic:2") == "-9");
    CHECK(type_name(evaluate(parse_expression("delta(0)", SpaceSpec::cyclic(2)))) == "function");
    CHECK(type_name(evaluate(parse_expression("c", SpaceSpec::cyclic(2)))) == "element");
    CHECK(type_name(evaluate(parse_expression("q^2", SpaceSpec::torus(1)))) == "scalar");
}

TEST_CASE("presentation of the central generator alone")
{
    const auto s = SpaceSpec::cyclic(3);
    CHECK(parse_expression("c", s).presentation == Presentation::Crossed);
    CHECK(parse_expression("c", s, Presentation::Char).presentation == Presentation::Char);
    CHECK(parse_expression("X[1](one) + c", s).presentation == Presentation::Root);
}

TEST_CASE("rendered elements parse back to themselves")
{
    for (const auto& text : {"cyclic:2", "cyclic:4", "padic:3:2", "torus:1", "torus:2"}) {
        const auto space = SpaceSpec::parse(text);
        ElementSampler sampler(space, 2024);
        for (int i = 0; i < 40; ++i) {
            const Element a = sampler.lie_element();
            const Element b = sampler.root_element();
            const Element c = sampler.char_element();
            CAPTURE(render(a));
            CAPTURE(render(b));
            CAPTURE(render(c));
            CHECK(reparse(a, space) == a);
            CHECK(reparse(b, space) == b);
            CHECK(reparse(c, space) == c);
        }
    }
}

TEST_CASE("diagnostics carry positions and expected tokens")
{
    const auto e1 = parse_failure("[one]U^", "cyclic:3");
    CHECK(e1.line() == 1);
    CHECK(e1.column() == 8);
    CHECK(std::find(e1.expected().begin(), e1.expected().end(), "integer") != e1.expected().end());

    const auto e2 = parse_failure("((1 + 2)", "cyclic:3");
    CHECK(e2.column() == 9);
    CHECK(std::string(e2.what()).find("')'") != std::string::npos);

    const auto e3 = parse_failure("1 +\n  delta(7)", "cyclic:3");
    CHECK(e3.line() == 2);
    CHECK(std::string(e3.what()).find("out of range") != std::string::npos);

    CHECK(std::string(parse_failure("delta(0) + c", "cyclic:3").what()).find("type error") != std::string::npos);
    CHECK(std::string(parse_failure("X[1](one) + [one]U^1", "cyclic:3").what()).find("presentations") !=
          std::string::npos);
    CHECK(std::string(parse_failure("delta(0)", "torus:1").what()).find("finite") != std::string::npos);
    CHECK(std::string(parse_failure("z^2", "torus:2").what()).find("ambiguous") != std::string::npos);
    CHECK_THROWS_AS(parse_expression("3/0", SpaceSpec::cyclic(2)), ParseError);
    CHECK_THROWS_AS(parse_expression("[one]U^1", SpaceSpec::cyclic(2), Presentation::Root), ParseError);
    CHECK_THROWS_AS(parse_expression("Y[1,1] # 2", SpaceSpec::cyclic(2)), ParseError);
}

TEST_CASE("presentation names")
{
    for (auto p : {Presentation::Crossed, Presentation::Root, Presentation::Char})
        CHECK(parse_presentation(presentation_name(p)) == p);
    CHECK_FALSE(parse_presentation("matrix").has_value());
}
