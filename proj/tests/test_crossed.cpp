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
#include "oracle.hpp"

#include "liedyn/crossed.hpp"
#include "liedyn/error.hpp"
#include "liedyn/random.hpp"

using namespace liedyn;

namespace {

const std::vector<std::string> kFinite{"cyclic:2", "cyclic:3", "cyclic:4", "padic:2:2", "padic:3:2"};

LieElem without_center(LieElem a)
{
    a.add_central(-a.central());
    return a;
}

oracle::Mat adjoint(const oracle::Mat& m)
{
    oracle::Mat out = m;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            out[i][j] = std::conj(m[j][i]);
    return out;
}

/// Numeric [a, b] on a torus at the point theta, grade by grade, plus the
/// cocycle from a grid average.
struct TorusShadow {
    std::map<int, oracle::cplx> at_theta;
    oracle::cplx central = 0;
};

TorusShadow torus_bracket(const LieElem& a, const LieElem& b, const std::vector<double>& theta,
                          const std::vector<double>& alpha)
{
    auto shifted = [&](const std::vector<double>& t, int n) {
        auto out = t;
        for (std::size_t j = 0; j < out.size(); ++j)
            out[j] += n * alpha[j];
        return out;
    };
    TorusShadow out;
    for (const auto& [n, f] : a.terms()) {
        for (const auto& [m, g] : b.terms()) {
            out.at_theta[n + m] += oracle::eval_torus(f, theta, alpha) * oracle::eval_torus(g, shifted(theta, n), alpha) -
                                   oracle::eval_torus(g, theta, alpha) * oracle::eval_torus(f, shifted(theta, m), alpha);
            if (n + m != 0 || n == 0)
                continue;
            const int grid = 16;
            oracle::cplx avg = 0;
            const std::size_t d = alpha.size();
            for (int i = 0; i < grid; ++i) {
                for (int j = 0; j < (d == 2 ? grid : 1); ++j) {
                    std::vector<double> t{2 * std::numbers::pi * i / grid};
                    if (d == 2)
                        t.push_back(2 * std::numbers::pi * j / grid);
                    avg += oracle::eval_torus(f, t, alpha) * oracle::eval_torus(g, shifted(t, n), alpha);
                }
            }
            out.central += static_cast<double>(n) * avg / (d == 2 ? double(grid * grid) : double(grid));
        }
    }
    return out;
}

} // namespace

TEST_CASE("finite brackets agree with operator commutators")
{
    for (const auto& text : kFinite) {
        const auto space = SpaceSpec::parse(text);
        const int n = space.size();
        ElementSampler sampler(space, 17);
        for (int i = 0; i < 60; ++i) {
            const auto a = sampler.lie_element();
            const auto b = sampler.lie_element();
            CAPTURE(text);
            CAPTURE(to_string(a));
            CAPTURE(to_string(b));
            const auto expected = oracle::op_bracket(oracle::to_operators(a), oracle::to_operators(b), n);
            CHECK(oracle::op_equal(oracle::to_operators(bracket_extended(a, b)), expected, n));
            CHECK(oracle::close(oracle::numeric(cocycle_alpha(a, b)), expected.central));
            auto plain = oracle::op_bracket(oracle::to_operators(without_center(a)), oracle::to_operators(b), n);
            plain.central = 0;
            CHECK(oracle::op_equal(oracle::to_operators(bracket_plain(without_center(a), without_center(b))), plain, n));
        }
    }
}

TEST_CASE("associative product and involution agree with matrices")
{
    for (const auto& text : kFinite) {
        const auto space = SpaceSpec::parse(text);
        const int n = space.size();
        ElementSampler sampler(space, 29);
        for (int i = 0; i < 40; ++i) {
            const auto a = without_center(sampler.lie_element());
            const auto b = without_center(sampler.lie_element());
            oracle::OpElem prod;
            for (const auto& [g, x] : oracle::to_operators(a).parts)
                for (const auto& [h, y] : oracle::to_operators(b).parts)
                    oracle::add_scaled(prod.parts.try_emplace(g + h, oracle::zeros(n)).first->second,
                                       oracle::matmul(x, y), 1);
            CHECK(oracle::op_equal(oracle::to_operators(assoc_mul(a, b)), prod, n));

            oracle::OpElem adj;
            for (const auto& [g, x] : oracle::to_operators(a).parts)
                adj.parts[-g] = adjoint(x);
            CHECK(oracle::op_equal(oracle::to_operators(involution(a)), adj, n));
        }
    }
}

TEST_CASE("torus brackets evaluate pointwise")
{
    for (int d : {1, 2}) {
        const auto space = SpaceSpec::torus(d);
        const std::vector<double> alpha = d == 1 ? std::vector<double>{1.1} : std::vector<double>{1.1, 0.45};
        const std::vector<double> theta = d == 1 ? std::vector<double>{0.4} : std::vector<double>{0.4, -2.2};
        ElementSampler sampler(space, 31);
        for (int i = 0; i < 40; ++i) {
            const auto a = sampler.lie_element();
            const auto b = sampler.lie_element();
            const auto shadow = torus_bracket(a, b, theta, alpha);
            const auto result = bracket_extended(a, b);
            CAPTURE(to_string(a));
            CAPTURE(to_string(b));
            for (const auto& [g, v] : shadow.at_theta)
                CHECK(oracle::close(oracle::eval_torus(result.component(g), theta, alpha), v));
            for (const auto& [g, f] : result.terms())
                CHECK(shadow.at_theta.contains(g));
            CHECK(oracle::close(oracle::numeric(result.central(), alpha), shadow.central));
        }
    }
}

TEST_CASE("lie algebra laws on random elements")
{
    for (const auto& text : {"cyclic:3", "padic:2:2", "torus:1", "torus:2"}) {
        const auto space = SpaceSpec::parse(text);
        ElementSampler sampler(space, 41);
        for (int i = 0; i < 40; ++i) {
            const auto a = without_center(sampler.lie_element());
            const auto b = without_center(sampler.lie_element());
            const auto c = without_center(sampler.lie_element());
            CHECK((bracket_extended(a, b) + bracket_extended(b, a)).is_zero());
            const auto jacobi = bracket_extended(a, bracket_extended(b, c)) + bracket_extended(b, bracket_extended(c, a)) +
                                bracket_extended(c, bracket_extended(a, b));
            CHECK(jacobi.is_zero());
            CHECK(involution(involution(a)) == a);
            CHECK(involution(assoc_mul(a, b)) == assoc_mul(involution(b), involution(a)));
            // the cocycle is a 2-cocycle
            const auto cyc = cocycle_alpha(a, bracket_plain(b, c)) + cocycle_alpha(b, bracket_plain(c, a)) +
                             cocycle_alpha(c, bracket_plain(a, b));
            CHECK(cyc.is_zero());
        }
    }
}

TEST_CASE("involution on a torus monomial")
{
    const auto space = SpaceSpec::torus(1);
    const auto a = LieElem::monomial(1, FnElem::torus_monomial(space, {1}));
    const auto expected = LieElem::monomial(-1, FnElem::torus_monomial(space, {-1}, Scalar::q_power(1, 0, 1)));
    CHECK(involution(a) == expected);
}

TEST_CASE("bracket rendering")
{
    const auto space = SpaceSpec::cyclic(2);
    const auto a = LieElem::monomial(1, FnElem::delta(space, 0));
    const auto b = LieElem::monomial(-1, FnElem::delta(space, 1));
    CHECK(to_string(bracket_extended(a, b)) == "[1*delta(0) - 1*delta(1)]U^0 + 1/2*c");
    CHECK(to_string(LieElem(space)) == "0");
}

TEST_CASE("center handling")
{
    const auto space = SpaceSpec::cyclic(3);
    const auto a = LieElem::monomial(0, FnElem::delta(space, 1));
    const auto [rest, central] = decompose_center(a);
    CHECK(central == Scalar(Rational(1, 3)));
    CHECK(mean(rest.component(0)).is_zero());
    CHECK(collapse_center(rest + LieElem::central_element(space, central)) == a);
    CHECK(collapse_center(LieElem::central_element(space, Scalar(2))) ==
          LieElem::monomial(0, FnElem::constant(space, Scalar(2))));
    CHECK_THROWS_AS(decompose_center(LieElem::central_element(space, Scalar(1))), DomainError);
}

TEST_CASE("space mismatch is reported")
{
    const auto a = LieElem::monomial(1, FnElem::one(SpaceSpec::cyclic(3)));
    const auto b = LieElem::monomial(1, FnElem::one(SpaceSpec::cyclic(4)));
    CHECK_THROWS_AS(bracket_extended(a, b), SpaceMismatch);
}

TEST_CASE("the cocycle is not a coboundary")
{
    const auto cert = coboundary_system(SpaceSpec::cyclic(2), 2);
    CHECK(cert.equations == 100);
    CHECK(cert.unknowns == 18);
    CHECK(cert.rank_lhs == 11);
    CHECK(cert.rank_augmented == 12);
    CHECK(cert.infeasible());
    CHECK(verify_not_coboundary(SpaceSpec::cyclic(3), 2));
    CHECK(verify_not_coboundary(SpaceSpec::cyclic(2), 1));
    CHECK_THROWS_AS(verify_not_coboundary(SpaceSpec::torus(1), 2), DomainError);
}
