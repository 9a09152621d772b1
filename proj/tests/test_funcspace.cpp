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

#include "liedyn/error.hpp"
#include "liedyn/funcspace.hpp"
#include "liedyn/random.hpp"

using namespace liedyn;

namespace {

const std::vector<std::string> kFinite{"cyclic:2", "cyclic:3", "cyclic:5", "padic:2:2", "padic:3:2"};

std::vector<oracle::cplx> mat_vec(const oracle::Mat& m, const std::vector<oracle::cplx>& v)
{
    std::vector<oracle::cplx> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            out[i] += m[i][j] * v[j];
    return out;
}

bool close_vec(const std::vector<oracle::cplx>& a, const std::vector<oracle::cplx>& b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!oracle::close(a[i], b[i]))
            return false;
    return true;
}

} // namespace

TEST_CASE("space literals")
{
    CHECK(SpaceSpec::parse("cyclic:4").size() == 4);
    CHECK(SpaceSpec::parse("padic:3:2").size() == 9);
    CHECK(SpaceSpec::parse("padic:2:3").next_level() == SpaceSpec::padic(2, 4));
    CHECK(SpaceSpec::parse("torus:2").dim() == 2);
    CHECK(SpaceSpec::parse("torus:2").to_string() == "torus:2");
    CHECK_THROWS_AS(SpaceSpec::parse("cyclic:1"), DomainError);
    CHECK_THROWS_AS(SpaceSpec::parse("padic:4:2"), DomainError);
    CHECK_THROWS_AS(SpaceSpec::parse("sphere:2"), UsageError);
    CHECK_THROWS_AS(SpaceSpec::parse("cyclic:x"), UsageError);
    CHECK_THROWS_AS(SpaceSpec::torus(2).size(), DomainError);
}

TEST_CASE("shift on deltas")
{
    const auto s = SpaceSpec::cyclic(5);
    CHECK(shift_U(FnElem::delta(s, 0), 1) == FnElem::delta(s, 4));
    CHECK(shift_U(FnElem::delta(s, 3), -1) == FnElem::delta(s, 4));
    CHECK(shift_U(FnElem::delta(s, 2), 5) == FnElem::delta(s, 2));
}

TEST_CASE("finite shift, product and mean agree with the operator model")
{
    for (const auto& text : kFinite) {
        const auto space = SpaceSpec::parse(text);
        const int n = space.size();
        ElementSampler sampler(space, 101);
        for (int i = 0; i < 40; ++i) {
            const auto f = sampler.function();
            const auto g = sampler.function();
            const int p = sampler.rng().uniform(-4, 4);
            CAPTURE(text);
            CHECK(close_vec(oracle::values(shift_U(f, p)), mat_vec(oracle::shift_matrix(n, p), oracle::values(f))));
            const auto fv = oracle::values(f);
            const auto gv = oracle::values(g);
            auto prod = fv;
            oracle::cplx avg = 0;
            for (int x = 0; x < n; ++x) {
                prod[x] *= gv[x];
                avg += fv[x];
            }
            CHECK(close_vec(oracle::values(f * g), prod));
            CHECK(oracle::close(oracle::numeric(mean(f)), avg / static_cast<double>(n)));
            CHECK(mean(shift_U(f, p)) == mean(f));
        }
    }
}

TEST_CASE("characters are eigenfunctions of U")
{
    const auto space = SpaceSpec::cyclic(6);
    for (int k = 0; k < 6; ++k) {
        const auto chi = FnElem::character(space, k);
        auto expected = chi;
        expected *= Scalar::root_of_unity(6, k);
        CHECK(shift_U(chi, 1) == expected);
        CHECK(mean(chi) == Scalar(k == 0 ? 1 : 0));
    }
}

TEST_CASE("torus shift and product evaluate pointwise")
{
    for (int d : {1, 2}) {
        const auto space = SpaceSpec::torus(d);
        const std::vector<double> alpha = d == 1 ? std::vector<double>{0.9} : std::vector<double>{0.9, -0.4};
        const std::vector<double> theta = d == 1 ? std::vector<double>{2.1} : std::vector<double>{2.1, 0.3};
        ElementSampler sampler(space, 202);
        for (int i = 0; i < 40; ++i) {
            const auto f = sampler.function();
            const auto g = sampler.function();
            const int p = sampler.rng().uniform(-3, 3);
            auto moved = theta;
            for (std::size_t j = 0; j < moved.size(); ++j)
                moved[j] += p * alpha[j];
            CHECK(oracle::close(oracle::eval_torus(shift_U(f, p), theta, alpha), oracle::eval_torus(f, moved, alpha)));
            CHECK(oracle::close(oracle::eval_torus(f * g, theta, alpha),
                                oracle::eval_torus(f, theta, alpha) * oracle::eval_torus(g, theta, alpha)));
            CHECK(oracle::close(oracle::numeric(mean(f), alpha), oracle::grid_mean(f, alpha)));
        }
    }
}

TEST_CASE("torus shift multiplies monomials by q^k")
{
    const auto space = SpaceSpec::torus(1);
    const auto z3 = FnElem::torus_monomial(space, {3});
    CHECK(shift_U(z3, 1) == FnElem::torus_monomial(space, {3}, Scalar::q_power(1, 0, 3)));
    CHECK(z3.to_string() == "1*z^3");
}

TEST_CASE("conjugation")
{
    const auto space = SpaceSpec::cyclic(4);
    ElementSampler sampler(space, 7);
    for (int i = 0; i < 20; ++i) {
        const auto f = sampler.function();
        const auto fv = oracle::values(f);
        const auto cv = oracle::values(conjugate(f));
        for (std::size_t x = 0; x < fv.size(); ++x)
            CHECK(oracle::close(cv[x], std::conj(fv[x])));
    }
}

TEST_CASE("cartan operators")
{
    for (const auto& text : kFinite) {
        const auto space = SpaceSpec::parse(text);
        const int n = space.size();
        ElementSampler sampler(space, 303);
        for (int i = 0; i < 20; ++i) {
            const auto f = sampler.function();
            const auto fv = oracle::values(f);
            const auto up = mat_vec(oracle::shift_matrix(n, 1), fv);
            const auto down = mat_vec(oracle::shift_matrix(n, -1), fv);
            std::vector<oracle::cplx> k(fv.size());
            for (int x = 0; x < n; ++x)
                k[x] = 2.0 * fv[x] - up[x] - down[x];
            CHECK(close_vec(oracle::values(cartan_K(f)), k));
            CHECK(cartan_Kn(f, 1) == cartan_K(f));
            const long m = sampler.rng().uniform(1, 4);
            CHECK(cartan_Kn(f, m) == f - shift_U(f, -1) + shift_U(f, m - 1) - shift_U(f, m));
        }
    }
    CHECK_THROWS_AS(cartan_Kn(FnElem::one(SpaceSpec::cyclic(3)), 0), DomainError);
}

TEST_CASE("geometric sums and the inverse of one minus U^-1")
{
    for (const auto& text : {"cyclic:3", "padic:2:2", "torus:1", "torus:2"}) {
        const auto space = SpaceSpec::parse(text);
        ElementSampler sampler(space, 404);
        for (int i = 0; i < 30; ++i) {
            const auto f = sampler.function();
            const long m = sampler.rng().uniform(1, 4);
            FnElem sum(space);
            for (long j = 0; j < m; ++j)
                sum += shift_U(f, -j);
            CHECK(geometric_sum_U(f, m) == sum);

            const auto target = f - shift_U(f, -1);
            const auto g = solve_one_minus_Uinv(target);
            REQUIRE(g.has_value());
            CHECK(*g - shift_U(*g, -1) == target);
            CHECK(mean(*g).is_zero());
        }
        if (space.is_finite())
            CHECK_FALSE(solve_one_minus_Uinv(FnElem::one(space)).has_value());
    }
    // coefficients must stay Laurent polynomials
    const auto t = SpaceSpec::torus(1);
    CHECK_FALSE(solve_one_minus_Uinv(FnElem::torus_monomial(t, {2})).has_value());
    const auto g = solve_one_minus_Uinv(FnElem::torus_monomial(t, {2}, Scalar(1) - Scalar::q_power(1, 0, -2)));
    REQUIRE(g.has_value());
    CHECK(*g == FnElem::torus_monomial(t, {2}));
    CHECK_FALSE(solve_one_minus_Uinv(FnElem::one(t)).has_value());
}

TEST_CASE("level projection")
{
    const auto coarse = SpaceSpec::padic(2, 2);
    ElementSampler sampler(coarse, 9);
    for (int i = 0; i < 20; ++i) {
        const auto f = sampler.function();
        const auto g = sampler.function();
        const auto pf = project_to_level(f);
        REQUIRE(pf.space() == SpaceSpec::padic(2, 3));
        for (int x = 0; x < 8; ++x)
            CHECK(oracle::close(oracle::numeric(pf.value(x)), oracle::numeric(f.value(x % 4))));
        CHECK(project_to_level(f * g) == pf * project_to_level(g));
        CHECK(project_to_level(shift_U(f, 1)) == shift_U(pf, 1));
        CHECK(mean(pf) == mean(f));
    }
}

TEST_CASE("local algebra bracket")
{
    const auto space = SpaceSpec::cyclic(3);
    const CartanOperator k(space);
    const auto d0 = FnElem::delta(space, 0);
    const auto d1 = FnElem::delta(space, 1);
    const auto h = local_bracket(k, LocalElem::of(1, d0), LocalElem::of(-1, d0));
    CHECK(h == LocalElem::of(0, d0));
    const auto e = local_bracket(k, LocalElem::of(0, d0), LocalElem::of(1, d1));
    CHECK(e == LocalElem::of(1, cartan_K(d0) * d1));
    CHECK_THROWS_AS(local_bracket(k, LocalElem::of(1, d0), LocalElem::of(1, d1)), DomainError);

    std::vector<std::vector<Scalar>> m(3, std::vector<Scalar>(3, Scalar(0)));
    m[0][1] = Scalar(5);
    const auto custom = CartanOperator::custom(space, m);
    CHECK(custom.apply(d1) == FnElem::delta(space, 0) * FnElem::constant(space, Scalar(5)));
    CHECK_THROWS_AS(CartanOperator::custom(space, {{Scalar(1)}}), DomainError);
}
