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

#include "liedyn/rootform.hpp"

#include "liedyn/error.hpp"
#include "liedyn/random.hpp"

#include <functional>

namespace liedyn {

namespace {

RootElem root_monomial(int grade, const FnElem& f)
{
    return RootElem::monomial(grade, f);
}

RootElem transport_monomials(int n, const FnElem& phi, int m, const FnElem& psi)
{
    return tau(bracket_extended(tau_inverse(root_monomial(n, phi)), tau_inverse(root_monomial(m, psi))));
}

RootElem bracket_monomials(int n, const FnElem& phi, int m, const FnElem& psi)
{
    const SpaceSpec& space = phi.space();
    if (n == 0 && m == 0)
        return RootElem(space);
    if (n == 0) {
        const FnElem f = cartan_Kn(phi, m > 0 ? m : -m) * psi;
        return m > 0 ? root_monomial(m, f) : -root_monomial(m, f);
    }
    if (m == 0)
        return -bracket_monomials(m, psi, n, phi);
    if (n > 0 && m > 0)
        return root_monomial(n + m, phi * shift_U(psi, n) - psi * shift_U(phi, m));
    if (n < 0 && m < 0)
        return -root_monomial(n + m, phi * shift_U(psi, -n) - psi * shift_U(phi, -m));
    if (n + m == 0) {
        if (n < 0)
            return -bracket_monomials(m, psi, n, phi);
        const FnElem h = phi * psi;
        const Scalar mu = Scalar(n) * mean(h);
        RootElem out = root_monomial(0, geometric_sum_U(h, n) - FnElem::constant(space, mu));
        out.add_central(mu);
        return out;
    }
    return transport_monomials(n, phi, m, psi);
}

template <class F>
RootElem bilinear(const RootElem& a, const RootElem& b, F&& monomial_bracket)
{
    require_same_space(a.space(), b.space());
    RootElem out(a.space());
    for (const auto& [n, phi] : a.terms())
        for (const auto& [m, psi] : b.terms())
            out += monomial_bracket(n, phi, m, psi);
    return out;
}

std::string pair_text(int n, const FnElem& phi, int m, const FnElem& psi)
{
    return "X[" + std::to_string(n) + "](" + phi.to_string() + "), X[" + std::to_string(m) + "](" + psi.to_string()
        + ")";
}

std::string mismatch_text(const std::string& input, const std::string& got, const std::string& expected)
{
    return input + ": got " + got + ", expected " + expected;
}

// a - b lies in the central line plus X_0(constants).
bool equal_mod_constants(const RootElem& a, const RootElem& b)
{
    RootElem d = a - b;
    const FnElem f0 = d.component(0);
    d.add_term(0, FnElem::constant(d.space(), -mean(f0)));
    return d.terms().empty();
}

// As above, but the central coefficients must agree.
bool equal_mod_grade0_constants(const RootElem& a, const RootElem& b)
{
    return a.central() == b.central() && equal_mod_constants(a, b);
}

} // namespace

std::string to_string(const RootElem& a)
{
    std::vector<std::string> terms;
    for (const auto& [n, f] : a.terms())
        terms.push_back("X[" + std::to_string(n) + "](" + f.to_string() + ")");
    if (!a.central().is_zero())
        terms.push_back(signed_term(a.central(), "c"));
    return join_terms(terms);
}

RootElem tau(const LieElem& a)
{
    const SpaceSpec& space = a.space();
    RootElem out(space);
    for (const auto& [n, f] : a.terms()) {
        if (n > 0) {
            out.add_term(n, f);
        } else if (n < 0) {
            out.add_term(n, shift_U(f, -n));
        } else {
            const Scalar m = mean(f);
            const auto g = solve_one_minus_Uinv(f - FnElem::constant(space, m));
            if (!g)
                throw DomainError("grade-0 term " + f.to_string() + " is not in the image of tau");
            out.add_term(0, *g + FnElem::constant(space, m));
        }
    }
    out.add_central(a.central());
    return out;
}

LieElem tau_inverse(const RootElem& a)
{
    const SpaceSpec& space = a.space();
    LieElem out(space);
    for (const auto& [n, f] : a.terms()) {
        if (n > 0)
            out.add_term(n, f);
        else if (n < 0)
            out.add_term(n, shift_U(f, n));
        else
            out.add_term(0, f - shift_U(f, -1) + FnElem::constant(space, mean(f)));
    }
    out.add_central(a.central());
    return out;
}

RootElem bracket_root(const RootElem& a, const RootElem& b)
{
    return bilinear(a, b, bracket_monomials);
}

RootElem bracket_root_transport(const RootElem& a, const RootElem& b)
{
    return bilinear(a, b, transport_monomials);
}

Scalar cocycle_root(const RootElem& a, const RootElem& b)
{
    require_same_space(a.space(), b.space());
    Scalar out;
    for (const auto& [n, phi] : a.terms()) {
        if (n == 0)
            continue;
        auto it = b.terms().find(-n);
        if (it != b.terms().end())
            out += Scalar(n) * mean(phi * it->second);
    }
    return out;
}

RootElem collapse_center(const RootElem& a)
{
    RootElem out = a;
    const Scalar c = a.central();
    out.add_central(-c);
    out.add_term(0, FnElem::constant(a.space(), c));
    return out;
}

Report local_algebra_check(const SpaceSpec& space, std::size_t samples, std::uint64_t seed)
{
    Report report;
    report.title = "local-relations";
    report.header = {{"space", space.to_string()}, {"samples", std::to_string(samples)},
                     {"seed", std::to_string(seed)}};
    ElementSampler gen(space, seed);
    const CartanOperator k(space);

    CheckItem& r00 = report.add("[X0 f, X0 g] = 0");
    CheckItem& r0p = report.add("[X0 f, X1 g] = X1(K f . g)");
    CheckItem& r0m = report.add("[X0 f, X-1 g] = -X-1(K f . g)");
    CheckItem& rpm = report.add("[X1 f, X-1 g] = X0(f g) with c = X0(1)");
    CheckItem& loc = report.add("local algebra of (C(X), K) agrees with the bracket");
    CheckItem& c00 = report.add("[f (x) U^0, g (x) U^0] = 0");
    CheckItem& c0p = report.add("[f (x) U^0, g (x) U] = ((I - U) f . g) (x) U");
    CheckItem& c0m = report.add("[f (x) U^0, g (x) U^-1] = ((I - U^-1) f . g) (x) U^-1");
    CheckItem& cpm = report.add("[f (x) U, g (x) U^-1] = (f . U g - g . U^-1 f) (x) U^0 + mean(f . U g) c");
    CheckItem& hom = report.add("tau^-1 carries the local brackets to the crossed product");
    CheckItem& p0m = report.add("printed form -((I - U) f . g) (x) U^-1", true);
    CheckItem& ppm = report.add("printed form (f . U g - g . U f) (x) U^0 + mean(f . U g) c", true);

    for (std::size_t s = 0; s < samples; ++s) {
        const FnElem phi = gen.function();
        const FnElem psi = gen.function();
        const std::string in = "f=" + phi.to_string() + ", g=" + psi.to_string();
        auto check = [&](CheckItem& item, const auto& got, const auto& want) {
            item.record(got == want, mismatch_text(in, to_string(got), to_string(want)));
        };

        const RootElem x0f = root_monomial(0, phi);
        const RootElem x0g = root_monomial(0, psi);
        const RootElem x1f = root_monomial(1, phi);
        const RootElem x1g = root_monomial(1, psi);
        const RootElem xm1g = root_monomial(-1, psi);
        const FnElem kf = cartan_K(phi) * psi;

        check(r00, bracket_root(x0f, x0g), RootElem(space));
        check(r0p, bracket_root(x0f, x1g), root_monomial(1, kf));
        check(r0m, bracket_root(x0f, xm1g), -root_monomial(-1, kf));
        check(rpm, collapse_center(bracket_root(x1f, xm1g)), root_monomial(0, phi * psi));

        // The local algebra of the pair (C(X), K), compared grade by grade.
        {
            const std::pair<int, int> pairs[] = {{0, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 0}, {-1, 1}};
            bool ok = true;
            std::string bad;
            for (const auto& [i, j] : pairs) {
                const LocalElem got = local_bracket(k, LocalElem::of(i, phi), LocalElem::of(j, psi));
                const RootElem full = collapse_center(bracket_root(root_monomial(i, phi), root_monomial(j, psi)));
                const LocalElem want{full.component(-1), full.component(0), full.component(1)};
                if (!(got == want)) {
                    ok = false;
                    bad = "grades " + std::to_string(i) + "," + std::to_string(j);
                }
            }
            loc.record(ok, in + ": " + bad);
        }

        const LieElem f0 = LieElem::monomial(0, phi);
        const LieElem g0 = LieElem::monomial(0, psi);
        const LieElem f1 = LieElem::monomial(1, phi);
        const LieElem g1 = LieElem::monomial(1, psi);
        const LieElem gm1 = LieElem::monomial(-1, psi);
        LieElem want_pm = LieElem::monomial(0, phi * shift_U(psi, 1) - psi * shift_U(phi, -1));
        want_pm.add_central(mean(phi * shift_U(psi, 1)));

        check(c00, bracket_extended(f0, g0), LieElem(space));
        check(c0p, bracket_extended(f0, g1), LieElem::monomial(1, (phi - shift_U(phi, 1)) * psi));
        check(c0m, bracket_extended(f0, gm1), LieElem::monomial(-1, (phi - shift_U(phi, -1)) * psi));
        check(cpm, bracket_extended(f1, gm1), want_pm);

        {
            const std::pair<int, int> pairs[] = {{0, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}, {1, 0}};
            bool ok = true;
            std::string bad;
            for (const auto& [i, j] : pairs) {
                const RootElem a = root_monomial(i, phi);
                const RootElem b = root_monomial(j, psi);
                if (!(tau_inverse(bracket_root(a, b)) == bracket_extended(tau_inverse(a), tau_inverse(b)))) {
                    ok = false;
                    bad = "grades " + std::to_string(i) + "," + std::to_string(j);
                }
            }
            hom.record(ok, in + ": " + bad);
        }

        check(p0m, bracket_extended(f0, gm1), -LieElem::monomial(-1, (phi - shift_U(phi, 1)) * psi));
        LieElem printed_pm = LieElem::monomial(0, phi * shift_U(psi, 1) - psi * shift_U(phi, 1));
        printed_pm.add_central(mean(phi * shift_U(psi, 1)));
        check(ppm, bracket_extended(f1, gm1), printed_pm);
    }
    return report;
}

Report bracket_table_audit(const SpaceSpec& space, std::size_t samples, std::uint64_t seed)
{
    Report report;
    report.title = "bracket-table-audit";
    report.header = {{"space", space.to_string()}, {"samples", std::to_string(samples)},
                     {"seed", std::to_string(seed)}};
    ElementSampler gen(space, seed);

    using Formula = std::function<RootElem(int, const FnElem&, int, const FnElem&)>;
    using Compare = std::function<bool(const RootElem&, const RootElem&)>;
    struct Case {
        std::string name;
        bool informational;
        // Draws (n, m) from two uniform integers in [1, 3] and [1, 3].
        std::function<std::pair<int, int>(int, int)> grades;
        Formula formula;
        Compare compare;
    };
    const Compare exact = [](const RootElem& a, const RootElem& b) { return a == b; };
    const Compare mod_constants = equal_mod_grade0_constants;
    const Compare mod_center = equal_mod_constants;

    auto X = [](int g, const FnElem& f) { return root_monomial(g, f); };
    auto U = [](const FnElem& f, long p) { return shift_U(f, p); };

    const std::vector<Case> cases = {
        {"item 1, n, m > 0: X[n+m](f . U^n g - g . U^m f)", false,
         [](int i, int j) { return std::pair{i, j}; },
         [&](int n, const FnElem& f, int m, const FnElem& g) { return X(n + m, f * U(g, n) - g * U(f, m)); },
         exact},
        {"item 1, n, m < 0: -X[n+m](f . U^-n g - g . U^-m f)", false,
         [](int i, int j) { return std::pair{-i, -j}; },
         [&](int n, const FnElem& f, int m, const FnElem& g) { return -X(n + m, f * U(g, -n) - g * U(f, -m)); },
         exact},
        {"item 2, [X0 f, X[n] g] = X[n](K_n f . g)", false,
         [](int i, int) { return std::pair{0, i}; },
         [&](int, const FnElem& f, int m, const FnElem& g) { return X(m, cartan_Kn(f, m) * g); },
         exact},
        {"item 2, [X0 f, X[-n] g] = -X[-n](K_n f . g)", false,
         [](int i, int) { return std::pair{0, -i}; },
         [&](int, const FnElem& f, int m, const FnElem& g) { return -X(m, cartan_Kn(f, -m) * g); },
         exact},
        {"item 4, [X0 f, X0 g] = 0", false,
         [](int, int) { return std::pair{0, 0}; },
         [&](int, const FnElem& f, int, const FnElem&) { return RootElem(f.space()); },
         exact},
        {"item 3, n + m = 0, n > 0: X0(S_n(f g)) + n mean(f g) c, modulo X0(constants)", false,
         [](int i, int) { return std::pair{i, -i}; },
         [&](int n, const FnElem& f, int, const FnElem& g) {
             RootElem out = X(0, geometric_sum_U(f * g, n));
             out.add_central(Scalar(n) * mean(f * g));
             return out;
         },
         mod_constants},
        {"item 3, n + m = 0, n > 0: X0(S_n(f g)) + n mean(f g) c, exact", true,
         [](int i, int) { return std::pair{i, -i}; },
         [&](int n, const FnElem& f, int, const FnElem& g) {
             RootElem out = X(0, geometric_sum_U(f * g, n));
             out.add_central(Scalar(n) * mean(f * g));
             return out;
         },
         exact},
        {"item 3, n + m = 0, n < 0: X0(S_m(f g)) + n mean(f g) c, modulo X0(constants)", true,
         [](int i, int) { return std::pair{-i, i}; },
         [&](int n, const FnElem& f, int m, const FnElem& g) {
             RootElem out = X(0, geometric_sum_U(f * g, m));
             out.add_central(Scalar(n) * mean(f * g));
             return out;
         },
         mod_constants},
        {"(+,-) display, n > m > 0: X[n-m](f . U^(n-m) g - U^-m(f g))", true,
         [](int i, int j) { return std::pair{i + j, -j}; },
         [&](int n, const FnElem& f, int mm, const FnElem& g) {
             const int m = -mm;
             return X(n - m, f * U(g, n - m) - U(f * g, -m));
         },
         exact},
        {"(+,-) display, n = m: X0((1 - U^-m)/(1 - U^-1)(f g)), modulo center and X0(constants)", true,
         [](int i, int) { return std::pair{i, -i}; },
         [&](int, const FnElem& f, int mm, const FnElem& g) { return X(0, geometric_sum_U(f * g, -mm)); },
         mod_center},
        {"(+,-) display, 0 < n < m: X[n-m](U^-n f . (g . U^m f - U^-n g))", true,
         [](int i, int j) { return std::pair{i, -(i + j)}; },
         [&](int n, const FnElem& f, int mm, const FnElem& g) {
             const int m = -mm;
             return X(n - m, U(f, -n) * (g * U(f, m) - U(g, -n)));
         },
         exact},
        {"item 3, m < 0, n + m > 0: X[n+m](U^m g . (f . U^n g - U^m f))", true,
         [](int i, int j) { return std::pair{i + j, -j}; },
         [&](int n, const FnElem& f, int m, const FnElem& g) {
             return X(n + m, U(g, m) * (f * U(g, n) - U(f, m)));
         },
         exact},
        {"item 3, m < 0, n + m < 0: X[n+m](U^-n f . (g . U^-m f - U^-n g))", true,
         [](int i, int j) { return std::pair{i, -(i + j)}; },
         [&](int n, const FnElem& f, int m, const FnElem& g) {
             return X(n + m, U(f, -n) * (g * U(f, -m) - U(g, -n)));
         },
         exact},
    };

    CheckItem& closed = report.add("closed-form bracket agrees with transport on random elements");
    for (const auto& c : cases)
        report.add(c.name, c.informational);

    for (std::size_t s = 0; s < samples; ++s) {
        const RootElem a = gen.root_element();
        const RootElem b = gen.root_element();
        const RootElem got = bracket_root(a, b);
        const RootElem want = bracket_root_transport(a, b);
        closed.record(got == want, mismatch_text("a=" + to_string(a) + ", b=" + to_string(b), to_string(got),
                                                 to_string(want)));
        for (std::size_t i = 0; i < cases.size(); ++i) {
            const Case& c = cases[i];
            const auto [n, m] = c.grades(gen.rng().uniform(1, 3), gen.rng().uniform(1, 3));
            const FnElem phi = gen.function();
            const FnElem psi = gen.function();
            const RootElem truth = transport_monomials(n, phi, m, psi);
            const RootElem printed = c.formula(n, phi, m, psi);
            report.items[i + 1].record(c.compare(printed, truth),
                                       mismatch_text(pair_text(n, phi, m, psi), to_string(printed),
                                                     to_string(truth)));
        }
    }
    return report;
}

} // namespace liedyn
