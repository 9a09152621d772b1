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

#include "liedyn/crossed.hpp"

#include "liedyn/error.hpp"
#include "liedyn/linalg.hpp"

namespace liedyn {

namespace {

void require_no_central(const LieElem& a, const char* op)
{
    if (!a.central().is_zero())
        throw DomainError(std::string(op) + ": operand has a nonzero central part");
}

} // namespace

std::string to_string(const LieElem& a)
{
    std::vector<std::string> terms;
    for (const auto& [n, f] : a.terms())
        terms.push_back("[" + f.to_string() + "]U^" + std::to_string(n));
    if (!a.central().is_zero())
        terms.push_back(signed_term(a.central(), "c"));
    return join_terms(terms);
}

LieElem assoc_mul(const LieElem& a, const LieElem& b)
{
    require_same_space(a.space(), b.space());
    require_no_central(a, "assoc_mul");
    require_no_central(b, "assoc_mul");
    LieElem out(a.space());
    for (const auto& [n, phi] : a.terms())
        for (const auto& [m, psi] : b.terms())
            out.add_term(n + m, phi * shift_U(psi, n));
    return out;
}

LieElem involution(const LieElem& a)
{
    require_no_central(a, "involution");
    LieElem out(a.space());
    for (const auto& [n, phi] : a.terms())
        out.add_term(-n, shift_U(conjugate(phi), -n));
    return out;
}

LieElem bracket_plain(const LieElem& a, const LieElem& b)
{
    require_same_space(a.space(), b.space());
    require_no_central(a, "bracket_plain");
    require_no_central(b, "bracket_plain");
    LieElem out(a.space());
    for (const auto& [n, phi] : a.terms())
        for (const auto& [m, psi] : b.terms())
            out.add_term(n + m, phi * shift_U(psi, n) - psi * shift_U(phi, m));
    return out;
}

Scalar cocycle_alpha(const LieElem& a, const LieElem& b)
{
    require_same_space(a.space(), b.space());
    Scalar out;
    for (const auto& [n, phi] : a.terms()) {
        if (n == 0)
            continue;
        auto it = b.terms().find(-n);
        if (it == b.terms().end())
            continue;
        out += Scalar(n) * mean(phi * shift_U(it->second, n));
    }
    return out;
}

LieElem bracket_extended(const LieElem& a, const LieElem& b)
{
    require_same_space(a.space(), b.space());
    LieElem out(a.space());
    for (const auto& [n, phi] : a.terms())
        for (const auto& [m, psi] : b.terms()) {
            out.add_term(n + m, phi * shift_U(psi, n) - psi * shift_U(phi, m));
            if (n + m == 0 && n != 0)
                out.add_central(Scalar(n) * mean(phi * shift_U(psi, n)));
        }
    return out;
}

std::pair<LieElem, Scalar> decompose_center(const LieElem& a)
{
    require_no_central(a, "decompose_center");
    const Scalar s = mean(a.component(0));
    LieElem a0 = a;
    a0.add_term(0, FnElem::constant(a.space(), -s));
    return {a0, s};
}

LieElem collapse_center(const LieElem& a)
{
    LieElem out = a;
    const Scalar c = a.central();
    out.add_central(-c);
    out.add_term(0, FnElem::constant(a.space(), c));
    return out;
}

CoboundaryCertificate coboundary_system(const SpaceSpec& space, int window)
{
    if (!space.is_finite())
        throw DomainError("coboundary check needs a finite backend, got " + space.to_string());
    if (window < 0)
        throw DomainError("grade window must be non-negative");
    const int n = space.size();
    const int span = 2 * window;
    const std::size_t unknowns = static_cast<std::size_t>((2 * span + 1) * n);

    std::vector<LieElem> basis;
    for (int g = -window; g <= window; ++g)
        for (int k = 0; k < n; ++k)
            basis.push_back(LieElem::monomial(g, FnElem::delta(space, k)));

    Matrix lhs;
    Matrix augmented;
    for (const auto& x : basis) {
        for (const auto& y : basis) {
            const LieElem br = bracket_plain(x, y);
            std::vector<Scalar> row(unknowns);
            for (const auto& [g, f] : br.terms()) {
                const auto values = f.values();
                for (int k = 0; k < n; ++k)
                    row[static_cast<std::size_t>((g + span) * n + k)] = values[static_cast<std::size_t>(k)];
            }
            lhs.push_back(row);
            row.push_back(cocycle_alpha(x, y));
            augmented.push_back(std::move(row));
        }
    }
    CoboundaryCertificate cert;
    cert.equations = lhs.size();
    cert.unknowns = unknowns;
    cert.rank_lhs = exact_rank(std::move(lhs));
    cert.rank_augmented = exact_rank(std::move(augmented));
    return cert;
}

bool verify_not_coboundary(const SpaceSpec& space, int window)
{
    return coboundary_system(space, window).infeasible();
}

} // namespace liedyn
