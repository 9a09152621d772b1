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

#include "liedyn/kacmoody.hpp"

#include "liedyn/error.hpp"
#include "liedyn/linalg.hpp"

#include <sstream>

namespace liedyn {

std::string CartanMatrixData::to_string() const
{
    std::ostringstream out;
    for (const auto& row : entries) {
        for (std::size_t j = 0; j < row.size(); ++j)
            out << (j ? " " : "") << row[j];
        out << "\n";
    }
    return out.str();
}

CartanMatrixData cartan_matrix(const SpaceSpec& space)
{
    if (!space.is_finite())
        throw DomainError("Cartan matrix needs a finite backend, got " + space.to_string());
    const int n = space.size();
    CartanMatrixData m;
    m.size = n;
    m.entries.assign(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        const FnElem k = cartan_K(FnElem::delta(space, i));
        for (int j = 0; j < n; ++j) {
            const auto r = k.value(j).as_rational();
            if (!r || r->get_den() != 1)
                throw DomainError("non-integral Cartan entry");
            m.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = r->get_num().get_si();
        }
    }
    return m;
}

CartanMatrixData affine_cycle_matrix(int n)
{
    if (n < 1)
        throw DomainError("affine cycle needs at least one node");
    CartanMatrixData m;
    m.size = n;
    m.entries.assign(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        auto& row = m.entries[static_cast<std::size_t>(i)];
        row[static_cast<std::size_t>(i)] += 2;
        row[static_cast<std::size_t>((i + 1) % n)] -= 1;
        row[static_cast<std::size_t>((i + n - 1) % n)] -= 1;
    }
    return m;
}

bool is_affine_cycle_type(const CartanMatrixData& m)
{
    const std::size_t n = static_cast<std::size_t>(m.size);
    if (m.entries.size() != n || n < 2)
        return false;
    for (const auto& row : m.entries)
        if (row.size() != n)
            return false;
    if (n == 2)
        return m == affine_cycle_matrix(2);
    // Symmetric, 2 on the diagonal, and the off-diagonal -1 entries form a
    // connected 2-regular graph, i.e. one cycle through all nodes.
    for (std::size_t i = 0; i < n; ++i) {
        if (m.entries[i][i] != 2)
            return false;
        int degree = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            if (m.entries[i][j] != m.entries[j][i])
                return false;
            if (m.entries[i][j] == -1)
                ++degree;
            else if (m.entries[i][j] != 0)
                return false;
        }
        if (degree != 2)
            return false;
    }
    std::vector<bool> seen(n);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < n; ++j)
            if (m.entries[i][j] == -1 && !seen[j]) {
                seen[j] = true;
                ++reached;
                stack.push_back(j);
            }
    }
    return reached == n;
}

std::size_t corank(const CartanMatrixData& m)
{
    Matrix a;
    for (const auto& row : m.entries) {
        std::vector<Scalar> r;
        for (long v : row)
            r.emplace_back(v);
        a.push_back(std::move(r));
    }
    return static_cast<std::size_t>(m.size) - exact_rank(std::move(a));
}

std::string affine_type_name(int n)
{
    return "A^(1)_" + std::to_string(n - 1);
}

LieElem include_level(const LieElem& a)
{
    if (a.space().kind() != SpaceKind::PAdicLevel)
        throw DomainError("level inclusion needs a p-adic level, got " + a.space().to_string());
    LieElem out(a.space().next_level());
    for (const auto& [n, f] : a.terms())
        out.add_term(n, project_to_level(f));
    out.add_central(a.central());
    return out;
}

ChevalleyData chevalley_generators(const SpaceSpec& space)
{
    const CartanMatrixData a = cartan_matrix(space);
    const int n = a.size;
    ChevalleyData data;
    for (int i = 0; i < n; ++i) {
        ChevalleyTriple t{RootElem::monomial(1, FnElem::delta(space, i)),
                          RootElem::monomial(-1, FnElem::delta(space, i)), RootElem(space)};
        t.h = bracket_root(t.e, t.f);
        data.triples.push_back(std::move(t));
    }
    data.relation_matrix.assign(static_cast<std::size_t>(n), std::vector<std::optional<long>>(static_cast<std::size_t>(n)));
    data.f_relations_hold = true;
    data.off_diagonal_vanish = true;
    for (std::size_t i = 0; i < data.triples.size(); ++i) {
        for (std::size_t j = 0; j < data.triples.size(); ++j) {
            const auto& tj = data.triples[j];
            const RootElem he = bracket_root(data.triples[i].h, tj.e);
            if (he.is_zero()) {
                data.relation_matrix[i][j] = 0;
            } else if (he.central().is_zero() && he.terms().size() == 1 && he.terms().begin()->first == 1) {
                const FnElem& g = he.terms().begin()->second;
                const Scalar s = g.value(static_cast<int>(j));
                const auto r = s.as_rational();
                if (r && r->get_den() == 1 && g == FnElem::delta(space, static_cast<int>(j)) * s)
                    data.relation_matrix[i][j] = r->get_num().get_si();
            }
            const RootElem hf = bracket_root(data.triples[i].h, tj.f);
            if (!(hf == tj.f * Scalar(-a.entries[i][j])))
                data.f_relations_hold = false;
            if (i != j) {
                const RootElem ef = bracket_root(data.triples[i].e, tj.f);
                if (!ef.component(0).is_zero() || !ef.central().is_zero())
                    data.off_diagonal_vanish = false;
            }
        }
    }
    return data;
}

} // namespace liedyn
