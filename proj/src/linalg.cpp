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

#include "liedyn/linalg.hpp"

#include <utility>

namespace liedyn {

namespace {

bool all_constant(const Matrix& m)
{
    for (const auto& row : m)
        for (const auto& x : row)
            if (!x.is_constant())
                return false;
    return true;
}

// Gauss-Jordan over the field Q(zeta_N); entries stay reduced.
std::size_t field_rank(Matrix m)
{
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m.front().size();
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col].is_zero())
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[rank], m[pivot]);
        const Scalar inv = m[rank][col].inverse();
        for (std::size_t c = col; c < cols; ++c)
            if (!m[rank][c].is_zero())
                m[rank][c] *= inv;
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][col].is_zero())
                continue;
            const Scalar factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c)
                if (!m[rank][c].is_zero())
                    m[r][c] -= factor * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

} // namespace

std::size_t exact_rank(Matrix m)
{
    if (all_constant(m))
        return field_rank(std::move(m));
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m.front().size();
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col].is_zero())
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[rank], m[pivot]);
        const Scalar p = m[rank][col];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][col].is_zero())
                continue;
            const Scalar factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c) {
                Scalar lhs = m[r][c].is_zero() ? Scalar() : m[r][c] * p;
                if (!m[rank][c].is_zero())
                    lhs -= m[rank][c] * factor;
                m[r][c] = std::move(lhs);
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace liedyn
