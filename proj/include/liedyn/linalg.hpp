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

// Exact rank of matrices over the scalar rings. Constant entries are
// eliminated over the field Q(zeta_N); Laurent entries fall back to
// fraction-free elimination (cross-multiplication only).

#include "liedyn/scalars.hpp"

#include <vector>

namespace liedyn {

using Matrix = std::vector<std::vector<Scalar>>;

/// Rank of a matrix whose entries lie in an integral domain
/// (Q(zeta_N), or Laurent polynomials over it).
std::size_t exact_rank(Matrix m);

} // namespace liedyn
