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

// Root-generator presentation X_n(f): the isomorphism tau from the
// crossed-product coordinates, the bracket table and the cocycle in
// generator coordinates.
//
// Coordinates: X_n(f) = f (x) U^n for n > 0, X_-n(f) = (U^-n f) (x) U^-n
// for n > 0, and X_0(f) = ((I - U^-1) f + mean(f)) (x) U^0, so that
// tau(1 (x) U^0) = X_0(1). The central generator c is its own coordinate.

#include "liedyn/crossed.hpp"
#include "liedyn/report.hpp"

#include <cstdint>

namespace liedyn {

/// Grades ascending as `X[n](f)`, central term last.
std::string to_string(const RootElem& a);

/// Crossed-product -> root coordinates. Throws DomainError when a grade-0
/// term has no preimage under I - U^-1 (torus coefficients not divisible
/// by 1 - q^-k).
RootElem tau(const LieElem& a);

/// Root -> crossed-product coordinates; total.
LieElem tau_inverse(const RootElem& a);

/// Bracket of the root presentation: closed forms for same-sign grades,
/// grade 0 against +-n, and n + m = 0; transport through tau for mixed
/// signs with n + m != 0.
RootElem bracket_root(const RootElem& a, const RootElem& b);

/// tau([tau^-1 a, tau^-1 b]) evaluated for every monomial pair.
RootElem bracket_root_transport(const RootElem& a, const RootElem& b);

/// alpha(X_n(f), X_m(g)) = n * mean(f g) when n + m = 0.
Scalar cocycle_root(const RootElem& a, const RootElem& b);

/// Quotient view c -> X_0(1).
RootElem collapse_center(const RootElem& a);

/// Samples the local relations
///   [X0 f, X0 g] = 0, [X0 f, X+-1 g] = +-X+-1(K f . g), [X1 f, X-1 g] = X0(f g)
/// in the root presentation, and the matching grade -1/0/1 brackets of the
/// crossed product under tau^-1. Deterministic in `seed`.
Report local_algebra_check(const SpaceSpec& space, std::size_t samples, std::uint64_t seed);

/// Compares every printed bracket formula of the monomial table against the
/// tau-transported bracket. Items for the mixed-sign, n + m != 0 lines are
/// informational.
Report bracket_table_audit(const SpaceSpec& space, std::size_t samples, std::uint64_t seed);

} // namespace liedyn
