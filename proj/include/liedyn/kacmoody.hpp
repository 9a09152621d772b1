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

// Cartan matrices of K on the finite levels, affine cycle recognition,
// Chevalley generators of the local part and the level inclusions of the
// p-adic odometer.

#include "liedyn/rootform.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liedyn {

struct CartanMatrixData {
    int size = 0;
    std::vector<std::vector<long>> entries;

    std::string to_string() const;
    friend bool operator==(const CartanMatrixData&, const CartanMatrixData&) = default;
};

/// a_ij = (K delta_i)(j): 2 on the diagonal and -1 at i +- 1 mod N
/// (accumulating to -2 when N = 2). Finite backends only.
CartanMatrixData cartan_matrix(const SpaceSpec& space);

/// Generalized Cartan matrix of the affine cycle on n nodes.
CartanMatrixData affine_cycle_matrix(int n);

/// True iff `m` is the affine cycle matrix up to a simultaneous
/// relabeling of rows and columns.
bool is_affine_cycle_type(const CartanMatrixData& m);

std::size_t corank(const CartanMatrixData& m);

/// Conventional label of the affine cycle on n nodes: `A^(1)_{n-1}`.
std::string affine_type_name(int n);

/// Lifts an element at level Z/p^n to Z/p^(n+1), grade by grade; the
/// central coefficient is unchanged.
LieElem include_level(const LieElem& a);

struct ChevalleyTriple {
    RootElem e; // X_1(delta_i)
    RootElem f; // X_-1(delta_i)
    RootElem h; // [e_i, f_i]
};

struct ChevalleyData {
    std::vector<ChevalleyTriple> triples;
    /// [h_i, e_j] = a_ij e_j read back from the bracket; nullopt where the
    /// result is not a multiple of e_j.
    std::vector<std::vector<std::optional<long>>> relation_matrix;
    /// [h_i, f_j] = -a_ij f_j for all i, j.
    bool f_relations_hold = false;
    /// [e_i, f_j] has no grade-0 or central part for i != j.
    bool off_diagonal_vanish = false;
};

ChevalleyData chevalley_generators(const SpaceSpec& space);

} // namespace liedyn
