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

// Discrete-spectrum presentation: basis symbols Y_{chi,n} = chi (x) U^n
// indexed by characters chi of G and grades n.

#include "liedyn/crossed.hpp"

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace liedyn {

/// Character index: {k} with k in Z/N for finite backends, a frequency
/// vector for tori.
using CharIndex = std::vector<int>;

class CharSymbol {
public:
    /// Normalizes cyclic indices into [0, N).
    CharSymbol(SpaceSpec space, CharIndex index);

    const SpaceSpec& space() const { return space_; }
    const CharIndex& index() const { return index_; }

    /// chi(lambda): zeta_N^k, or q^k on a torus.
    Scalar eigenvalue() const;
    /// chi(lambda)^n.
    Scalar eigenvalue_power(long n) const;
    /// chi as an element of C(X).
    FnElem function() const;

    bool is_trivial() const;
    CharSymbol operator*(const CharSymbol& other) const;
    CharSymbol inverse() const;

    /// `k` (finite, or d = 1 torus) or `(k1,k2,...)`.
    std::string index_string() const;

    friend bool operator==(const CharSymbol&, const CharSymbol&) = default;

private:
    SpaceSpec space_;
    CharIndex index_;
};

/// Finite combination of Y_{chi,n} plus a central coefficient.
class CharBasisElem {
public:
    /// Ordered by grade, then character index.
    using Key = std::pair<int, CharIndex>;

    explicit CharBasisElem(SpaceSpec space) : space_(space) {}
    static CharBasisElem symbol(const CharSymbol& chi, int grade, const Scalar& coeff = Scalar(1));
    static CharBasisElem central_element(const SpaceSpec& space, const Scalar& s);

    const SpaceSpec& space() const { return space_; }
    const std::map<Key, Scalar>& terms() const { return terms_; }
    const Scalar& central() const { return central_; }
    bool is_zero() const { return terms_.empty() && central_.is_zero(); }

    void add_term(const CharSymbol& chi, int grade, const Scalar& coeff);
    void add_central(const Scalar& s) { central_ += s; }

    CharBasisElem& operator+=(const CharBasisElem& other);
    CharBasisElem& operator-=(const CharBasisElem& other);
    CharBasisElem& operator*=(const Scalar& s);
    CharBasisElem operator-() const;
    friend CharBasisElem operator+(CharBasisElem a, const CharBasisElem& b) { return a += b; }
    friend CharBasisElem operator-(CharBasisElem a, const CharBasisElem& b) { return a -= b; }
    friend CharBasisElem operator*(const Scalar& s, CharBasisElem a) { return a *= s; }
    friend bool operator==(const CharBasisElem&, const CharBasisElem&);

private:
    SpaceSpec space_;
    std::map<Key, Scalar> terms_;
    Scalar central_;
};

/// `coeff*Y[k,n]` terms by grade then index, central term last.
std::string to_string(const CharBasisElem& a);

/// Structure constants of the character basis:
///   [Y_{chi,n}, Y_{chi',n'}] = (chi'(lambda)^n - chi(lambda)^n') Y_{chi chi', n+n'}
///                              + [n + n' = 0][chi chi' = 1] n chi'(lambda)^n c.
/// The central coefficient is alpha(chi (x) U^n, chi' (x) U^n'); it reduces
/// to n c only when chi(lambda)^n = 1.
CharBasisElem bracket_Y(const CharBasisElem& a, const CharBasisElem& b);

/// Y_{chi,n} -> chi (x) U^n, central -> central.
LieElem to_crossed(const CharBasisElem& a);

/// Support of the Z x G^ grading as (chi, n) pairs; c carries no grading.
std::set<std::pair<CharIndex, int>> grading_of(const CharBasisElem& a);

/// All characters of a finite backend, or the frequency box
/// [-bound, bound]^d of a torus.
std::vector<CharSymbol> enumerate_characters(const SpaceSpec& space, int bound);

} // namespace liedyn
