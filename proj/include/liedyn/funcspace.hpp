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

// Backends for the commutative algebra C(X) together with the shift U,
// the invariant mean and the Cartan operator K = 2 - U - U^-1.

#include "liedyn/scalars.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace liedyn {

enum class SpaceKind { Cyclic, PAdicLevel, Torus };

/// The dynamical system (X, T): a cyclic shift on Z/N, a finite level
/// Z/p^n of the p-adic odometer, or a rotation of the d-torus by formal
/// angles q1..qd.
class SpaceSpec {
public:
    static SpaceSpec cyclic(int n);
    static SpaceSpec padic(int p, int level);
    static SpaceSpec torus(int dim);
    /// `cyclic:N`, `padic:p:n` or `torus:d`.
    static SpaceSpec parse(std::string_view text);

    SpaceKind kind() const { return kind_; }
    bool is_finite() const { return kind_ != SpaceKind::Torus; }
    /// Number of points (N or p^n); finite backends only.
    int size() const;
    int prime() const { return a_; }
    int level() const { return b_; }
    int dim() const { return kind_ == SpaceKind::Torus ? a_ : 0; }

    /// Scalar ring: Q(zeta_N) for finite backends, Q[q1^+-1..qd^+-1] for tori.
    int scalar_order() const { return is_finite() ? size() : 1; }
    int scalar_vars() const { return dim(); }

    /// Next p-adic level; PAdicLevel only.
    SpaceSpec next_level() const;

    std::string to_string() const;
    friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;

private:
    SpaceSpec(SpaceKind kind, int a, int b) : kind_(kind), a_(a), b_(b) {}

    SpaceKind kind_;
    int a_; // N, p or d
    int b_; // level for PAdicLevel
};

void require_same_space(const SpaceSpec& a, const SpaceSpec& b);

/// Frequency vector of a torus character z1^k1 ... zd^kd.
using Freq = std::vector<int>;

/// Element of C(X). Finite backends store values on Z/N (the delta basis);
/// tori store finitely many Fourier coefficients.
class FnElem {
public:
    using Values = std::vector<Scalar>;
    using Fourier = std::map<Freq, Scalar>;

    explicit FnElem(SpaceSpec space);

    static FnElem zero(const SpaceSpec& space) { return FnElem(space); }
    static FnElem constant(const SpaceSpec& space, const Scalar& value);
    static FnElem one(const SpaceSpec& space) { return constant(space, Scalar(1)); }
    /// Indicator of the point k; finite backends.
    static FnElem delta(const SpaceSpec& space, int k);
    /// Character x -> zeta_N^(k x); finite backends.
    static FnElem character(const SpaceSpec& space, int k);
    /// coeff * z^freq; tori.
    static FnElem torus_monomial(const SpaceSpec& space, const Freq& freq, const Scalar& coeff = Scalar(1));
    static FnElem from_values(const SpaceSpec& space, Values values);

    const SpaceSpec& space() const { return space_; }
    bool is_zero() const;

    std::span<const Scalar> values() const;
    const Fourier& fourier() const;
    /// Value at point x (finite) or Fourier coefficient at `freq` (torus).
    const Scalar& value(int x) const;
    Scalar coefficient(const Freq& freq) const;

    FnElem operator-() const;
    FnElem& operator+=(const FnElem& other);
    FnElem& operator-=(const FnElem& other);
    FnElem& operator*=(const Scalar& s);
    friend FnElem operator+(FnElem a, const FnElem& b) { return a += b; }
    friend FnElem operator-(FnElem a, const FnElem& b) { return a -= b; }
    friend FnElem operator*(FnElem a, const Scalar& s) { return a *= s; }
    friend FnElem operator*(const Scalar& s, FnElem a) { return a *= s; }
    friend bool operator==(const FnElem& a, const FnElem& b);

    /// Canonical text: `c*delta(k)` terms by ascending k, or `c*z^k` /
    /// `c*z1^a*z2^b` terms with lexicographic frequencies.
    std::string to_string() const;

private:
    SpaceSpec space_;
    std::variant<Values, Fourier> data_;
};

/// `z^k`, `z1^a*z2^b` or `one`.
std::string torus_atom(const Freq& k);

/// Pointwise product (finite) or convolution of Fourier coefficients (torus).
FnElem fn_mul(const FnElem& f, const FnElem& g);
FnElem operator*(const FnElem& f, const FnElem& g);

/// U^power f with (Uf)(x) = f(x + 1); on tori U z^k = q^k z^k.
FnElem shift_U(const FnElem& f, long power);

/// Integral against the invariant probability measure.
Scalar mean(const FnElem& f);

/// Complex conjugate of a function.
FnElem conjugate(const FnElem& f);

/// K f = 2f - Uf - U^-1 f.
FnElem cartan_K(const FnElem& f);

/// K_n f = f - U^-1 f + U^(n-1) f - U^n f = (I - U^-1)(I - U^n) f, n != 0.
FnElem cartan_Kn(const FnElem& f, long n);

/// (I + U^-1 + ... + U^-(m-1)) f, the polynomial meaning of
/// (1 - U^-m) / (1 - U^-1); m >= 1.
FnElem geometric_sum_U(const FnElem& f, long m);

/// Pull back along Z/p^(n+1) -> Z/p^n. Scalars are embedded into the
/// cyclotomic field of the finer level.
FnElem project_to_level(const FnElem& f);

/// Mean-zero solution g of (I - U^-1) g = f, or nullopt when f is not in
/// the image (nonzero mean, or a torus coefficient not divisible by
/// 1 - q^-k).
std::optional<FnElem> solve_one_minus_Uinv(const FnElem& f);

/// Cartan operator of a local algebra. The default is induced by T; finite
/// backends also accept an arbitrary matrix acting on values, which is only
/// required to be linear.
class CartanOperator {
public:
    explicit CartanOperator(SpaceSpec space);
    /// matrix[i][j] is the coefficient of f(j) in (K f)(i).
    static CartanOperator custom(const SpaceSpec& space, std::vector<std::vector<Scalar>> matrix);

    const SpaceSpec& space() const { return space_; }
    bool is_default() const { return !matrix_.has_value(); }
    FnElem apply(const FnElem& f) const;

private:
    SpaceSpec space_;
    std::optional<std::vector<std::vector<Scalar>>> matrix_;
};

/// Element X_-1(a) + X_0(h) + X_1(b) of the local algebra H_-1 + H_0 + H_1
/// attached to a pair (H, K).
struct LocalElem {
    FnElem minus;
    FnElem zero;
    FnElem plus;

    static LocalElem of(int grade, const FnElem& f);
    friend bool operator==(const LocalElem&, const LocalElem&) = default;
};

/// Bracket of the local algebra:
///   [X0(f), X0(g)] = 0, [X0(f), X+-1(g)] = +-X+-1(Kf g), [X1(f), X-1(g)] = X0(f g).
/// Brackets that would leave the local part ([X1, X1], [X-1, X-1]) throw.
LocalElem local_bracket(const CartanOperator& k, const LocalElem& a, const LocalElem& b);

} // namespace liedyn
