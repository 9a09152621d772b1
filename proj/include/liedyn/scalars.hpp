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

// Exact scalar rings: rationals, cyclotomic fields Q(zeta_N) and Laurent
// polynomials over Q(zeta_N) in formal unit-modulus variables q1..qd.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace liedyn {

using Rational = mpq_class;
using Integer = mpz_class;

/// Coefficients of the cyclotomic polynomial Phi_n, lowest degree first.
/// Computed from x^n - 1 = prod_{d | n} Phi_d and cached; the cache is safe
/// for concurrent use.
const std::vector<Integer>& cyclotomic_polynomial(int n);

/// Euler totient, i.e. deg Phi_n.
int euler_phi(int n);

/// Element of Q(zeta_N) stored as a polynomial of degree < phi(N) in
/// zeta_N, always reduced modulo Phi_N. The representation is canonical,
/// so equality is coefficient-wise.
class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(Rational(0)) {}
    Cyclotomic(long value) : Cyclotomic(Rational(value)) {} // NOLINT: implicit by design of numeric literals
    explicit Cyclotomic(const Rational& value, int order = 1);

    /// zeta_order^power; the exponent is taken modulo order.
    static Cyclotomic root_of_unity(int order, long power);

    /// Builds an element from arbitrary-length coefficients (reduced here).
    static Cyclotomic from_coeffs(int order, std::vector<Rational> coeffs);

    int order() const { return order_; }
    std::span<const Rational> coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Rational value; only meaningful when is_rational().
    const Rational& rational_value() const { return coeffs_.front(); }

    /// Image under zeta_N -> zeta_M^(M/N). Requires N | M.
    Cyclotomic embed(int target_order) const;

    /// Complex conjugate: zeta_N -> zeta_N^(N-1).
    Cyclotomic conj() const;

    Cyclotomic pow(long e) const;

    /// Galois automorphism zeta_N -> zeta_N^j, gcd(j, N) = 1.
    Cyclotomic galois(int j) const;

    /// Multiplicative inverse via the product of the other Galois
    /// conjugates divided by the (rational) field norm.
    Cyclotomic inverse() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& other);
    Cyclotomic& operator-=(const Cyclotomic& other);
    Cyclotomic& operator*=(const Cyclotomic& other);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    /// Polynomial in `z{N}` with descending powers, e.g. `z4^1 + 1/2`.
    std::string to_string() const;

private:
    int order_ = 1;
    std::vector<Rational> coeffs_; // length phi(order_)
};

/// Common order both operands can be embedded into; throws RingMismatch
/// when neither order divides the other (rational values embed anywhere).
int common_order(const Cyclotomic& a, const Cyclotomic& b);

Cyclotomic embed_cyclotomic(const Cyclotomic& a, int target_order);

/// Laurent polynomial in q1..qd with Q(zeta_N) coefficients. With d = 0 this
/// is just a cyclotomic number (or a rational when N = 1), which is how the
/// finite backends use it. No zero coefficient is ever stored.
class Scalar {
public:
    using Exponent = std::vector<int>;

    Scalar() = default;
    Scalar(long value); // NOLINT
    Scalar(const Rational& value); // NOLINT
    Scalar(const Cyclotomic& value); // NOLINT

    static Scalar root_of_unity(int order, long power);
    /// q_{var}^{power} in a ring with `nvars` formal variables.
    static Scalar q_power(int nvars, int var, int power);
    /// coefficient * q^exponent.
    static Scalar monomial(const Cyclotomic& coeff, Exponent exponent);

    int order() const { return order_; }
    int nvars() const { return nvars_; }
    const std::map<Exponent, Cyclotomic>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// True when no q-variable occurs.
    bool is_constant() const;
    bool is_rational() const;
    /// Coefficient of q^0.
    Cyclotomic constant_term() const;
    std::optional<Rational> as_rational() const;

    Scalar embed(int target_order) const;
    /// Conjugation: zeta -> zeta^-1, q_i -> q_i^-1.
    Scalar conj() const;
    Scalar pow(long e) const; // negative exponents only for monomials
    /// Inverse of a constant (q-free) nonzero scalar.
    Scalar inverse() const;

    /// Exact quotient by (1 - q^v) when it exists in the Laurent ring.
    std::optional<Scalar> divide_by_one_minus(const Exponent& v) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Laurent polynomial in `q` (one variable) or `q1..qd`, e.g. `q^-2`.
    std::string to_string() const;

private:
    void promote_to(int order, int nvars);
    static void unify(Scalar& a, Scalar& b);

    int order_ = 1;
    int nvars_ = 0;
    std::map<Exponent, Cyclotomic> terms_;
};

bool is_zero(const Scalar& a);

/// Renders a scalar used as the coefficient of a basis symbol: bare for
/// rationals (sign omitted when `strip_sign`), parenthesized otherwise.
std::string coefficient_string(const Scalar& s, bool strip_sign);

/// `coeff*atom` with a leading `-` for negative rationals.
std::string signed_term(const Scalar& coeff, const std::string& atom);

/// Joins signed term strings into `a + b - c` form.
std::string join_terms(const std::vector<std::string>& terms);

std::string rational_string(const Rational& r);

} // namespace liedyn
