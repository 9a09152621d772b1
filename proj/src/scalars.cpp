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

#include "liedyn/scalars.hpp"

#include "liedyn/error.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace liedyn {

namespace {

// Phi_n cache. Readers take a shared lock; a racing writer recomputes the
// same polynomial, so double insertion is harmless.
struct CyclotomicCache {
    std::shared_mutex mutex;
    std::unordered_map<int, std::shared_ptr<const std::vector<Integer>>> polys;
};

CyclotomicCache& cache()
{
    static CyclotomicCache c;
    return c;
}

std::vector<Integer> exact_divide(std::vector<Integer> num, const std::vector<Integer>& den)
{
    // den is monic; num has integer coefficients, lowest degree first.
    const std::size_t dn = den.size() - 1;
    std::vector<Integer> quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        const Integer c = num[i];
        if (c == 0)
            continue;
        quot[i - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j)
            num[i - dn + j] -= c * den[j];
    }
    return quot;
}

std::vector<Integer> compute_cyclotomic(int n)
{
    std::vector<Integer> poly(static_cast<std::size_t>(n) + 1, 0);
    poly[0] = -1;
    poly[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0)
            poly = exact_divide(std::move(poly), cyclotomic_polynomial(d));
    return poly;
}

void reduce_mod_phi(std::vector<Rational>& p, int order)
{
    const auto& phi = cyclotomic_polynomial(order);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = p.size(); i-- > deg;) {
        if (sgn(p[i]) == 0)
            continue;
        const Rational c = p[i];
        for (std::size_t j = 0; j <= deg; ++j)
            if (phi[j] != 0)
                p[i - deg + j] -= c * phi[j];
    }
    p.resize(deg, Rational(0));
}

long positive_mod(long a, long m)
{
    const long r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

const std::vector<Integer>& cyclotomic_polynomial(int n)
{
    if (n < 1)
        throw DomainError("cyclotomic polynomial order must be positive, got " + std::to_string(n));
    auto& c = cache();
    {
        std::shared_lock lock(c.mutex);
        auto it = c.polys.find(n);
        if (it != c.polys.end())
            return *it->second;
    }
    auto poly = std::make_shared<const std::vector<Integer>>(compute_cyclotomic(n));
    std::unique_lock lock(c.mutex);
    auto [it, inserted] = c.polys.emplace(n, std::move(poly));
    return *it->second;
}

int euler_phi(int n)
{
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            result -= result / p;
        }
    }
    if (n > 1)
        result -= result / n;
    return result;
}

std::string rational_string(const Rational& r)
{
    return r.get_str();
}

std::string join_terms(const std::vector<std::string>& terms)
{
    if (terms.empty())
        return "0";
    std::string out = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) {
        const std::string& t = terms[i];
        if (!t.empty() && t.front() == '-')
            out += " - " + t.substr(1);
        else
            out += " + " + t;
    }
    return out;
}

// ---------------------------------------------------------------- Cyclotomic

Cyclotomic::Cyclotomic(const Rational& value, int order) : order_(order)
{
    if (order < 1)
        throw DomainError("cyclotomic order must be positive");
    coeffs_.assign(static_cast<std::size_t>(euler_phi(order)), Rational(0));
    coeffs_[0] = value;
    coeffs_[0].canonicalize();
}

Cyclotomic Cyclotomic::root_of_unity(int order, long power)
{
    if (order < 1)
        throw DomainError("root of unity order must be positive");
    std::vector<Rational> p(static_cast<std::size_t>(positive_mod(power, order)) + 1, Rational(0));
    p.back() = 1;
    return from_coeffs(order, std::move(p));
}

Cyclotomic Cyclotomic::from_coeffs(int order, std::vector<Rational> coeffs)
{
    Cyclotomic out;
    out.order_ = order;
    if (coeffs.empty())
        coeffs.push_back(0);
    reduce_mod_phi(coeffs, order);
    out.coeffs_ = std::move(coeffs);
    return out;
}

bool Cyclotomic::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool Cyclotomic::is_rational() const
{
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool Cyclotomic::is_one() const
{
    return is_rational() && coeffs_.front() == 1;
}

Cyclotomic Cyclotomic::embed(int target_order) const
{
    if (target_order == order_)
        return *this;
    if (is_rational())
        return Cyclotomic(coeffs_.front(), target_order);
    if (target_order < 1 || target_order % order_ != 0)
        throw DomainError("cannot embed Q(z" + std::to_string(order_) + ") into Q(z" +
                          std::to_string(target_order) + "): order does not divide");
    const std::size_t step = static_cast<std::size_t>(target_order / order_);
    std::vector<Rational> p((coeffs_.size() - 1) * step + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        p[i * step] = coeffs_[i];
    return from_coeffs(target_order, std::move(p));
}

Cyclotomic Cyclotomic::conj() const
{
    if (is_rational())
        return *this;
    // zeta^i -> zeta^(N - i)
    std::vector<Rational> p(static_cast<std::size_t>(order_), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        p[i == 0 ? 0 : static_cast<std::size_t>(order_) - i] += coeffs_[i];
    return from_coeffs(order_, std::move(p));
}

Cyclotomic Cyclotomic::pow(long e) const
{
    if (e < 0)
        return inverse().pow(-e);
    Cyclotomic result(Rational(1), order_);
    Cyclotomic base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

Cyclotomic Cyclotomic::galois(int j) const
{
    if (std::gcd(j, order_) != 1)
        throw DomainError("galois: exponent must be coprime to the order");
    if (is_rational())
        return *this;
    std::vector<Rational> p(static_cast<std::size_t>(order_), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        p[static_cast<std::size_t>(positive_mod(static_cast<long>(i) * j, order_))] += coeffs_[i];
    return from_coeffs(order_, std::move(p));
}

Cyclotomic Cyclotomic::inverse() const
{
    if (is_zero())
        throw DomainError("division by zero");
    if (is_rational())
        return Cyclotomic(1 / coeffs_.front(), order_);
    Cyclotomic others(Rational(1), order_);
    for (int j = 2; j < order_; ++j)
        if (std::gcd(j, order_) == 1)
            others *= galois(j);
    const Cyclotomic norm = *this * others;
    return others * Cyclotomic(1 / norm.rational_value());
}

int common_order(const Cyclotomic& a, const Cyclotomic& b)
{
    if (a.order() == b.order())
        return a.order();
    if (a.is_rational() && b.is_rational())
        return std::max(a.order(), b.order());
    if (a.is_rational())
        return b.order();
    if (b.is_rational())
        return a.order();
    if (b.order() % a.order() == 0)
        return b.order();
    if (a.order() % b.order() == 0)
        return a.order();
    throw RingMismatch("incompatible cyclotomic fields Q(z" + std::to_string(a.order()) + ") and Q(z" +
                       std::to_string(b.order()) + ")");
}

Cyclotomic embed_cyclotomic(const Cyclotomic& a, int target_order)
{
    if (target_order < 1 || target_order % a.order() != 0)
        throw DomainError("embed_cyclotomic: order " + std::to_string(a.order()) + " does not divide " +
                          std::to_string(target_order));
    return a.embed(target_order);
}

Cyclotomic Cyclotomic::operator-() const
{
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other)
{
    const int n = common_order(*this, other);
    if (n != order_)
        *this = embed(n);
    if (other.order_ == n) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] += other.coeffs_[i];
    } else {
        const Cyclotomic o = other.embed(n);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
    }
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other)
{
    return *this += -other;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other)
{
    if (other.is_rational()) {
        const Rational r = other.coeffs_.front();
        if (other.order_ != order_ && !is_rational() && common_order(*this, other) != order_)
            *this = embed(other.order_);
        for (auto& c : coeffs_)
            c *= r;
        return *this;
    }
    if (is_rational()) {
        Cyclotomic out = other;
        const Rational r = coeffs_.front();
        for (auto& c : out.coeffs_)
            c *= r;
        return *this = std::move(out);
    }
    const int n = common_order(*this, other);
    const Cyclotomic a = embed(n);
    const Cyclotomic b = other.embed(n);
    std::vector<Rational> p(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            if (sgn(b.coeffs_[j]) != 0)
                p[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return *this = from_coeffs(n, std::move(p));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b)
{
    if (a.order_ == b.order_)
        return a.coeffs_ == b.coeffs_;
    if (a.is_rational() && b.is_rational())
        return a.coeffs_.front() == b.coeffs_.front();
    try {
        const int n = common_order(a, b);
        return a.embed(n).coeffs_ == b.embed(n).coeffs_;
    } catch (const RingMismatch&) {
        return false;
    }
}

std::string Cyclotomic::to_string() const
{
    std::vector<std::string> terms;
    const std::string var = "z" + std::to_string(order_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (sgn(c) == 0)
            continue;
        if (i == 0) {
            terms.push_back(rational_string(c));
            continue;
        }
        const std::string mono = var + "^" + std::to_string(i);
        if (c == 1)
            terms.push_back(mono);
        else if (c == -1)
            terms.push_back("-" + mono);
        else
            terms.push_back(rational_string(c) + "*" + mono);
    }
    return join_terms(terms);
}

// -------------------------------------------------------------------- Scalar

Scalar::Scalar(long value) : Scalar(Rational(value)) {}

Scalar::Scalar(const Rational& value) : Scalar(Cyclotomic(value)) {}

Scalar::Scalar(const Cyclotomic& value) : order_(value.order())
{
    if (!value.is_zero())
        terms_.emplace(Exponent{}, value);
}

Scalar Scalar::root_of_unity(int order, long power)
{
    return Scalar(Cyclotomic::root_of_unity(order, power));
}

Scalar Scalar::q_power(int nvars, int var, int power)
{
    if (var < 0 || var >= nvars)
        throw DomainError("q variable index out of range");
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(var)] = power;
    return monomial(Cyclotomic(1), std::move(e));
}

Scalar Scalar::monomial(const Cyclotomic& coeff, Exponent exponent)
{
    Scalar out;
    out.order_ = coeff.order();
    out.nvars_ = static_cast<int>(exponent.size());
    if (!coeff.is_zero())
        out.terms_.emplace(std::move(exponent), coeff);
    return out;
}

bool Scalar::is_one() const
{
    return is_constant() && terms_.size() == 1 && terms_.begin()->second.is_one();
}

bool Scalar::is_constant() const
{
    for (const auto& [e, c] : terms_)
        if (std::any_of(e.begin(), e.end(), [](int x) { return x != 0; }))
            return false;
    return true;
}

bool Scalar::is_rational() const
{
    return is_constant() && (terms_.empty() || terms_.begin()->second.is_rational());
}

Cyclotomic Scalar::constant_term() const
{
    const Exponent zero(static_cast<std::size_t>(nvars_), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Cyclotomic(Rational(0), order_) : it->second;
}

std::optional<Rational> Scalar::as_rational() const
{
    if (!is_rational())
        return std::nullopt;
    if (terms_.empty())
        return Rational(0);
    return terms_.begin()->second.rational_value();
}

void Scalar::promote_to(int order, int nvars)
{
    if (nvars != nvars_) {
        if (nvars_ != 0)
            throw RingMismatch("cannot mix Laurent rings with " + std::to_string(nvars_) + " and " +
                               std::to_string(nvars) + " variables");
        std::map<Exponent, Cyclotomic> padded;
        for (auto& [e, c] : terms_)
            padded.emplace(Exponent(static_cast<std::size_t>(nvars), 0), std::move(c));
        terms_ = std::move(padded);
        nvars_ = nvars;
    }
    if (order != order_) {
        for (auto& [e, c] : terms_)
            c = c.embed(order);
        order_ = order;
    }
}

void Scalar::unify(Scalar& a, Scalar& b)
{
    if (a.order_ == b.order_ && a.nvars_ == b.nvars_)
        return;
    int order = a.order_;
    if (a.order_ != b.order_) {
        const bool a_rat = std::all_of(a.terms_.begin(), a.terms_.end(), [](auto& t) { return t.second.is_rational(); });
        const bool b_rat = std::all_of(b.terms_.begin(), b.terms_.end(), [](auto& t) { return t.second.is_rational(); });
        if (a_rat && !b_rat)
            order = b.order_;
        else if (b_rat && !a_rat)
            order = a.order_;
        else if (a_rat && b_rat)
            order = std::max(a.order_, b.order_);
        else if (b.order_ % a.order_ == 0)
            order = b.order_;
        else if (a.order_ % b.order_ == 0)
            order = a.order_;
        else
            throw RingMismatch("incompatible cyclotomic fields Q(z" + std::to_string(a.order_) + ") and Q(z" +
                               std::to_string(b.order_) + ")");
    }
    const int nvars = std::max(a.nvars_, b.nvars_);
    a.promote_to(order, nvars);
    b.promote_to(order, nvars);
}

Scalar Scalar::embed(int target_order) const
{
    Scalar out = *this;
    for (auto& [e, c] : out.terms_)
        c = embed_cyclotomic(c, target_order);
    out.order_ = target_order;
    return out;
}

Scalar Scalar::conj() const
{
    Scalar out;
    out.order_ = order_;
    out.nvars_ = nvars_;
    for (const auto& [e, c] : terms_) {
        Exponent neg = e;
        for (int& x : neg)
            x = -x;
        out.terms_.emplace(std::move(neg), c.conj());
    }
    return out;
}

Scalar Scalar::pow(long e) const
{
    if (e < 0) {
        if (terms_.size() != 1 || !terms_.begin()->second.is_rational())
            throw DomainError("negative power of a non-monomial scalar");
        const auto& [ex, c] = *terms_.begin();
        Exponent scaled = ex;
        for (int& x : scaled)
            x = static_cast<int>(x * e);
        const Rational inv = 1 / c.rational_value();
        Rational rp = 1;
        for (long i = 0; i < -e; ++i)
            rp *= inv;
        Scalar out = monomial(Cyclotomic(rp, order_), std::move(scaled));
        out.order_ = order_;
        return out;
    }
    Scalar result(Cyclotomic(Rational(1), order_));
    result.promote_to(order_, nvars_);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

Scalar Scalar::inverse() const
{
    if (!is_constant())
        throw DomainError("only q-free scalars can be inverted");
    Scalar out(constant_term().inverse());
    out.nvars_ = 0;
    return out;
}

std::optional<Scalar> Scalar::divide_by_one_minus(const Exponent& v) const
{
    // P = Q * (1 - q^v). Along each chain e0 + t*v the quotient coefficients
    // are the partial sums of P's coefficients, and exactness means every
    // chain sums to zero.
    if (nvars_ == 0 && !v.empty() && !terms_.empty()) {
        Scalar promoted = *this;
        promoted.promote_to(order_, static_cast<int>(v.size()));
        return promoted.divide_by_one_minus(v);
    }
    if (static_cast<int>(v.size()) != nvars_ && !terms_.empty())
        throw RingMismatch("divisor exponent has the wrong number of variables");
    std::size_t pivot = v.size();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) {
            pivot = i;
            break;
        }
    if (pivot == v.size())
        return is_zero() ? std::optional<Scalar>(*this) : std::nullopt; // 1 - 1 = 0
    if (v[pivot] < 0) {
        // 1 - m = -m (1 - m^-1)
        Exponent w = v;
        for (int& x : w)
            x = -x;
        auto q = divide_by_one_minus(w);
        if (!q)
            return std::nullopt;
        Scalar m_inv = monomial(Cyclotomic(Rational(-1), order_), w);
        return *q * m_inv;
    }
    const long step = v[pivot];
    auto floor_div = [](long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
    // chain key -> (t -> coefficient)
    std::map<Exponent, std::map<long, Cyclotomic>> chains;
    for (const auto& [e, c] : terms_) {
        const long t = floor_div(e[pivot], step);
        Exponent base = e;
        for (std::size_t i = 0; i < base.size(); ++i)
            base[i] = static_cast<int>(base[i] - t * v[i]);
        chains[base].emplace(t, c);
    }
    Scalar out;
    out.order_ = order_;
    out.nvars_ = nvars_;
    for (const auto& [base, chain] : chains) {
        Cyclotomic running(Rational(0), order_);
        const long first = chain.begin()->first;
        const long last = chain.rbegin()->first;
        for (long t = first; t <= last; ++t) {
            auto it = chain.find(t);
            if (it != chain.end())
                running += it->second;
            if (!running.is_zero()) {
                Exponent e = base;
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] = static_cast<int>(e[i] + t * v[i]);
                out.terms_.emplace(std::move(e), running);
            }
        }
        if (!running.is_zero())
            return std::nullopt;
    }
    return out;
}

Scalar Scalar::operator-() const
{
    Scalar out = *this;
    for (auto& [e, c] : out.terms_)
        c = -c;
    return out;
}

Scalar& Scalar::operator+=(const Scalar& other)
{
    if (other.terms_.empty())
        return *this;
    if (order_ != other.order_ || nvars_ != other.nvars_) {
        Scalar o = other;
        unify(*this, o);
        return *this += o;
    }
    for (const auto& [e, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other)
{
    return *this += -other;
}

Scalar& Scalar::operator*=(const Scalar& other)
{
    if (order_ != other.order_ || nvars_ != other.nvars_) {
        Scalar o = other;
        unify(*this, o);
        return *this *= o;
    }
    if (terms_.empty())
        return *this;
    if (other.terms_.empty()) {
        terms_.clear();
        return *this;
    }
    std::map<Exponent, Cyclotomic> out;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            Exponent e = ea;
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] += eb[i];
            Cyclotomic prod = ca * cb;
            auto [it, inserted] = out.try_emplace(std::move(e), std::move(prod));
            if (!inserted)
                it->second += prod;
        }
    }
    std::erase_if(out, [](const auto& t) { return t.second.is_zero(); });
    terms_ = std::move(out);
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b)
{
    if (a.order_ == b.order_ && a.nvars_ == b.nvars_)
        return a.terms_ == b.terms_;
    return (a - b).is_zero();
}

bool is_zero(const Scalar& a)
{
    return a.is_zero();
}

std::string Scalar::to_string() const
{
    if (terms_.empty())
        return "0";
    std::vector<std::string> parts;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += (nvars_ == 1 ? std::string("q") : "q" + std::to_string(i + 1)) + "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            // Constant cyclotomic terms are sums themselves; splice them in.
            std::string s = c.to_string();
            parts.push_back(std::move(s));
            continue;
        }
        if (c.is_rational()) {
            const Rational& r = c.rational_value();
            if (r == 1)
                parts.push_back(mono);
            else if (r == -1)
                parts.push_back("-" + mono);
            else
                parts.push_back(rational_string(r) + "*" + mono);
        } else {
            parts.push_back("(" + c.to_string() + ")*" + mono);
        }
    }
    return join_terms(parts);
}

std::string coefficient_string(const Scalar& s, bool strip_sign)
{
    if (auto r = s.as_rational()) {
        Rational v = *r;
        if (strip_sign && sgn(v) < 0)
            v = -v;
        return rational_string(v);
    }
    return "(" + s.to_string() + ")";
}

std::string signed_term(const Scalar& coeff, const std::string& atom)
{
    const auto r = coeff.as_rational();
    const bool negative = r && sgn(*r) < 0;
    return (negative ? "-" : "") + coefficient_string(coeff, true) + "*" + atom;
}

} // namespace liedyn
