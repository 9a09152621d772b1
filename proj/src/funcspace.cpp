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

#include "liedyn/funcspace.hpp"

#include "liedyn/error.hpp"

#include <charconv>
#include <sstream>

namespace liedyn {

namespace {

bool is_prime(int p)
{
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

int parse_int(std::string_view s, std::string_view what)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw UsageError("invalid " + std::string(what) + " '" + std::string(s) + "' in space literal");
    return value;
}

std::size_t wrap(long x, long n)
{
    const long r = x % n;
    return static_cast<std::size_t>(r < 0 ? r + n : r);
}

} // namespace

// ----------------------------------------------------------------- SpaceSpec

SpaceSpec SpaceSpec::cyclic(int n)
{
    if (n < 2)
        throw DomainError("cyclic space needs N >= 2, got " + std::to_string(n));
    if (n > 4096)
        throw DomainError("cyclic space too large: " + std::to_string(n));
    return SpaceSpec(SpaceKind::Cyclic, n, 0);
}

SpaceSpec SpaceSpec::padic(int p, int level)
{
    if (!is_prime(p))
        throw DomainError("p-adic space needs a prime p, got " + std::to_string(p));
    if (level < 1)
        throw DomainError("p-adic level must be positive, got " + std::to_string(level));
    long size = 1;
    for (int i = 0; i < level; ++i) {
        size *= p;
        if (size > 4096)
            throw DomainError("p-adic level too large: " + std::to_string(p) + "^" + std::to_string(level));
    }
    return SpaceSpec(SpaceKind::PAdicLevel, p, level);
}

SpaceSpec SpaceSpec::torus(int dim)
{
    if (dim < 1 || dim > 8)
        throw DomainError("torus dimension must be in 1..8, got " + std::to_string(dim));
    return SpaceSpec(SpaceKind::Torus, dim, 0);
}

SpaceSpec SpaceSpec::parse(std::string_view text)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t colon = text.find(':', start);
        parts.push_back(text.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start));
        if (colon == std::string_view::npos)
            break;
        start = colon + 1;
    }
    if (parts[0] == "cyclic" && parts.size() == 2)
        return cyclic(parse_int(parts[1], "N"));
    if (parts[0] == "padic" && parts.size() == 3)
        return padic(parse_int(parts[1], "p"), parse_int(parts[2], "level"));
    if (parts[0] == "torus" && parts.size() == 2)
        return torus(parse_int(parts[1], "dimension"));
    throw UsageError("unknown space '" + std::string(text) + "' (expected cyclic:N, padic:p:n or torus:d)");
}

int SpaceSpec::size() const
{
    switch (kind_) {
    case SpaceKind::Cyclic:
        return a_;
    case SpaceKind::PAdicLevel: {
        int n = 1;
        for (int i = 0; i < b_; ++i)
            n *= a_;
        return n;
    }
    case SpaceKind::Torus:
        break;
    }
    throw DomainError("torus backend is not finite-dimensional");
}

SpaceSpec SpaceSpec::next_level() const
{
    if (kind_ != SpaceKind::PAdicLevel)
        throw DomainError("level inclusion needs a p-adic space, got " + to_string());
    return padic(a_, b_ + 1);
}

std::string SpaceSpec::to_string() const
{
    switch (kind_) {
    case SpaceKind::Cyclic:
        return "cyclic:" + std::to_string(a_);
    case SpaceKind::PAdicLevel:
        return "padic:" + std::to_string(a_) + ":" + std::to_string(b_);
    case SpaceKind::Torus:
        return "torus:" + std::to_string(a_);
    }
    return {};
}

void require_same_space(const SpaceSpec& a, const SpaceSpec& b)
{
    if (!(a == b))
        throw SpaceMismatch("space mismatch: " + a.to_string() + " vs " + b.to_string());
}

// -------------------------------------------------------------------- FnElem

FnElem::FnElem(SpaceSpec space) : space_(space)
{
    if (space_.is_finite())
        data_ = Values(static_cast<std::size_t>(space_.size()));
    else
        data_ = Fourier{};
}

FnElem FnElem::constant(const SpaceSpec& space, const Scalar& value)
{
    FnElem f(space);
    if (space.is_finite()) {
        for (auto& v : std::get<Values>(f.data_))
            v = value;
    } else if (!value.is_zero()) {
        std::get<Fourier>(f.data_).emplace(Freq(static_cast<std::size_t>(space.dim()), 0), value);
    }
    return f;
}

FnElem FnElem::delta(const SpaceSpec& space, int k)
{
    if (!space.is_finite())
        throw DomainError("delta(k) needs a finite backend, got " + space.to_string());
    FnElem f(space);
    std::get<Values>(f.data_)[wrap(k, space.size())] = Scalar(1);
    return f;
}

FnElem FnElem::character(const SpaceSpec& space, int k)
{
    if (!space.is_finite())
        throw DomainError("chi(k) needs a finite backend, got " + space.to_string());
    const int n = space.size();
    FnElem f(space);
    auto& values = std::get<Values>(f.data_);
    for (int x = 0; x < n; ++x)
        values[static_cast<std::size_t>(x)] = Scalar::root_of_unity(n, static_cast<long>(k) * x);
    return f;
}

FnElem FnElem::torus_monomial(const SpaceSpec& space, const Freq& freq, const Scalar& coeff)
{
    if (space.is_finite())
        throw DomainError("torus monomials need a torus backend, got " + space.to_string());
    if (static_cast<int>(freq.size()) != space.dim())
        throw DomainError("frequency vector has " + std::to_string(freq.size()) + " entries, torus has dimension " +
                          std::to_string(space.dim()));
    FnElem f(space);
    if (!coeff.is_zero())
        std::get<Fourier>(f.data_).emplace(freq, coeff);
    return f;
}

FnElem FnElem::from_values(const SpaceSpec& space, Values values)
{
    if (!space.is_finite() || static_cast<int>(values.size()) != space.size())
        throw DomainError("value vector does not match " + space.to_string());
    FnElem f(space);
    f.data_ = std::move(values);
    return f;
}

bool FnElem::is_zero() const
{
    if (auto* v = std::get_if<Values>(&data_)) {
        for (const auto& s : *v)
            if (!s.is_zero())
                return false;
        return true;
    }
    return std::get<Fourier>(data_).empty();
}

std::span<const Scalar> FnElem::values() const
{
    if (auto* v = std::get_if<Values>(&data_))
        return *v;
    throw DomainError("values() on a torus function");
}

const FnElem::Fourier& FnElem::fourier() const
{
    if (auto* f = std::get_if<Fourier>(&data_))
        return *f;
    throw DomainError("fourier() on a finite-backend function");
}

const Scalar& FnElem::value(int x) const
{
    const auto v = values();
    return v[wrap(x, static_cast<long>(v.size()))];
}

Scalar FnElem::coefficient(const Freq& freq) const
{
    const auto& f = fourier();
    auto it = f.find(freq);
    return it == f.end() ? Scalar() : it->second;
}

FnElem FnElem::operator-() const
{
    FnElem out = *this;
    out *= Scalar(-1);
    return out;
}

FnElem& FnElem::operator+=(const FnElem& other)
{
    require_same_space(space_, other.space_);
    if (auto* v = std::get_if<Values>(&data_)) {
        const auto& o = std::get<Values>(other.data_);
        for (std::size_t i = 0; i < v->size(); ++i)
            (*v)[i] += o[i];
    } else {
        auto& f = std::get<Fourier>(data_);
        for (const auto& [k, c] : std::get<Fourier>(other.data_)) {
            auto [it, inserted] = f.try_emplace(k, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero())
                    f.erase(it);
            }
        }
    }
    return *this;
}

FnElem& FnElem::operator-=(const FnElem& other)
{
    return *this += -other;
}

FnElem& FnElem::operator*=(const Scalar& s)
{
    if (auto* v = std::get_if<Values>(&data_)) {
        for (auto& x : *v)
            x *= s;
    } else {
        auto& f = std::get<Fourier>(data_);
        for (auto& [k, c] : f)
            c *= s;
        std::erase_if(f, [](const auto& t) { return t.second.is_zero(); });
    }
    return *this;
}

bool operator==(const FnElem& a, const FnElem& b)
{
    if (!(a.space_ == b.space_))
        return false;
    if (auto* va = std::get_if<FnElem::Values>(&a.data_)) {
        const auto& vb = std::get<FnElem::Values>(b.data_);
        for (std::size_t i = 0; i < va->size(); ++i)
            if (!((*va)[i] == vb[i]))
                return false;
        return true;
    }
    const auto& fa = std::get<FnElem::Fourier>(a.data_);
    const auto& fb = std::get<FnElem::Fourier>(b.data_);
    if (fa.size() != fb.size())
        return false;
    for (auto ia = fa.begin(), ib = fb.begin(); ia != fa.end(); ++ia, ++ib)
        if (ia->first != ib->first || !(ia->second == ib->second))
            return false;
    return true;
}

std::string FnElem::to_string() const
{
    std::vector<std::string> terms;
    if (auto* v = std::get_if<Values>(&data_)) {
        for (std::size_t k = 0; k < v->size(); ++k)
            if (!(*v)[k].is_zero())
                terms.push_back(signed_term((*v)[k], "delta(" + std::to_string(k) + ")"));
    } else {
        for (const auto& [k, c] : std::get<Fourier>(data_))
            terms.push_back(signed_term(c, torus_atom(k)));
    }
    return join_terms(terms);
}

std::string torus_atom(const Freq& k)
{
    std::string atom;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] == 0)
            continue;
        if (!atom.empty())
            atom += "*";
        atom += (k.size() == 1 ? std::string("z") : "z" + std::to_string(i + 1)) + "^" + std::to_string(k[i]);
    }
    return atom.empty() ? "one" : atom;
}

// ---------------------------------------------------------------- operations

FnElem fn_mul(const FnElem& f, const FnElem& g)
{
    require_same_space(f.space(), g.space());
    if (f.space().is_finite()) {
        const auto a = f.values();
        const auto b = g.values();
        FnElem::Values out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!a[i].is_zero() && !b[i].is_zero())
                out[i] = a[i] * b[i];
        return FnElem::from_values(f.space(), std::move(out));
    }
    FnElem out(f.space());
    for (const auto& [ka, ca] : f.fourier()) {
        for (const auto& [kb, cb] : g.fourier()) {
            Freq k = ka;
            for (std::size_t i = 0; i < k.size(); ++i)
                k[i] += kb[i];
            out += FnElem::torus_monomial(f.space(), k, ca * cb);
        }
    }
    return out;
}

FnElem operator*(const FnElem& f, const FnElem& g)
{
    return fn_mul(f, g);
}

FnElem shift_U(const FnElem& f, long power)
{
    if (power == 0)
        return f;
    const SpaceSpec& space = f.space();
    if (space.is_finite()) {
        const auto v = f.values();
        const long n = static_cast<long>(v.size());
        FnElem::Values out(v.size());
        for (long x = 0; x < n; ++x)
            out[static_cast<std::size_t>(x)] = v[wrap(x + power, n)];
        return FnElem::from_values(space, std::move(out));
    }
    FnElem out(space);
    for (const auto& [k, c] : f.fourier()) {
        Scalar::Exponent e(k.size());
        for (std::size_t i = 0; i < k.size(); ++i)
            e[i] = static_cast<int>(k[i] * power);
        out += FnElem::torus_monomial(space, k, c * Scalar::monomial(Cyclotomic(1), std::move(e)));
    }
    return out;
}

Scalar mean(const FnElem& f)
{
    if (f.space().is_finite()) {
        Scalar sum;
        for (const auto& v : f.values())
            sum += v;
        return sum * Scalar(Rational(1, f.space().size()));
    }
    return f.coefficient(Freq(static_cast<std::size_t>(f.space().dim()), 0));
}

FnElem conjugate(const FnElem& f)
{
    if (f.space().is_finite()) {
        FnElem::Values out;
        out.reserve(f.values().size());
        for (const auto& v : f.values())
            out.push_back(v.conj());
        return FnElem::from_values(f.space(), std::move(out));
    }
    FnElem out(f.space());
    for (const auto& [k, c] : f.fourier()) {
        Freq neg = k;
        for (int& x : neg)
            x = -x;
        out += FnElem::torus_monomial(f.space(), neg, c.conj());
    }
    return out;
}

FnElem cartan_K(const FnElem& f)
{
    return f * Scalar(2) - shift_U(f, 1) - shift_U(f, -1);
}

FnElem cartan_Kn(const FnElem& f, long n)
{
    if (n == 0)
        throw DomainError("K_n is defined for n != 0");
    return f - shift_U(f, -1) + shift_U(f, n - 1) - shift_U(f, n);
}

FnElem geometric_sum_U(const FnElem& f, long m)
{
    if (m < 1)
        throw DomainError("geometric_sum_U needs m >= 1");
    FnElem out = f;
    for (long j = 1; j < m; ++j)
        out += shift_U(f, -j);
    return out;
}

FnElem project_to_level(const FnElem& f)
{
    const SpaceSpec target = f.space().next_level();
    const auto v = f.values();
    const long coarse = static_cast<long>(v.size());
    const int order = target.size();
    FnElem::Values out(static_cast<std::size_t>(order));
    for (long x = 0; x < order; ++x)
        out[static_cast<std::size_t>(x)] = v[wrap(x, coarse)].embed(order);
    return FnElem::from_values(target, std::move(out));
}

std::optional<FnElem> solve_one_minus_Uinv(const FnElem& f)
{
    const SpaceSpec& space = f.space();
    if (space.is_finite()) {
        // g(x) - g(x-1) = f(x): cumulative sums, consistent iff sum f = 0.
        const auto v = f.values();
        const std::size_t n = v.size();
        Scalar total;
        for (const auto& s : v)
            total += s;
        if (!total.is_zero())
            return std::nullopt;
        FnElem::Values g(n);
        Scalar running;
        for (std::size_t x = 1; x < n; ++x) {
            running += v[x];
            g[x] = running;
        }
        FnElem out = FnElem::from_values(space, std::move(g));
        const Scalar m = mean(out);
        return out - FnElem::constant(space, m);
    }
    FnElem out(space);
    for (const auto& [k, c] : f.fourier()) {
        Scalar::Exponent neg(k.size());
        bool zero = true;
        for (std::size_t i = 0; i < k.size(); ++i) {
            neg[i] = -k[i];
            zero = zero && k[i] == 0;
        }
        if (zero)
            return std::nullopt;
        auto q = c.divide_by_one_minus(neg);
        if (!q)
            return std::nullopt;
        out += FnElem::torus_monomial(space, k, *q);
    }
    return out;
}

// ----------------------------------------------------------- CartanOperator

CartanOperator::CartanOperator(SpaceSpec space) : space_(space) {}

CartanOperator CartanOperator::custom(const SpaceSpec& space, std::vector<std::vector<Scalar>> matrix)
{
    if (!space.is_finite())
        throw DomainError("custom Cartan operators need a finite backend");
    const std::size_t n = static_cast<std::size_t>(space.size());
    if (matrix.size() != n)
        throw DomainError("custom Cartan operator must be " + std::to_string(n) + "x" + std::to_string(n));
    for (const auto& row : matrix)
        if (row.size() != n)
            throw DomainError("custom Cartan operator must be " + std::to_string(n) + "x" + std::to_string(n));
    CartanOperator k(space);
    k.matrix_ = std::move(matrix);
    return k;
}

FnElem CartanOperator::apply(const FnElem& f) const
{
    require_same_space(space_, f.space());
    if (!matrix_)
        return cartan_K(f);
    const auto v = f.values();
    FnElem::Values out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!(*matrix_)[i][j].is_zero() && !v[j].is_zero())
                out[i] += (*matrix_)[i][j] * v[j];
    return FnElem::from_values(space_, std::move(out));
}

LocalElem LocalElem::of(int grade, const FnElem& f)
{
    LocalElem e{FnElem(f.space()), FnElem(f.space()), FnElem(f.space())};
    switch (grade) {
    case -1:
        e.minus = f;
        break;
    case 0:
        e.zero = f;
        break;
    case 1:
        e.plus = f;
        break;
    default:
        throw DomainError("local algebra has grades -1, 0, 1 only");
    }
    return e;
}

LocalElem local_bracket(const CartanOperator& k, const LocalElem& a, const LocalElem& b)
{
    const SpaceSpec& space = k.space();
    if ((!a.plus.is_zero() && !b.plus.is_zero()) || (!a.minus.is_zero() && !b.minus.is_zero()))
        throw DomainError("bracket leaves the local algebra (grade +-2)");
    LocalElem out{FnElem(space), FnElem(space), FnElem(space)};
    out.plus += k.apply(a.zero) * b.plus;
    out.plus -= k.apply(b.zero) * a.plus;
    out.minus -= k.apply(a.zero) * b.minus;
    out.minus += k.apply(b.zero) * a.minus;
    out.zero += a.plus * b.minus;
    out.zero -= b.plus * a.minus;
    return out;
}

} // namespace liedyn
