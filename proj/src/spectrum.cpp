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

#include "liedyn/spectrum.hpp"

#include "liedyn/error.hpp"

namespace liedyn {

CharSymbol::CharSymbol(SpaceSpec space, CharIndex index) : space_(space), index_(std::move(index))
{
    if (space_.is_finite()) {
        if (index_.size() != 1)
            throw DomainError("character index on " + space_.to_string() + " must be a single integer");
        const int n = space_.size();
        index_[0] = ((index_[0] % n) + n) % n;
    } else if (index_.size() != static_cast<std::size_t>(space_.dim())) {
        throw DomainError("character index on " + space_.to_string() + " needs " + std::to_string(space_.dim())
                          + " components");
    }
}

Scalar CharSymbol::eigenvalue() const
{
    return eigenvalue_power(1);
}

Scalar CharSymbol::eigenvalue_power(long n) const
{
    if (space_.is_finite())
        return Scalar::root_of_unity(space_.size(), index_[0] * n);
    Scalar::Exponent e(index_.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = static_cast<int>(index_[i] * n);
    return Scalar::monomial(Cyclotomic(1), std::move(e));
}

FnElem CharSymbol::function() const
{
    if (space_.is_finite())
        return FnElem::character(space_, index_[0]);
    return FnElem::torus_monomial(space_, index_);
}

bool CharSymbol::is_trivial() const
{
    for (int k : index_)
        if (k != 0)
            return false;
    return true;
}

CharSymbol CharSymbol::operator*(const CharSymbol& other) const
{
    require_same_space(space_, other.space_);
    CharIndex k = index_;
    for (std::size_t i = 0; i < k.size(); ++i)
        k[i] += other.index_[i];
    return CharSymbol(space_, std::move(k));
}

CharSymbol CharSymbol::inverse() const
{
    CharIndex k = index_;
    for (int& x : k)
        x = -x;
    return CharSymbol(space_, std::move(k));
}

std::string CharSymbol::index_string() const
{
    if (index_.size() == 1)
        return std::to_string(index_[0]);
    std::string out = "(";
    for (std::size_t i = 0; i < index_.size(); ++i)
        out += (i ? "," : "") + std::to_string(index_[i]);
    return out + ")";
}

// ------------------------------------------------------------ CharBasisElem

CharBasisElem CharBasisElem::symbol(const CharSymbol& chi, int grade, const Scalar& coeff)
{
    CharBasisElem e(chi.space());
    e.add_term(chi, grade, coeff);
    return e;
}

CharBasisElem CharBasisElem::central_element(const SpaceSpec& space, const Scalar& s)
{
    CharBasisElem e(space);
    e.central_ = s;
    return e;
}

void CharBasisElem::add_term(const CharSymbol& chi, int grade, const Scalar& coeff)
{
    require_same_space(space_, chi.space());
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(Key{grade, chi.index()}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

CharBasisElem& CharBasisElem::operator+=(const CharBasisElem& other)
{
    require_same_space(space_, other.space_);
    for (const auto& [key, s] : other.terms_)
        add_term(CharSymbol(space_, key.second), key.first, s);
    central_ += other.central_;
    return *this;
}

CharBasisElem& CharBasisElem::operator-=(const CharBasisElem& other)
{
    return *this += -other;
}

CharBasisElem& CharBasisElem::operator*=(const Scalar& s)
{
    for (auto& [key, c] : terms_)
        c *= s;
    std::erase_if(terms_, [](const auto& t) { return t.second.is_zero(); });
    central_ *= s;
    return *this;
}

CharBasisElem CharBasisElem::operator-() const
{
    CharBasisElem out = *this;
    out *= Scalar(-1);
    return out;
}

bool operator==(const CharBasisElem& a, const CharBasisElem& b)
{
    return a.space_ == b.space_ && a.terms_ == b.terms_ && a.central_ == b.central_;
}

std::string to_string(const CharBasisElem& a)
{
    std::vector<std::string> terms;
    for (const auto& [key, s] : a.terms()) {
        const CharSymbol chi(a.space(), key.second);
        terms.push_back(signed_term(s, "Y[" + chi.index_string() + "," + std::to_string(key.first) + "]"));
    }
    if (!a.central().is_zero())
        terms.push_back(signed_term(a.central(), "c"));
    return join_terms(terms);
}

CharBasisElem bracket_Y(const CharBasisElem& a, const CharBasisElem& b)
{
    require_same_space(a.space(), b.space());
    const SpaceSpec& space = a.space();
    CharBasisElem out(space);
    for (const auto& [ka, sa] : a.terms()) {
        const CharSymbol chi(space, ka.second);
        const int n = ka.first;
        for (const auto& [kb, sb] : b.terms()) {
            const CharSymbol chi1(space, kb.second);
            const int n1 = kb.first;
            const Scalar coeff = sa * sb;
            const CharSymbol prod = chi * chi1;
            out.add_term(prod, n + n1, coeff * (chi1.eigenvalue_power(n) - chi.eigenvalue_power(n1)));
            if (n + n1 == 0 && n != 0 && prod.is_trivial())
                out.add_central(coeff * Scalar(n) * chi1.eigenvalue_power(n));
        }
    }
    return out;
}

LieElem to_crossed(const CharBasisElem& a)
{
    LieElem out(a.space());
    for (const auto& [key, s] : a.terms())
        out.add_term(key.first, CharSymbol(a.space(), key.second).function() * s);
    out.add_central(a.central());
    return out;
}

std::set<std::pair<CharIndex, int>> grading_of(const CharBasisElem& a)
{
    std::set<std::pair<CharIndex, int>> out;
    for (const auto& [key, s] : a.terms())
        out.emplace(key.second, key.first);
    return out;
}

std::vector<CharSymbol> enumerate_characters(const SpaceSpec& space, int bound)
{
    std::vector<CharSymbol> out;
    if (space.is_finite()) {
        for (int k = 0; k < space.size(); ++k)
            out.emplace_back(space, CharIndex{k});
        return out;
    }
    if (bound < 0)
        throw DomainError("character bound must be non-negative");
    CharIndex k(static_cast<std::size_t>(space.dim()), -bound);
    while (true) {
        out.emplace_back(space, k);
        std::size_t i = 0;
        while (i < k.size() && k[i] == bound)
            k[i++] = -bound;
        if (i == k.size())
            break;
        ++k[i];
    }
    return out;
}

} // namespace liedyn
