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

// Crossed-product presentation: the associative algebra of sums of
// monomials f (x) U^n, its commutator bracket, the scalar 2-cocycle alpha
// and the centrally extended bracket.

#include "liedyn/funcspace.hpp"

#include <map>
#include <utility>

namespace liedyn {

struct CrossedTag {};
struct RootTag {};

/// Finite sum of graded monomials plus a coefficient of the central
/// generator c. The grade-0 function and c are independent coordinates.
/// `Tag` separates the crossed-product coordinates (f (x) U^n) from the
/// root-generator coordinates (X_n(f)); the storage is the same.
template <class Tag>
class GradedElem {
public:
    explicit GradedElem(SpaceSpec space) : space_(space) {}

    static GradedElem monomial(int grade, const FnElem& f)
    {
        GradedElem e(f.space());
        e.add_term(grade, f);
        return e;
    }

    static GradedElem central_element(const SpaceSpec& space, const Scalar& s)
    {
        GradedElem e(space);
        e.central_ = s;
        return e;
    }

    const SpaceSpec& space() const { return space_; }
    const std::map<int, FnElem>& terms() const { return terms_; }
    const Scalar& central() const { return central_; }

    FnElem component(int grade) const
    {
        auto it = terms_.find(grade);
        return it == terms_.end() ? FnElem(space_) : it->second;
    }

    bool is_zero() const { return terms_.empty() && central_.is_zero(); }

    void add_term(int grade, const FnElem& f)
    {
        require_same_space(space_, f.space());
        if (f.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(grade, f);
        if (!inserted) {
            it->second += f;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    void add_central(const Scalar& s) { central_ += s; }

    GradedElem& operator+=(const GradedElem& other)
    {
        require_same_space(space_, other.space_);
        for (const auto& [n, f] : other.terms_)
            add_term(n, f);
        central_ += other.central_;
        return *this;
    }

    GradedElem& operator-=(const GradedElem& other) { return *this += -other; }

    GradedElem& operator*=(const Scalar& s)
    {
        for (auto& [n, f] : terms_)
            f *= s;
        std::erase_if(terms_, [](const auto& t) { return t.second.is_zero(); });
        central_ *= s;
        return *this;
    }

    GradedElem operator-() const
    {
        GradedElem out = *this;
        out *= Scalar(-1);
        return out;
    }

    friend GradedElem operator+(GradedElem a, const GradedElem& b) { return a += b; }
    friend GradedElem operator-(GradedElem a, const GradedElem& b) { return a -= b; }
    friend GradedElem operator*(const Scalar& s, GradedElem a) { return a *= s; }
    friend GradedElem operator*(GradedElem a, const Scalar& s) { return a *= s; }

    friend bool operator==(const GradedElem& a, const GradedElem& b)
    {
        return a.space_ == b.space_ && a.terms_ == b.terms_ && a.central_ == b.central_;
    }

private:
    SpaceSpec space_;
    std::map<int, FnElem> terms_;
    Scalar central_;
};

using LieElem = GradedElem<CrossedTag>;
using RootElem = GradedElem<RootTag>;

/// Grades ascending as `[f]U^n`, central term last as `s*c`.
std::string to_string(const LieElem& a);

/// (phi (x) U^n)(psi (x) U^m) = (phi . U^n psi) (x) U^(n+m). Central parts
/// must vanish.
LieElem assoc_mul(const LieElem& a, const LieElem& b);

/// (phi (x) U^n)^* = (U^-n conj(phi)) (x) U^-n, extended antilinearly.
LieElem involution(const LieElem& a);

/// Commutator ab - ba; central parts must vanish.
LieElem bracket_plain(const LieElem& a, const LieElem& b);

/// alpha(phi (x) U^n, psi (x) U^m) = n * mean(phi . U^n psi) when n + m = 0.
Scalar cocycle_alpha(const LieElem& a, const LieElem& b);

/// Plain bracket plus alpha(a, b) c. Central parts of the inputs are
/// ignored since c is central.
LieElem bracket_extended(const LieElem& a, const LieElem& b);

/// a = a0 + s (1 (x) U^0) with a0 in the mean-zero complement A_0.
std::pair<LieElem, Scalar> decompose_center(const LieElem& a);

/// Quotient view c -> 1 (x) U^0, identifying the central generator with
/// the constant function in grade 0.
LieElem collapse_center(const LieElem& a);

/// True iff the linear system f([x, y]) = alpha(x, y), over all pairs of
/// delta-basis monomials with |grade| <= window and an unknown functional f
/// on the span of the brackets, has no solution. Finite backends only.
bool verify_not_coboundary(const SpaceSpec& space, int window);

/// Details of the coboundary system, for reports.
struct CoboundaryCertificate {
    std::size_t equations = 0;
    std::size_t unknowns = 0;
    std::size_t rank_lhs = 0;
    std::size_t rank_augmented = 0;
    bool infeasible() const { return rank_augmented > rank_lhs; }
};
CoboundaryCertificate coboundary_system(const SpaceSpec& space, int window);

} // namespace liedyn
