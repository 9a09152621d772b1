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

#include "liedyn/random.hpp"

namespace liedyn {

std::uint64_t SplitMix64::next()
{
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int SplitMix64::uniform(int lo, int hi)
{
    const std::uint64_t range = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo + 1);
    return lo + static_cast<int>(next() % range);
}

Scalar ElementSampler::coefficient()
{
    int k = 0;
    while (k == 0)
        k = rng_.uniform(-3, 3);
    Scalar c(k);
    if (rng_.coin()) {
        if (space_.is_finite()) {
            c *= Scalar::root_of_unity(space_.size(), rng_.uniform(0, space_.size() - 1));
        } else {
            Scalar::Exponent e(static_cast<std::size_t>(space_.dim()));
            for (int& x : e)
                x = rng_.uniform(-2, 2);
            c *= Scalar::monomial(Cyclotomic(1), std::move(e));
        }
    }
    return c;
}

FnElem ElementSampler::function()
{
    FnElem f(space_);
    const int terms = rng_.uniform(1, 4);
    const bool characters = space_.is_finite() && rng_.coin();
    for (int t = 0; t < terms; ++t) {
        const Scalar c = coefficient();
        if (space_.is_finite()) {
            const int k = rng_.uniform(0, space_.size() - 1);
            f += (characters ? FnElem::character(space_, k) : FnElem::delta(space_, k)) * c;
        } else {
            Freq k(static_cast<std::size_t>(space_.dim()));
            for (int& x : k)
                x = rng_.uniform(-2, 2);
            f += FnElem::torus_monomial(space_, k, c);
        }
    }
    if (f.is_zero())
        return function();
    return f;
}

LieElem ElementSampler::lie_element()
{
    LieElem a(space_);
    const int terms = rng_.uniform(1, 3);
    for (int t = 0; t < terms; ++t) {
        const int grade = rng_.uniform(-3, 3);
        a.add_term(grade, function());
    }
    if (rng_.uniform(0, 2) == 0)
        a.add_central(Scalar(rng_.uniform(-3, 3)));
    return a;
}

RootElem ElementSampler::root_element()
{
    RootElem a(space_);
    const int terms = rng_.uniform(1, 3);
    for (int t = 0; t < terms; ++t) {
        const int grade = rng_.uniform(-3, 3);
        a.add_term(grade, function());
    }
    if (rng_.uniform(0, 2) == 0)
        a.add_central(Scalar(rng_.uniform(-3, 3)));
    return a;
}

CharSymbol ElementSampler::character()
{
    if (space_.is_finite())
        return CharSymbol(space_, {rng_.uniform(0, space_.size() - 1)});
    CharIndex k(static_cast<std::size_t>(space_.dim()));
    for (int& x : k)
        x = rng_.uniform(-2, 2);
    return CharSymbol(space_, std::move(k));
}

CharBasisElem ElementSampler::char_element()
{
    CharBasisElem a(space_);
    const int terms = rng_.uniform(1, 3);
    for (int t = 0; t < terms; ++t) {
        const CharSymbol chi = character();
        const int grade = rng_.uniform(-3, 3);
        a.add_term(chi, grade, coefficient());
    }
    if (rng_.uniform(0, 2) == 0)
        a.add_central(Scalar(rng_.uniform(-3, 3)));
    return a;
}

} // namespace liedyn
