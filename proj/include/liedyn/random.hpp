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

// Seeded, splittable pseudo-random generation of test elements.
//
// Generator: SplitMix64 (Steele, Lea & Flood, "Fast splittable
// pseudorandom number generators", OOPSLA 2014) with the fixed golden
// gamma 0x9e3779b97f4a7c15:
//     state += 0x9e3779b97f4a7c15
//     z = state
//     z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
//     z = (z ^ (z >> 27)) * 0x94d049bb133111eb
//     return z ^ (z >> 31)
// split() seeds a child generator with the parent's next output.
// uniform(lo, hi) is lo + next() % (hi - lo + 1).
//
// Random functions have at most 4 nonzero terms (delta or character basis
// on finite backends, Fourier monomials with frequencies in [-2, 2]^d on
// tori) and coefficients drawn from the pool {-3..3} x {zeta_N^j} (finite)
// or {-3..3} x {q^e, e in [-2, 2]^d} (torus).

#include "liedyn/rootform.hpp"
#include "liedyn/spectrum.hpp"

#include <cstdint>

namespace liedyn {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    SplitMix64 split() { return SplitMix64(next()); }
    /// Integer in [lo, hi].
    int uniform(int lo, int hi);
    bool coin() { return (next() >> 63) != 0; }

private:
    std::uint64_t state_;
};

class ElementSampler {
public:
    ElementSampler(SpaceSpec space, std::uint64_t seed) : space_(space), rng_(seed) {}

    const SpaceSpec& space() const { return space_; }
    SplitMix64& rng() { return rng_; }

    Scalar coefficient();
    FnElem function();
    /// 1..3 monomials with grades in [-3, 3]; a central part with
    /// probability 1/3.
    LieElem lie_element();
    RootElem root_element();
    /// Crossed element whose grade-0 part lies in the image of I - U^-1
    /// plus constants, i.e. in the domain of tau.
    LieElem tau_domain_element() { return tau_inverse(root_element()); }
    CharSymbol character();
    CharBasisElem char_element();

private:
    SpaceSpec space_;
    SplitMix64 rng_;
};

} // namespace liedyn
