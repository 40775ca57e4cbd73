/*
 * Copyright 2026 The roughring Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <vector>

#include "roughring/element_set.hpp"
#include "roughring/ideal.hpp"
#include "roughring/ring.hpp"

namespace roughring {

/// Apr(X) relative to an ideal, with boundary and roughness verdict.
struct RoughApproximation {
    ElementSet subset;
    Ideal ideal;
    ElementSet lower;
    ElementSet upper;
    ElementSet boundary;
    bool rough = false;
};

/**
 * Approximation operators for one (ring, ideal) pair. Validates the ideal
 * once and precomputes every coset x + I, so repeated queries are cheap.
 * Membership is decided per element straight from the coset definition,
 * independently of the block-based `ApproximationSpace` operators.
 */
class IdealApproximator {
public:
    IdealApproximator(const FiniteRing& ring, Ideal ideal);

    const Ideal& ideal() const noexcept { return ideal_; }
    std::size_t universe_size() const noexcept { return cosets_.size(); }
    const ElementSet& coset_of(Element x) const { return cosets_.at(x); }

    /// {x : (x + I) meets X}.
    ElementSet upper(const ElementSet& x) const;
    /// {x : x + I is contained in X}.
    ElementSet lower(const ElementSet& x) const;
    RoughApproximation apr(const ElementSet& x) const;

private:
    void check_subset(const ElementSet& x) const;

    Ideal ideal_;
    std::vector<ElementSet> cosets_;
};

ElementSet upper_wrt(const FiniteRing& ring, const Ideal& ideal, const ElementSet& x);
ElementSet lower_wrt(const FiniteRing& ring, const Ideal& ideal, const ElementSet& x);
RoughApproximation apr(const FiniteRing& ring, const Ideal& ideal, const ElementSet& x);

/// How A + B is read: elementwise sums, or all finite sums of those.
enum class SumMode { Pairwise, Closure };

/// {a + b}; in Closure mode, its additive closure. Empty operands are rejected.
ElementSet set_sum(const FiniteRing& ring, const ElementSet& a, const ElementSet& b,
                   SumMode mode = SumMode::Pairwise);

/// All finite sums a1*b1 + ... + an*bn with n >= 1. Empty operands are rejected.
ElementSet set_product(const FiniteRing& ring, const ElementSet& a, const ElementSet& b);

} // namespace roughring
