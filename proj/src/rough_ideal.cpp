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

#include "roughring/rough_ideal.hpp"

namespace roughring {

namespace {

void check_operands(const FiniteRing& ring, const ElementSet& a, const ElementSet& b) {
    if (a.universe_size() != ring.size() || b.universe_size() != ring.size())
        throw Error(ErrorKind::IndexOutOfBounds, "operand drawn from a universe of the wrong size");
    if (a.empty() || b.empty())
        throw Error(ErrorKind::EmptyOperand, "set sum/product needs nonempty operands");
}

ElementSet pairwise(const FiniteRing& ring, const ElementSet& a, const ElementSet& b, bool product) {
    ElementSet out = ring.empty_set();
    a.for_each([&](Element x) {
        b.for_each([&](Element y) { out.insert(product ? ring.mul(x, y) : ring.add(x, y)); });
    });
    return out;
}

} // namespace

IdealApproximator::IdealApproximator(const FiniteRing& ring, Ideal ideal) : ideal_(std::move(ideal)) {
    require_ideal(ring, ideal_);
    cosets_.reserve(ring.size());
    for (Element x = 0; x < ring.size(); ++x) cosets_.push_back(coset(ring, ideal_, x));
}

void IdealApproximator::check_subset(const ElementSet& x) const {
    if (x.universe_size() != cosets_.size())
        throw Error(ErrorKind::IndexOutOfBounds, "subset drawn from a universe of the wrong size");
}

ElementSet IdealApproximator::upper(const ElementSet& x) const {
    check_subset(x);
    ElementSet out(cosets_.size());
    for (Element e = 0; e < cosets_.size(); ++e)
        if (cosets_[e].intersects(x)) out.insert(e);
    return out;
}

ElementSet IdealApproximator::lower(const ElementSet& x) const {
    check_subset(x);
    ElementSet out(cosets_.size());
    for (Element e = 0; e < cosets_.size(); ++e)
        if (cosets_[e].is_subset_of(x)) out.insert(e);
    return out;
}

RoughApproximation IdealApproximator::apr(const ElementSet& x) const {
    ElementSet lo = lower(x);
    ElementSet up = upper(x);
    ElementSet bd = up - lo;
    return RoughApproximation{x, ideal_, lo, up, bd, !bd.empty()};
}

ElementSet upper_wrt(const FiniteRing& ring, const Ideal& ideal, const ElementSet& x) {
    return IdealApproximator(ring, ideal).upper(x);
}

ElementSet lower_wrt(const FiniteRing& ring, const Ideal& ideal, const ElementSet& x) {
    return IdealApproximator(ring, ideal).lower(x);
}

RoughApproximation apr(const FiniteRing& ring, const Ideal& ideal, const ElementSet& x) {
    return IdealApproximator(ring, ideal).apr(x);
}

ElementSet set_sum(const FiniteRing& ring, const ElementSet& a, const ElementSet& b, SumMode mode) {
    check_operands(ring, a, b);
    ElementSet s = pairwise(ring, a, b, false);
    if (mode == SumMode::Pairwise) return s;
    while (true) {
        const ElementSet next = s | pairwise(ring, s, s, false);
        if (next == s) return s;
        s = next;
    }
}

ElementSet set_product(const FiniteRing& ring, const ElementSet& a, const ElementSet& b) {
    check_operands(ring, a, b);
    const ElementSet products = pairwise(ring, a, b, true);
    ElementSet s = products;
    while (true) {
        const ElementSet next = s | pairwise(ring, s, products, false);
        if (next == s) return s;
        s = next;
    }
}

} // namespace roughring
