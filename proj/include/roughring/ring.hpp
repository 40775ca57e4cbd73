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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "roughring/element_set.hpp"

namespace roughring {

/// Row-major n x n operation table.
using OpTable = std::vector<std::vector<Element>>;

/**
 * A finite commutative ring with identity, given by its Cayley tables.
 *
 * Elements are the indices 0..n-1. Every instance has passed full axiom
 * validation, so callers can rely on the ring laws. The zero ring (n = 1,
 * zero = one) is admitted; `is_zero_ring()` flags it.
 */
class FiniteRing {
public:
    /**
     * Validates the tables against the commutative-ring-with-unity axioms.
     * Throws BadTableShape for malformed input, or one of NotAbelianGroup,
     * MulNotCommutative, MulNotAssociative, NoUnity, NotDistributive with a
     * violating triple in the message.
     */
    static FiniteRing from_tables(std::size_t n, const OpTable& add, const OpTable& mul, Element zero,
                                  Element one, std::string name = "",
                                  std::vector<std::string> labels = {});

    std::size_t size() const noexcept { return n_; }
    Element zero() const noexcept { return zero_; }
    Element one() const noexcept { return one_; }
    const std::string& name() const noexcept { return name_; }
    bool is_zero_ring() const noexcept { return n_ == 1; }

    Element add(Element a, Element b) const {
        check(a);
        check(b);
        return add_[a * n_ + b];
    }
    Element mul(Element a, Element b) const {
        check(a);
        check(b);
        return mul_[a * n_ + b];
    }
    Element neg(Element a) const {
        check(a);
        return neg_[a];
    }
    Element sub(Element a, Element b) const { return add(a, neg(b)); }

    std::vector<Element> elements() const;

    /// Display label: the residue for Z_n, a tuple such as `(1,0)` for products.
    const std::string& label(Element e) const {
        check(e);
        return labels_[e];
    }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    /// True when labels carry more than the bare index (product rings).
    bool has_tuple_labels() const;

    OpTable add_table() const { return unflatten(add_); }
    OpTable mul_table() const { return unflatten(mul_); }

    ElementSet empty_set() const { return ElementSet(n_); }
    ElementSet all() const { return ElementSet::full(n_); }

    /// Structural equality of the tables and distinguished elements.
    friend bool operator==(const FiniteRing& a, const FiniteRing& b) {
        return a.n_ == b.n_ && a.zero_ == b.zero_ && a.one_ == b.one_ && a.add_ == b.add_ &&
               a.mul_ == b.mul_;
    }

private:
    FiniteRing() = default;

    void check(Element e) const {
        if (e >= n_)
            throw Error(ErrorKind::IndexOutOfBounds, "element " + std::to_string(e) +
                                                         " outside ring of order " +
                                                         std::to_string(n_));
    }
    OpTable unflatten(const std::vector<std::uint8_t>& flat) const;

    std::size_t n_ = 0;
    Element zero_ = 0;
    Element one_ = 0;
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<std::uint8_t> add_;
    std::vector<std::uint8_t> mul_;
    std::vector<std::uint8_t> neg_;
};

/// Integers modulo n, 1 <= n <= 64.
FiniteRing make_zn(std::size_t n);

/// Componentwise product; element (i, j) has index i * |b| + j.
FiniteRing direct_product(const FiniteRing& a, const FiniteRing& b);

/**
 * Parses a ring descriptor: `Z<n>`, products such as `Z4xZ6` (left to
 * right), or `table:<path>` naming a JSON table file.
 */
FiniteRing parse_ring_spec(std::string_view spec);

/// Table file: JSON object with fields n, zero, one, add, mul (and optional name).
FiniteRing load_ring_table(const std::string& path);
std::string ring_table_json(const FiniteRing& ring);

} // namespace roughring
