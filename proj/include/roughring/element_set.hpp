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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "roughring/error.hpp"

namespace roughring {

/// Index of an element within a fixed universe enumeration.
using Element = std::size_t;

/// Hard cap on universe size: a subset must fit one machine word.
inline constexpr std::size_t kMaxUniverse = 64;

/**
 * A subset of a universe {0, ..., size-1}, stored as a 64-bit mask.
 *
 * The universe size travels with the set so that complements are well
 * defined and mixing sets of different universes is caught early.
 */
class ElementSet {
public:
    ElementSet() = default;

    explicit ElementSet(std::size_t universe_size) : universe_(universe_size) {
        check_universe(universe_size);
    }

    ElementSet(std::size_t universe_size, std::initializer_list<Element> members)
        : ElementSet(universe_size) {
        for (Element e : members) insert(e);
    }

    static ElementSet from_members(std::size_t universe_size, const std::vector<Element>& members) {
        ElementSet s(universe_size);
        for (Element e : members) s.insert(e);
        return s;
    }

    /// Bits above `universe_size` are rejected.
    static ElementSet from_bits(std::size_t universe_size, std::uint64_t bits) {
        ElementSet s(universe_size);
        if ((bits & ~full_mask(universe_size)) != 0)
            throw Error(ErrorKind::IndexOutOfBounds, "bit pattern exceeds universe of size " +
                                                         std::to_string(universe_size));
        s.bits_ = bits;
        return s;
    }

    static ElementSet full(std::size_t universe_size) {
        ElementSet s(universe_size);
        s.bits_ = full_mask(universe_size);
        return s;
    }

    static constexpr std::uint64_t full_mask(std::size_t universe_size) noexcept {
        return universe_size >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << universe_size) - 1);
    }

    std::size_t universe_size() const noexcept { return universe_; }
    std::uint64_t bits() const noexcept { return bits_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
    bool empty() const noexcept { return bits_ == 0; }

    bool contains(Element e) const noexcept { return e < universe_ && ((bits_ >> e) & 1U) != 0; }

    void insert(Element e) {
        check_index(e);
        bits_ |= std::uint64_t{1} << e;
    }

    void erase(Element e) {
        check_index(e);
        bits_ &= ~(std::uint64_t{1} << e);
    }

    bool is_subset_of(const ElementSet& other) const {
        check_same(other);
        return (bits_ & ~other.bits_) == 0;
    }

    bool intersects(const ElementSet& other) const {
        check_same(other);
        return (bits_ & other.bits_) != 0;
    }

    ElementSet complement() const {
        ElementSet s(universe_);
        s.bits_ = ~bits_ & full_mask(universe_);
        return s;
    }

    ElementSet& operator|=(const ElementSet& o) { check_same(o); bits_ |= o.bits_; return *this; }
    ElementSet& operator&=(const ElementSet& o) { check_same(o); bits_ &= o.bits_; return *this; }
    ElementSet& operator-=(const ElementSet& o) { check_same(o); bits_ &= ~o.bits_; return *this; }

    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

    friend bool operator==(const ElementSet&, const ElementSet&) = default;

    /// Members in increasing order.
    std::vector<Element> members() const {
        std::vector<Element> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(static_cast<Element>(std::countr_zero(b)));
        return out;
    }

    /// Calls `f(e)` for each member in increasing order.
    template <typename F>
    void for_each(F&& f) const {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            f(static_cast<Element>(std::countr_zero(b)));
    }

    /// Literal form `{e1,e2,...}`; `{}` for the empty set.
    std::string to_string() const;

    /**
     * Parses `{e1,e2,...}` (whitespace-insensitive) against a universe.
     * Throws ParseError on malformed text and IndexOutOfBounds for members
     * outside the universe.
     */
    static ElementSet parse(std::string_view text, std::size_t universe_size);

private:
    static void check_universe(std::size_t n) {
        if (n > kMaxUniverse)
            throw Error(ErrorKind::UniverseTooLarge,
                        "universe of size " + std::to_string(n) + " exceeds cap of 64");
    }

    void check_index(Element e) const {
        if (e >= universe_)
            throw Error(ErrorKind::IndexOutOfBounds, "element " + std::to_string(e) +
                                                         " outside universe of size " +
                                                         std::to_string(universe_));
    }

    void check_same(const ElementSet& o) const {
        if (o.universe_ != universe_)
            throw Error(ErrorKind::IndexOutOfBounds, "sets drawn from different universes");
    }

    std::uint64_t bits_ = 0;
    std::size_t universe_ = 0;
};

/// Canonical order: cardinality first, then lexicographic on sorted members.
bool canonical_less(const ElementSet& a, const ElementSet& b);

} // namespace roughring
