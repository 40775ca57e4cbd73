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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "roughring/approx_space.hpp"
#include "roughring/element_set.hpp"
#include "roughring/ring.hpp"

namespace roughring {

/// Which ideal axiom a candidate subset breaks, and the elements showing it.
struct IdealViolation {
    enum class Axiom { ContainsZero, ClosedUnderAddition, ClosedUnderNegation, AbsorbsMultiplication };
    Axiom axiom;
    std::vector<Element> elements;

    std::string describe() const;
};

/// nullopt when `s` is an ideal of `ring`.
std::optional<IdealViolation> find_ideal_violation(const FiniteRing& ring, const ElementSet& s);

inline bool is_ideal(const FiniteRing& ring, const ElementSet& s) {
    return !find_ideal_violation(ring, s).has_value();
}

/**
 * A subset of a ring that satisfies the ideal axioms. Only obtainable
 * through validating factories, so holding one means the check passed for
 * a ring of this order. Generators, when present, record how it was built.
 */
class Ideal {
public:
    /// Throws NotAnIdeal naming the broken axiom.
    static Ideal from_set(const FiniteRing& ring, const ElementSet& members);

    const ElementSet& members() const noexcept { return members_; }
    const std::optional<std::vector<Element>>& generators() const noexcept { return generators_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool contains(Element e) const noexcept { return members_.contains(e); }

    friend bool operator==(const Ideal& a, const Ideal& b) { return a.members_ == b.members_; }

private:
    Ideal(ElementSet members, std::optional<std::vector<Element>> generators)
        : members_(members), generators_(std::move(generators)) {}

    friend Ideal generated_ideal(const FiniteRing&, const std::vector<Element>&);
    friend Ideal principal_ideal(const FiniteRing&, Element);

    ElementSet members_;
    std::optional<std::vector<Element>> generators_;
};

struct IdealClassification {
    bool is_proper = false;
    bool is_maximal = false;
    bool is_prime = false;
    bool is_principal = false;
    /// Smallest generator when principal.
    std::optional<Element> principal_generator;
};

/// Smallest ideal containing `generators`: additive closure of {r*s}.
Ideal generated_ideal(const FiniteRing& ring, const std::vector<Element>& generators);

/// {r*s : r in ring}.
Ideal principal_ideal(const FiniteRing& ring, Element s);

/// Every ideal exactly once, in canonical order (cardinality, then members).
std::vector<Ideal> all_ideals(const FiniteRing& ring);

/// Maximal ideals, in canonical order.
std::vector<Ideal> maximal_ideals(const FiniteRing& ring);

/// True iff I is proper and adjoining any outside element generates the ring.
bool is_maximal(const FiniteRing& ring, const Ideal& ideal);

bool is_prime(const FiniteRing& ring, const Ideal& ideal);

IdealClassification classify(const FiniteRing& ring, const Ideal& ideal);

/// x + I.
ElementSet coset(const FiniteRing& ring, const Ideal& ideal, Element x);

/// Partition of the ring into cosets of I, ordered by smallest representative.
ApproximationSpace coset_partition(const FiniteRing& ring, const Ideal& ideal);

/**
 * Parses an ideal descriptor against a ring: `{0,3,6,9}`, `principal(s)`,
 * `gen(s1,s2,...)` or `maximal#k` (1-based, canonical order).
 */
Ideal parse_ideal_spec(const FiniteRing& ring, std::string_view spec);

/// Throws NotAnIdeal unless `ideal` is an ideal of `ring`.
void require_ideal(const FiniteRing& ring, const Ideal& ideal);

} // namespace roughring
