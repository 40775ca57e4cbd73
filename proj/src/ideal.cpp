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

#include "roughring/ideal.hpp"

#include <algorithm>
#include <charconv>

namespace roughring {

namespace {

ElementSet pairwise_sums(const FiniteRing& ring, const ElementSet& a, const ElementSet& b) {
    ElementSet out = ring.empty_set();
    a.for_each([&](Element x) { b.for_each([&](Element y) { out.insert(ring.add(x, y)); }); });
    return out;
}

// Stabilises after at most |R| rounds since each round strictly grows the set.
ElementSet additive_closure(const FiniteRing& ring, ElementSet s) {
    while (true) {
        const ElementSet next = s | pairwise_sums(ring, s, s);
        if (next == s) return s;
        s = next;
    }
}

std::vector<Element> parse_index_list(std::string_view body, std::string_view spec) {
    std::vector<Element> out;
    while (true) {
        auto comma = body.find(',');
        std::string_view tok = body.substr(0, comma);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
            throw Error(ErrorKind::ParseError, "bad element '" + std::string(tok) +
                                                   "' in ideal spec '" + std::string(spec) + "'");
        out.push_back(v);
        if (comma == std::string_view::npos) return out;
        body.remove_prefix(comma + 1);
    }
}

} // namespace

std::string IdealViolation::describe() const {
    auto e = [&](std::size_t i) { return std::to_string(elements.at(i)); };
    switch (axiom) {
    case Axiom::ContainsZero:
        return "zero is not a member";
    case Axiom::ClosedUnderAddition:
        return "not closed under addition: " + e(0) + "+" + e(1) + "=" + e(2) + " is not a member";
    case Axiom::ClosedUnderNegation:
        return "not closed under negation: -" + e(0) + "=" + e(1) + " is not a member";
    case Axiom::AbsorbsMultiplication:
        return "does not absorb multiplication: " + e(0) + "*" + e(1) + "=" + e(2) +
               " is not a member";
    }
    return "unknown violation";
}

std::optional<IdealViolation> find_ideal_violation(const FiniteRing& ring, const ElementSet& s) {
    using Axiom = IdealViolation::Axiom;
    if (s.universe_size() != ring.size())
        throw Error(ErrorKind::IndexOutOfBounds, "subset drawn from a universe of the wrong size");
    if (!s.contains(ring.zero())) return IdealViolation{Axiom::ContainsZero, {ring.zero()}};

    const auto members = s.members();
    for (Element a : members)
        for (Element b : members)
            if (!s.contains(ring.add(a, b)))
                return IdealViolation{Axiom::ClosedUnderAddition, {a, b, ring.add(a, b)}};
    for (Element a : members)
        if (!s.contains(ring.neg(a)))
            return IdealViolation{Axiom::ClosedUnderNegation, {a, ring.neg(a)}};
    for (Element r = 0; r < ring.size(); ++r)
        for (Element a : members)
            if (!s.contains(ring.mul(r, a)))
                return IdealViolation{Axiom::AbsorbsMultiplication, {r, a, ring.mul(r, a)}};
    return std::nullopt;
}

Ideal Ideal::from_set(const FiniteRing& ring, const ElementSet& members) {
    if (auto v = find_ideal_violation(ring, members))
        throw Error(ErrorKind::NotAnIdeal, members.to_string() + " " + v->describe());
    return Ideal(members, std::nullopt);
}

void require_ideal(const FiniteRing& ring, const Ideal& ideal) {
    if (ideal.members().universe_size() != ring.size())
        throw Error(ErrorKind::NotAnIdeal, "ideal belongs to a ring of a different order");
    if (auto v = find_ideal_violation(ring, ideal.members()))
        throw Error(ErrorKind::NotAnIdeal, ideal.members().to_string() + " " + v->describe());
}

Ideal generated_ideal(const FiniteRing& ring, const std::vector<Element>& generators) {
    if (generators.empty()) throw Error(ErrorKind::EmptyGeneratorSet, "no generators given");
    ElementSet products = ring.empty_set();
    for (Element s : generators)
        for (Element r = 0; r < ring.size(); ++r) products.insert(ring.mul(r, s));
    return Ideal(additive_closure(ring, products), generators);
}

Ideal principal_ideal(const FiniteRing& ring, Element s) {
    ElementSet out = ring.empty_set();
    for (Element r = 0; r < ring.size(); ++r) out.insert(ring.mul(r, s));
    return Ideal(out, std::vector<Element>{s});
}

std::vector<Ideal> all_ideals(const FiniteRing& ring) {
    std::vector<Ideal> found;
    auto known = [&](const ElementSet& m) {
        return std::any_of(found.begin(), found.end(),
                           [&](const Ideal& i) { return i.members() == m; });
    };
    for (Element s = 0; s < ring.size(); ++s) {
        Ideal p = principal_ideal(ring, s);
        if (!known(p.members())) found.push_back(std::move(p));
    }

    // Close under I + J until no new ideal appears.
    for (std::size_t i = 0; i < found.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            std::vector<Element> gens = *found[i].generators();
            const auto& more = *found[j].generators();
            gens.insert(gens.end(), more.begin(), more.end());
            std::sort(gens.begin(), gens.end());
            gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
            Ideal sum = generated_ideal(ring, gens);
            if (!known(sum.members())) found.push_back(std::move(sum));
        }
    }

    std::sort(found.begin(), found.end(), [](const Ideal& a, const Ideal& b) {
        return canonical_less(a.members(), b.members());
    });
    return found;
}

std::vector<Ideal> maximal_ideals(const FiniteRing& ring) {
    std::vector<Ideal> out;
    for (Ideal& i : all_ideals(ring))
        if (is_maximal(ring, i)) out.push_back(std::move(i));
    return out;
}

bool is_maximal(const FiniteRing& ring, const Ideal& ideal) {
    require_ideal(ring, ideal);
    if (ideal.members() == ring.all()) return false;
    const auto base = ideal.members().members();
    for (Element x = 0; x < ring.size(); ++x) {
        if (ideal.contains(x)) continue;
        std::vector<Element> gens = base;
        gens.push_back(x);
        if (generated_ideal(ring, gens).members() != ring.all()) return false;
    }
    return true;
}

bool is_prime(const FiniteRing& ring, const Ideal& ideal) {
    require_ideal(ring, ideal);
    if (ideal.members() == ring.all()) return false;
    for (Element a = 0; a < ring.size(); ++a)
        for (Element b = a; b < ring.size(); ++b)
            if (ideal.contains(ring.mul(a, b)) && !ideal.contains(a) && !ideal.contains(b))
                return false;
    return true;
}

IdealClassification classify(const FiniteRing& ring, const Ideal& ideal) {
    IdealClassification c;
    c.is_proper = ideal.members() != ring.all();
    c.is_maximal = is_maximal(ring, ideal);
    c.is_prime = is_prime(ring, ideal);
    for (Element s = 0; s < ring.size(); ++s)
        if (principal_ideal(ring, s) == ideal) {
            c.is_principal = true;
            c.principal_generator = s;
            break;
        }
    return c;
}

ElementSet coset(const FiniteRing& ring, const Ideal& ideal, Element x) {
    ElementSet out = ring.empty_set();
    ideal.members().for_each([&](Element i) { out.insert(ring.add(x, i)); });
    return out;
}

ApproximationSpace coset_partition(const FiniteRing& ring, const Ideal& ideal) {
    require_ideal(ring, ideal);
    std::vector<ElementSet> blocks;
    ElementSet covered = ring.empty_set();
    for (Element x = 0; x < ring.size(); ++x) {
        if (covered.contains(x)) continue;
        blocks.push_back(coset(ring, ideal, x));
        covered |= blocks.back();
    }
    return ApproximationSpace(std::move(blocks), ring.labels());
}

Ideal parse_ideal_spec(const FiniteRing& ring, std::string_view spec) {
    auto call_body = [&](std::string_view prefix) -> std::optional<std::string_view> {
        if (spec.substr(0, prefix.size()) != prefix || spec.back() != ')') return std::nullopt;
        return spec.substr(prefix.size(), spec.size() - prefix.size() - 1);
    };
    auto check_bounds = [&](const std::vector<Element>& elems) {
        for (Element e : elems)
            if (e >= ring.size())
                throw Error(ErrorKind::IndexOutOfBounds, "element " + std::to_string(e) +
                                                             " outside " + ring.name());
    };

    if (spec.empty()) throw Error(ErrorKind::ParseError, "empty ideal spec");
    if (spec.front() == '{') return Ideal::from_set(ring, ElementSet::parse(spec, ring.size()));
    if (auto body = call_body("principal(")) {
        auto elems = parse_index_list(*body, spec);
        if (elems.size() != 1)
            throw Error(ErrorKind::ParseError, "principal(...) takes exactly one element");
        check_bounds(elems);
        return principal_ideal(ring, elems.front());
    }
    if (auto body = call_body("gen(")) {
        auto elems = parse_index_list(*body, spec);
        check_bounds(elems);
        return generated_ideal(ring, elems);
    }
    constexpr std::string_view maximal_prefix = "maximal#";
    if (spec.substr(0, maximal_prefix.size()) == maximal_prefix) {
        auto ks = parse_index_list(spec.substr(maximal_prefix.size()), spec);
        if (ks.size() != 1) throw Error(ErrorKind::ParseError, "maximal#k takes one index");
        const std::size_t k = ks.front();
        auto maximals = maximal_ideals(ring);
        if (k < 1 || k > maximals.size())
            throw Error(ErrorKind::IndexOutOfBounds,
                        ring.name() + " has " + std::to_string(maximals.size()) +
                            " maximal ideal(s); maximal#" + std::to_string(k) + " does not exist");
        return maximals[k - 1];
    }
    throw Error(ErrorKind::ParseError, "unrecognised ideal spec '" + std::string(spec) + "'");
}

} // namespace roughring
