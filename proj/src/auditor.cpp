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

#include "roughring/auditor.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <tuple>

#include <nlohmann/json.hpp>

namespace roughring {

std::string_view to_string(PropertyGroup g) {
    switch (g) {
    case PropertyGroup::SpaceProps: return "SpaceProps";
    case PropertyGroup::Prop3_1: return "Prop3_1";
    case PropertyGroup::Prop4_1: return "Prop4_1";
    case PropertyGroup::Prop4_2: return "Prop4_2";
    }
    return "?";
}

PropertyGroup parse_property_group(std::string_view text) {
    if (text == "space" || text == "SpaceProps") return PropertyGroup::SpaceProps;
    if (text == "3-1" || text == "3.1" || text == "Prop3_1") return PropertyGroup::Prop3_1;
    if (text == "4-1" || text == "4.1" || text == "Prop4_1") return PropertyGroup::Prop4_1;
    if (text == "4-2" || text == "4.2" || text == "Prop4_2") return PropertyGroup::Prop4_2;
    throw Error(ErrorKind::ParseError, "unknown property group '" + std::string(text) +
                                           "' (expected space, 3-1, 4-1 or 4-2)");
}

int item_count(PropertyGroup g) {
    switch (g) {
    case PropertyGroup::SpaceProps: return 10;
    case PropertyGroup::Prop3_1: return 12;
    case PropertyGroup::Prop4_1: return 13;
    case PropertyGroup::Prop4_2: return 4;
    }
    return 0;
}

PropertyId::PropertyId(PropertyGroup g, int i) : group(g), item(i) {
    if (i < 1 || i > item_count(g))
        throw Error(ErrorKind::IndexOutOfBounds, std::string(to_string(g)) + " has no item " +
                                                     std::to_string(i));
}

std::string_view to_string(Clause c) {
    switch (c) {
    case Clause::AsStated: return "as-stated";
    case Clause::LhsSubsetRhs: return "lhs-subset-rhs";
    case Clause::LhsSupersetRhs: return "lhs-superset-rhs";
    }
    return "?";
}

std::string_view to_string(Verdict v) {
    return v == Verdict::HoldsOnAllTested ? "holds-on-all-tested" : "counterexample";
}

bool AuditReport::has_counterexample() const {
    return std::any_of(entries.begin(), entries.end(),
                       [](const AuditEntry& e) { return e.verdict == Verdict::Counterexample; });
}

const AuditEntry* AuditReport::find(PropertyGroup g, int item, Clause c) const {
    for (const AuditEntry& e : entries)
        if (e.id.group == g && e.id.item == item && e.clause == c) return &e;
    return nullptr;
}

namespace {

constexpr const char* kCanonical = "canonical reading";

struct Outcome {
    bool ok;
    ElementSet lhs;
    ElementSet rhs;
};

Outcome equal(const ElementSet& l, const ElementSet& r) { return {l == r, l, r}; }
Outcome included(const ElementSet& l, const ElementSet& r) { return {l.is_subset_of(r), l, r}; }
Outcome includes(const ElementSet& l, const ElementSet& r) { return {r.is_subset_of(l), l, r}; }

// a = b = c, reporting the first side that disagrees.
Outcome chain(const ElementSet& a, const ElementSet& b, const ElementSet& c) {
    if (a != b) return {false, a, b};
    return equal(b, c);
}

// lo ⊆ x ⊆ up
Outcome sandwich(const ElementSet& lo, const ElementSet& x, const ElementSet& up) {
    if (!lo.is_subset_of(x)) return {false, lo, x};
    return included(x, up);
}

enum class Arity { Nullary, Unary, Binary, PerInput };

struct ClauseDef {
    PropertyId id;
    Clause clause;
    Arity arity;
    std::string note;
    std::function<Outcome(const ElementSet&, const ElementSet&)> eval;
    bool nonempty_only = false;
    std::vector<ElementSet> inputs; // PerInput only
};

// Lower/upper with memoisation on small universes and an optional oracle
// cross-check of every distinct subset evaluated.
class Approximations {
public:
    using Op = std::function<ElementSet(const ElementSet&)>;

    Approximations(std::size_t n, Op lower, Op upper, Op oracle_lower = {}, Op oracle_upper = {})
        : n_(n), lower_(std::move(lower)), upper_(std::move(upper)),
          oracle_lower_(std::move(oracle_lower)), oracle_upper_(std::move(oracle_upper)) {
        if (n_ <= kCacheLimit) cache_.resize(std::size_t{1} << n_);
    }

    std::size_t size() const { return n_; }
    ElementSet lower(const ElementSet& x) { return get(x).lower; }
    ElementSet upper(const ElementSet& x) { return get(x).upper; }

    std::uint64_t checks = 0;
    std::uint64_t mismatches = 0;

private:
    static constexpr std::size_t kCacheLimit = 16;

    struct Entry {
        ElementSet lower;
        ElementSet upper;
        bool ready = false;
    };

    Entry compute(const ElementSet& x) {
        Entry e{lower_(x), upper_(x), true};
        if (oracle_lower_) {
            ++checks;
            if (oracle_lower_(x) != e.lower || oracle_upper_(x) != e.upper) ++mismatches;
        }
        return e;
    }

    Entry get(const ElementSet& x) {
        if (cache_.empty()) return compute(x);
        Entry& slot = cache_[x.bits()];
        if (!slot.ready) slot = compute(x);
        return slot;
    }

    std::size_t n_;
    Op lower_, upper_, oracle_lower_, oracle_upper_;
    std::vector<Entry> cache_;
};

ElementSet complement(const ElementSet& x) { return x.complement(); }

// Items 1-12 shared by Prop3_1 and Prop4_1. The two groups print items 9
// and 10 in opposite order.
std::vector<ClauseDef> pawlak_family(PropertyGroup group, Approximations& ap) {
    const std::size_t n = ap.size();
    const ElementSet none(n), all = ElementSet::full(n);
    auto id = [&](int item) { return PropertyId(group, item); };
    std::vector<ClauseDef> out;
    auto add = [&](int item, Arity arity, std::string note, auto fn) {
        out.push_back(ClauseDef{id(item), Clause::AsStated, arity, std::move(note), fn});
    };
    using S = const ElementSet&;

    add(1, Arity::Unary, "", [&ap](S a, S) { return sandwich(ap.lower(a), a, ap.upper(a)); });
    add(2, Arity::Nullary, "", [&ap, none](S, S) { return chain(ap.lower(none), none, ap.upper(none)); });
    add(3, Arity::Nullary, "", [&ap, all](S, S) { return chain(ap.lower(all), all, ap.upper(all)); });
    add(4, Arity::Binary, "", [&ap](S a, S b) { return equal(ap.lower(a & b), ap.lower(a) & ap.lower(b)); });
    add(5, Arity::Binary, "", [&ap](S a, S b) { return equal(ap.upper(a | b), ap.upper(a) | ap.upper(b)); });
    add(6, Arity::Binary, "premise A subset of B; vacuous pairs counted", [&ap](S a, S b) -> Outcome {
        if (!a.is_subset_of(b)) return {true, a, b};
        const ElementSet la = ap.lower(a), lb = ap.lower(b);
        if (!la.is_subset_of(lb)) return {false, la, lb};
        return included(ap.upper(a), ap.upper(b));
    });
    add(7, Arity::Binary, "", [&ap](S a, S b) { return includes(ap.lower(a | b), ap.lower(a) | ap.lower(b)); });
    add(8, Arity::Binary, "", [&ap](S a, S b) { return included(ap.upper(a & b), ap.upper(a) & ap.upper(b)); });

    auto lower_dual = [&ap](S a, S) { return equal(ap.lower(a), complement(ap.upper(complement(a)))); };
    auto upper_dual = [&ap](S a, S) { return equal(ap.upper(a), complement(ap.lower(complement(a)))); };
    if (group == PropertyGroup::Prop3_1) {
        add(9, Arity::Unary, "", lower_dual);
        add(10, Arity::Unary, "", upper_dual);
    } else {
        add(9, Arity::Unary, "", upper_dual);
        add(10, Arity::Unary, kCanonical, lower_dual);
    }
    add(11, Arity::Unary, kCanonical, [&ap](S a, S) {
        const ElementSet lo = ap.lower(a);
        return chain(ap.lower(lo), ap.upper(lo), lo);
    });
    add(12, Arity::Unary, kCanonical, [&ap](S a, S) {
        const ElementSet up = ap.upper(a);
        return chain(ap.upper(up), ap.lower(up), up);
    });
    return out;
}

std::vector<ClauseDef> space_family(Approximations& ap) {
    const std::size_t n = ap.size();
    const ElementSet none(n), all = ElementSet::full(n);
    std::vector<ClauseDef> out;
    auto add = [&](int item, Arity arity, std::string note, auto fn) {
        out.push_back(ClauseDef{PropertyId(PropertyGroup::SpaceProps, item), Clause::AsStated, arity,
                                std::move(note), fn});
    };
    using S = const ElementSet&;

    add(1, Arity::Unary, "", [&ap](S a, S) { return sandwich(ap.lower(a), a, ap.upper(a)); });
    add(2, Arity::Nullary, "", [&ap, none, all](S, S) {
        Outcome o = chain(ap.lower(none), ap.upper(none), none);
        return o.ok ? chain(ap.lower(all), ap.upper(all), all) : o;
    });
    add(3, Arity::Binary, "", [&ap](S a, S b) { return includes(ap.lower(a | b), ap.lower(a) | ap.lower(b)); });
    add(4, Arity::Binary, "", [&ap](S a, S b) { return equal(ap.lower(a & b), ap.lower(a) & ap.lower(b)); });
    add(5, Arity::Binary, "", [&ap](S a, S b) { return equal(ap.upper(a | b), ap.upper(a) | ap.upper(b)); });
    add(6, Arity::Binary, "", [&ap](S a, S b) { return included(ap.upper(a & b), ap.upper(a) & ap.upper(b)); });
    add(7, Arity::Unary, kCanonical, [&ap](S a, S) {
        return equal(ap.upper(complement(a)), complement(ap.lower(a)));
    });
    add(8, Arity::Unary, "", [&ap](S a, S) {
        return equal(ap.lower(complement(a)), complement(ap.upper(a)));
    });
    add(9, Arity::Unary, kCanonical, [&ap](S a, S) {
        const ElementSet lo = ap.lower(a);
        return chain(ap.lower(lo), ap.upper(lo), lo);
    });
    add(10, Arity::Unary, kCanonical, [&ap](S a, S) {
        const ElementSet up = ap.upper(a);
        return chain(ap.upper(up), ap.lower(up), up);
    });
    return out;
}

ClauseDef coset_exactness(Approximations& ap, std::vector<ElementSet> cosets) {
    using S = const ElementSet&;
    ClauseDef c{PropertyId(PropertyGroup::Prop4_1, 13), Clause::AsStated, Arity::PerInput,
                "one instance per element x; witness A is x+I",
                [&ap](S x, S) { return chain(ap.lower(x), ap.upper(x), x); }};
    c.inputs = std::move(cosets);
    return c;
}

// Sum/product where an empty operand yields the empty set (no finite sums exist).
ElementSet total_sum(const FiniteRing& ring, const ElementSet& a, const ElementSet& b, SumMode mode) {
    return (a.empty() || b.empty()) ? ring.empty_set() : set_sum(ring, a, b, mode);
}

ElementSet total_product(const FiniteRing& ring, const ElementSet& a, const ElementSet& b) {
    return (a.empty() || b.empty()) ? ring.empty_set() : set_product(ring, a, b);
}

std::vector<ClauseDef> sum_product_family(const FiniteRing& ring, Approximations& ap, SumMode mode) {
    using S = const ElementSet&;
    std::vector<ClauseDef> out;
    auto add = [&](int item, Clause clause, std::string note, auto fn) {
        ClauseDef c{PropertyId(PropertyGroup::Prop4_2, item), clause, Arity::Binary, std::move(note), fn};
        c.nonempty_only = true;
        out.push_back(std::move(c));
    };
    const std::string sum_note =
        mode == SumMode::Pairwise ? "A+B read as pairwise sums" : "A+B read as additive closure";

    auto upper_sum = [&ring, &ap, mode](S a, S b) {
        return std::pair(total_sum(ring, ap.upper(a), ap.upper(b), mode),
                         ap.upper(set_sum(ring, a, b, mode)));
    };
    auto upper_product = [&ring, &ap](S a, S b) {
        return std::pair(total_product(ring, ap.upper(a), ap.upper(b)),
                         ap.upper(set_product(ring, a, b)));
    };

    add(1, Clause::AsStated, sum_note, [upper_sum](S a, S b) { auto [l, r] = upper_sum(a, b); return equal(l, r); });
    add(1, Clause::LhsSubsetRhs, sum_note, [upper_sum](S a, S b) { auto [l, r] = upper_sum(a, b); return included(l, r); });
    add(1, Clause::LhsSupersetRhs, sum_note, [upper_sum](S a, S b) { auto [l, r] = upper_sum(a, b); return includes(l, r); });

    const std::string product_note = "lhs = upper(A)*upper(B), rhs = upper(A*B)";
    add(2, Clause::AsStated, product_note, [upper_product](S a, S b) { auto [l, r] = upper_product(a, b); return equal(l, r); });
    add(2, Clause::LhsSubsetRhs, product_note, [upper_product](S a, S b) { auto [l, r] = upper_product(a, b); return included(l, r); });
    add(2, Clause::LhsSupersetRhs, product_note, [upper_product](S a, S b) { auto [l, r] = upper_product(a, b); return includes(l, r); });

    add(3, Clause::AsStated, sum_note + "; empty lower approximation gives an empty sum",
        [&ring, &ap, mode](S a, S b) {
            return included(total_sum(ring, ap.lower(a), ap.lower(b), mode),
                            ap.lower(set_sum(ring, a, b, mode)));
        });
    add(4, Clause::AsStated, "lhs = lower(A)*lower(B) (empty factor gives empty product), rhs = lower(A*B)",
        [&ring, &ap](S a, S b) {
            return included(total_product(ring, ap.lower(a), ap.lower(b)),
                            ap.lower(set_product(ring, a, b)));
        });
    return out;
}

struct WitnessKey {
    std::size_t total;
    std::uint64_t a;
    std::uint64_t b;
    friend bool operator<(const WitnessKey& x, const WitnessKey& y) {
        return std::tie(x.total, x.a, x.b) < std::tie(y.total, y.a, y.b);
    }
};

// Decides which instance families are exhaustive and pre-draws the samples,
// unary first and then pairs, from one seeded generator.
class Runner {
public:
    Runner(std::size_t n, const Strategy& s) : n_(n) {
        if (s.mode == Strategy::Mode::Randomized && s.sample_count == 0)
            throw Error(ErrorKind::SizeOutOfRange, "randomized mode needs sample_count >= 1");
        if (s.mode == Strategy::Mode::Exhaustive) {
            if (n > s.max_universe_for_exhaustive_unary)
                throw Error(ErrorKind::UniverseTooLargeForExhaustive,
                            "universe of size " + std::to_string(n) + " exceeds exhaustive cap " +
                                std::to_string(s.max_universe_for_exhaustive_unary));
            unary_exhaustive_ = true;
            pairs_exhaustive_ = n <= s.max_universe_for_exhaustive;
        }
        std::mt19937_64 gen(s.seed);
        const std::uint64_t mask = ElementSet::full_mask(n);
        auto draw = [&] {
            while (true) {
                const std::uint64_t v = gen() & mask;
                if (v != 0) return ElementSet::from_bits(n, v);
            }
        };
        if (!unary_exhaustive_)
            for (std::uint64_t i = 0; i < s.sample_count; ++i) unary_samples_.push_back(draw());
        if (!pairs_exhaustive_)
            for (std::uint64_t i = 0; i < s.sample_count; ++i) {
                ElementSet a = draw();
                pair_samples_.emplace_back(a, draw());
            }
    }

    bool pairs_exhaustive() const { return pairs_exhaustive_; }
    bool unary_exhaustive() const { return unary_exhaustive_; }

    AuditEntry run(const ClauseDef& c) const {
        AuditEntry entry{c.id, c.clause};
        entry.note = c.note;
        std::optional<WitnessKey> best;
        const bool binary = c.arity == Arity::Binary;

        auto consider = [&](const ElementSet& a, const ElementSet& b) {
            ++entry.instances_tested;
            const Outcome o = c.eval(a, b);
            if (o.ok) return;
            const WitnessKey key{a.size() + (binary ? b.size() : 0), a.bits(), binary ? b.bits() : 0};
            if (best && !(key < *best)) return;
            best = key;
            Witness w{std::nullopt, std::nullopt, o.lhs, o.rhs};
            if (c.arity != Arity::Nullary) w.a = a;
            if (binary) w.b = b;
            entry.witness = w;
        };

        const ElementSet none(n_);
        const std::uint64_t limit = ElementSet::full_mask(n_);
        const std::uint64_t first = c.nonempty_only ? 1 : 0;
        switch (c.arity) {
        case Arity::Nullary:
            consider(none, none);
            break;
        case Arity::PerInput:
            for (const ElementSet& x : c.inputs) consider(x, none);
            break;
        case Arity::Unary:
            if (unary_exhaustive_) {
                for (std::uint64_t a = first;; ++a) {
                    consider(ElementSet::from_bits(n_, a), none);
                    if (a == limit) break;
                }
            } else {
                for (const ElementSet& a : unary_samples_) consider(a, none);
            }
            break;
        case Arity::Binary:
            if (pairs_exhaustive_) {
                for (std::uint64_t a = first;; ++a) {
                    const ElementSet sa = ElementSet::from_bits(n_, a);
                    for (std::uint64_t b = first;; ++b) {
                        consider(sa, ElementSet::from_bits(n_, b));
                        if (b == limit) break;
                    }
                    if (a == limit) break;
                }
            } else {
                for (const auto& [a, b] : pair_samples_) consider(a, b);
            }
            break;
        }
        if (entry.witness) entry.verdict = Verdict::Counterexample;
        return entry;
    }

private:
    std::size_t n_;
    bool unary_exhaustive_ = false;
    bool pairs_exhaustive_ = false;
    std::vector<ElementSet> unary_samples_;
    std::vector<std::pair<ElementSet, ElementSet>> pair_samples_;
};

AuditReport run_all(const Runner& runner, const std::vector<ClauseDef>& clauses, AuditReport report) {
    if (runner.unary_exhaustive() && !runner.pairs_exhaustive())
        report.remarks.push_back("subsets enumerated exhaustively; subset pairs sampled");
    for (const ClauseDef& c : clauses) report.entries.push_back(runner.run(c));
    return report;
}

AuditReport blank_report(const FiniteRing& ring, const Ideal& ideal, const Strategy& strategy) {
    AuditReport r;
    r.ring = ring.name();
    r.universe_size = ring.size();
    r.ideal = ideal.members().to_string();
    r.strategy = strategy;
    return r;
}

Approximations ideal_approximations(const IdealApproximator& ia, const ApproximationSpace& oracle) {
    return Approximations(
        ia.universe_size(), [&ia](const ElementSet& x) { return ia.lower(x); },
        [&ia](const ElementSet& x) { return ia.upper(x); },
        [&oracle](const ElementSet& x) { return oracle.lower(x); },
        [&oracle](const ElementSet& x) { return oracle.upper(x); });
}

Approximations space_approximations(const ApproximationSpace& space) {
    return Approximations(
        space.universe_size(), [&space](const ElementSet& x) { return space.lower(x); },
        [&space](const ElementSet& x) { return space.upper(x); });
}

std::vector<ElementSet> all_cosets(const IdealApproximator& ia) {
    std::vector<ElementSet> out;
    for (Element x = 0; x < ia.universe_size(); ++x) out.push_back(ia.coset_of(x));
    return out;
}

std::string principality_remark(const FiniteRing& ring, const Ideal& ideal) {
    const IdealClassification c = classify(ring, ideal);
    std::string out = "ideal is";
    out += c.is_maximal ? " maximal" : " not maximal";
    out += c.is_principal ? ", principal (generator " + std::to_string(*c.principal_generator) + ")"
                          : ", not principal";
    return out;
}

bool reproduces(const ClauseDef& c, const AuditEntry& entry) {
    if (!entry.witness) return false;
    const Witness& w = *entry.witness;
    const std::size_t n = w.lhs.universe_size();
    const Outcome o = c.eval(w.a.value_or(ElementSet(n)), w.b.value_or(ElementSet(n)));
    return !o.ok && o.lhs == w.lhs && o.rhs == w.rhs;
}

const ClauseDef* find_clause(const std::vector<ClauseDef>& clauses, const AuditEntry& entry) {
    for (const ClauseDef& c : clauses)
        if (c.id == entry.id && c.clause == entry.clause) return &c;
    return nullptr;
}

} // namespace

AuditReport audit_space_properties(const ApproximationSpace& space, const Strategy& strategy) {
    Runner runner(space.universe_size(), strategy);
    Approximations ap = space_approximations(space);
    AuditReport r;
    r.ring = "U(" + std::to_string(space.universe_size()) + ")";
    r.universe_size = space.universe_size();
    std::string blocks;
    for (const ElementSet& b : space.blocks()) blocks += (blocks.empty() ? "" : "|") + b.to_string();
    r.ideal = "partition " + blocks;
    r.strategy = strategy;
    return run_all(runner, space_family(ap), std::move(r));
}

AuditReport audit_prop_3_1(const FiniteRing& ring, const Ideal& m, const Strategy& strategy,
                           bool force) {
    require_ideal(ring, m);
    const bool maximal = is_maximal(ring, m);
    if (!maximal && !force)
        throw Error(ErrorKind::NotMaximal, m.members().to_string() + " is not a maximal ideal of " +
                                               ring.name());
    Runner runner(ring.size(), strategy);
    IdealApproximator ia(ring, m);
    const ApproximationSpace oracle = coset_partition(ring, m);
    Approximations ap = ideal_approximations(ia, oracle);

    AuditReport r = blank_report(ring, m, strategy);
    if (!maximal) r.remarks.push_back("ideal is not maximal; audited on request");
    r = run_all(runner, pawlak_family(PropertyGroup::Prop3_1, ap), std::move(r));
    r.oracle_checks = ap.checks;
    r.oracle_mismatches = ap.mismatches;
    return r;
}

AuditReport audit_prop_4_1(const FiniteRing& ring, const Ideal& ideal, const Strategy& strategy) {
    require_ideal(ring, ideal);
    Runner runner(ring.size(), strategy);
    IdealApproximator ia(ring, ideal);
    const ApproximationSpace oracle = coset_partition(ring, ideal);
    Approximations ap = ideal_approximations(ia, oracle);

    AuditReport r = blank_report(ring, ideal, strategy);
    r.remarks.push_back(principality_remark(ring, ideal));
    auto clauses = pawlak_family(PropertyGroup::Prop4_1, ap);
    clauses.push_back(coset_exactness(ap, all_cosets(ia)));
    r = run_all(runner, clauses, std::move(r));
    r.oracle_checks = ap.checks;
    r.oracle_mismatches = ap.mismatches;
    return r;
}

AuditReport audit_prop_4_2(const FiniteRing& ring, const Ideal& ideal, const Strategy& strategy,
                           SumMode sum_mode) {
    require_ideal(ring, ideal);
    Runner runner(ring.size(), strategy);
    IdealApproximator ia(ring, ideal);
    const ApproximationSpace oracle = coset_partition(ring, ideal);
    Approximations ap = ideal_approximations(ia, oracle);

    AuditReport r = blank_report(ring, ideal, strategy);
    r.sum_mode = sum_mode;
    const IdealClassification c = classify(ring, ideal);
    if (!c.is_maximal && !c.is_principal)
        r.remarks.push_back("warning: ideal is neither maximal nor principal");
    else
        r.remarks.push_back(principality_remark(ring, ideal));
    r = run_all(runner, sum_product_family(ring, ap, sum_mode), std::move(r));
    r.oracle_checks = ap.checks;
    r.oracle_mismatches = ap.mismatches;
    return r;
}

AuditReport audit_groups(const FiniteRing& ring, const Ideal& ideal,
                         const std::vector<PropertyGroup>& groups, const Strategy& strategy,
                         SumMode sum_mode, bool force) {
    AuditReport merged = blank_report(ring, ideal, strategy);
    for (PropertyGroup g : groups) {
        AuditReport part;
        switch (g) {
        case PropertyGroup::SpaceProps:
            part = audit_space_properties(coset_partition(ring, ideal), strategy);
            break;
        case PropertyGroup::Prop3_1: part = audit_prop_3_1(ring, ideal, strategy, force); break;
        case PropertyGroup::Prop4_1: part = audit_prop_4_1(ring, ideal, strategy); break;
        case PropertyGroup::Prop4_2:
            part = audit_prop_4_2(ring, ideal, strategy, sum_mode);
            merged.sum_mode = sum_mode;
            break;
        }
        for (std::string& remark : part.remarks)
            if (std::find(merged.remarks.begin(), merged.remarks.end(), remark) == merged.remarks.end())
                merged.remarks.push_back(std::move(remark));
        merged.oracle_checks += part.oracle_checks;
        merged.oracle_mismatches += part.oracle_mismatches;
        for (AuditEntry& e : part.entries) merged.entries.push_back(std::move(e));
    }
    return merged;
}

bool witness_reproduces(const FiniteRing& ring, const Ideal& ideal, const AuditEntry& entry,
                        SumMode sum_mode) {
    IdealApproximator ia(ring, ideal);
    Approximations ap(
        ring.size(), [&ia](const ElementSet& x) { return ia.lower(x); },
        [&ia](const ElementSet& x) { return ia.upper(x); });
    std::vector<ClauseDef> clauses;
    switch (entry.id.group) {
    case PropertyGroup::SpaceProps: return witness_reproduces(coset_partition(ring, ideal), entry);
    case PropertyGroup::Prop3_1: clauses = pawlak_family(PropertyGroup::Prop3_1, ap); break;
    case PropertyGroup::Prop4_1:
        clauses = pawlak_family(PropertyGroup::Prop4_1, ap);
        clauses.push_back(coset_exactness(ap, all_cosets(ia)));
        break;
    case PropertyGroup::Prop4_2: clauses = sum_product_family(ring, ap, sum_mode); break;
    }
    const ClauseDef* c = find_clause(clauses, entry);
    return c != nullptr && reproduces(*c, entry);
}

bool witness_reproduces(const ApproximationSpace& space, const AuditEntry& entry) {
    if (entry.id.group != PropertyGroup::SpaceProps) return false;
    Approximations ap = space_approximations(space);
    const auto clauses = space_family(ap);
    const ClauseDef* c = find_clause(clauses, entry);
    return c != nullptr && reproduces(*c, entry);
}

// ---------------------------------------------------------------- rendering

namespace {

std::string_view mode_name(Strategy::Mode m) {
    return m == Strategy::Mode::Exhaustive ? "exhaustive" : "randomized";
}

std::string_view sum_mode_name(SumMode m) { return m == SumMode::Pairwise ? "pairwise" : "closure"; }

} // namespace

std::string to_text(const AuditReport& r) {
    std::ostringstream out;
    out << "audit of " << r.ring << " (order " << r.universe_size << ") wrt " << r.ideal << '\n';
    out << "strategy: " << mode_name(r.strategy.mode)
        << " (pairs exhaustive up to order " << r.strategy.max_universe_for_exhaustive
        << ", subsets up to order " << r.strategy.max_universe_for_exhaustive_unary
        << "), samples " << r.strategy.sample_count << ", seed " << r.strategy.seed << '\n';
    out << "sampler: " << r.sampler << '\n';
    if (r.sum_mode) out << "sum mode: " << sum_mode_name(*r.sum_mode) << '\n';
    out << "oracle cross-checks: " << r.oracle_checks << ", mismatches: " << r.oracle_mismatches
        << '\n';
    for (const std::string& remark : r.remarks) out << "remark: " << remark << '\n';
    for (const AuditEntry& e : r.entries) {
        out << to_string(e.id.group) << " item " << e.id.item << " [" << to_string(e.clause)
            << "] " << to_string(e.verdict) << ", instances " << e.instances_tested;
        if (e.witness) {
            const Witness& w = *e.witness;
            if (w.a) out << ", A=" << w.a->to_string();
            if (w.b) out << ", B=" << w.b->to_string();
            out << ", lhs=" << w.lhs.to_string() << ", rhs=" << w.rhs.to_string();
        }
        if (!e.note.empty()) out << " (" << e.note << ")";
        out << '\n';
    }
    return out.str();
}

std::string to_json(const AuditReport& r) {
    using nlohmann::ordered_json;
    auto set_or_null = [](const std::optional<ElementSet>& s) -> ordered_json {
        return s ? ordered_json(s->to_string()) : ordered_json(nullptr);
    };
    ordered_json doc;
    doc["ring"] = r.ring;
    doc["ring_order"] = r.universe_size;
    doc["ideal"] = r.ideal;
    doc["strategy"] = {{"mode", mode_name(r.strategy.mode)},
                       {"max_universe_for_exhaustive", r.strategy.max_universe_for_exhaustive},
                       {"max_universe_for_exhaustive_unary", r.strategy.max_universe_for_exhaustive_unary},
                       {"sample_count", r.strategy.sample_count},
                       {"seed", r.strategy.seed}};
    doc["sampler"] = r.sampler;
    doc["sum_mode"] = r.sum_mode ? ordered_json(sum_mode_name(*r.sum_mode)) : ordered_json(nullptr);
    doc["oracle_checks"] = r.oracle_checks;
    doc["oracle_mismatches"] = r.oracle_mismatches;
    doc["remarks"] = r.remarks;
    ordered_json entries = ordered_json::array();
    for (const AuditEntry& e : r.entries) {
        ordered_json j;
        j["group"] = to_string(e.id.group);
        j["item"] = e.id.item;
        j["clause"] = to_string(e.clause);
        j["verdict"] = to_string(e.verdict);
        j["instances_tested"] = e.instances_tested;
        const std::optional<Witness>& w = e.witness;
        j["witness_a"] = set_or_null(w ? w->a : std::nullopt);
        j["witness_b"] = set_or_null(w ? w->b : std::nullopt);
        j["lhs"] = set_or_null(w ? std::optional(w->lhs) : std::nullopt);
        j["rhs"] = set_or_null(w ? std::optional(w->rhs) : std::nullopt);
        j["note"] = e.note;
        entries.push_back(std::move(j));
    }
    doc["entries"] = std::move(entries);
    return doc.dump(2) + "\n";
}

AuditReport report_from_json(std::string_view text) {
    try {
        const auto doc = nlohmann::json::parse(text);
        AuditReport r;
        r.ring = doc.at("ring").get<std::string>();
        r.universe_size = doc.at("ring_order").get<std::size_t>();
        r.ideal = doc.at("ideal").get<std::string>();
        const auto& s = doc.at("strategy");
        const auto mode = s.at("mode").get<std::string>();
        if (mode != "exhaustive" && mode != "randomized")
            throw Error(ErrorKind::ParseError, "unknown strategy mode '" + mode + "'");
        r.strategy.mode = mode == "exhaustive" ? Strategy::Mode::Exhaustive : Strategy::Mode::Randomized;
        r.strategy.max_universe_for_exhaustive = s.at("max_universe_for_exhaustive").get<std::size_t>();
        r.strategy.max_universe_for_exhaustive_unary =
            s.at("max_universe_for_exhaustive_unary").get<std::size_t>();
        r.strategy.sample_count = s.at("sample_count").get<std::uint64_t>();
        r.strategy.seed = s.at("seed").get<std::uint64_t>();
        r.sampler = doc.at("sampler").get<std::string>();
        if (!doc.at("sum_mode").is_null())
            r.sum_mode = doc["sum_mode"] == "pairwise" ? SumMode::Pairwise : SumMode::Closure;
        r.oracle_checks = doc.at("oracle_checks").get<std::uint64_t>();
        r.oracle_mismatches = doc.at("oracle_mismatches").get<std::uint64_t>();
        r.remarks = doc.at("remarks").get<std::vector<std::string>>();

        auto set_of = [&](const nlohmann::json& j) -> std::optional<ElementSet> {
            if (j.is_null()) return std::nullopt;
            return ElementSet::parse(j.get<std::string>(), r.universe_size);
        };
        for (const auto& j : doc.at("entries")) {
            AuditEntry e{PropertyId(parse_property_group(j.at("group").get<std::string>()),
                                    j.at("item").get<int>())};
            const auto clause = j.at("clause").get<std::string>();
            if (clause == "as-stated") e.clause = Clause::AsStated;
            else if (clause == "lhs-subset-rhs") e.clause = Clause::LhsSubsetRhs;
            else if (clause == "lhs-superset-rhs") e.clause = Clause::LhsSupersetRhs;
            else throw Error(ErrorKind::ParseError, "unknown clause '" + clause + "'");
            e.verdict = j.at("verdict").get<std::string>() == "counterexample"
                            ? Verdict::Counterexample
                            : Verdict::HoldsOnAllTested;
            e.instances_tested = j.at("instances_tested").get<std::uint64_t>();
            auto lhs = set_of(j.at("lhs"));
            auto rhs = set_of(j.at("rhs"));
            if (lhs && rhs)
                e.witness = Witness{set_of(j.at("witness_a")), set_of(j.at("witness_b")), *lhs, *rhs};
            e.note = j.at("note").get<std::string>();
            r.entries.push_back(std::move(e));
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("audit report: ") + e.what());
    }
}

} // namespace roughring
