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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "roughring/approx_space.hpp"
#include "roughring/ideal.hpp"
#include "roughring/ring.hpp"
#include "roughring/rough_ideal.hpp"

namespace roughring {

enum class PropertyGroup { SpaceProps, Prop3_1, Prop4_1, Prop4_2 };

std::string_view to_string(PropertyGroup g);
PropertyGroup parse_property_group(std::string_view text);
/// Number of items in a group: 10, 12, 13 and 4 respectively.
int item_count(PropertyGroup g);

struct PropertyId {
    PropertyGroup group;
    int item;

    PropertyId(PropertyGroup g, int i);
    friend bool operator==(const PropertyId&, const PropertyId&) = default;
};

/// Which part of a claim an entry covers. Equalities are also split into
/// their two inclusions so a report can say which direction fails.
enum class Clause { AsStated, LhsSubsetRhs, LhsSupersetRhs };
std::string_view to_string(Clause c);

enum class Verdict { HoldsOnAllTested, Counterexample };
std::string_view to_string(Verdict v);

struct Strategy {
    enum class Mode { Exhaustive, Randomized };
    Mode mode = Mode::Exhaustive;
    /// Largest universe for which subset pairs are enumerated in full.
    std::size_t max_universe_for_exhaustive = 8;
    /// Largest universe for which single subsets are enumerated in full.
    /// Between the two caps, exhaustive mode samples the pairs.
    std::size_t max_universe_for_exhaustive_unary = 16;
    std::uint64_t sample_count = 100'000;
    std::uint64_t seed = 0;

    static Strategy exhaustive() { return {}; }
    static Strategy randomized(std::uint64_t samples, std::uint64_t seed) {
        Strategy s;
        s.mode = Mode::Randomized;
        s.sample_count = samples;
        s.seed = seed;
        return s;
    }
};

/// Identifier of the subset sampler, echoed in every report.
inline constexpr std::string_view kSamplerId = "mt19937_64/mask-reject-zero/unary-then-pairs";

struct Witness {
    std::optional<ElementSet> a;
    std::optional<ElementSet> b;
    ElementSet lhs;
    ElementSet rhs;
};

struct AuditEntry {
    PropertyId id;
    Clause clause = Clause::AsStated;
    Verdict verdict = Verdict::HoldsOnAllTested;
    std::uint64_t instances_tested = 0;
    std::optional<Witness> witness;
    std::string note;
};

struct AuditReport {
    std::string ring;
    std::size_t universe_size = 0;
    std::string ideal;
    Strategy strategy;
    std::string sampler{kSamplerId};
    std::optional<SumMode> sum_mode;
    /// Subsets whose ideal-relative approximations were compared against the
    /// block-based operators on the coset partition.
    std::uint64_t oracle_checks = 0;
    std::uint64_t oracle_mismatches = 0;
    std::vector<std::string> remarks;
    std::vector<AuditEntry> entries;

    bool has_counterexample() const;
    const AuditEntry* find(PropertyGroup g, int item, Clause c = Clause::AsStated) const;
};

/// Pawlak properties of a generic approximation space.
AuditReport audit_space_properties(const ApproximationSpace& space, const Strategy& strategy);

/// Requires M maximal unless `force`; throws NotMaximal otherwise.
AuditReport audit_prop_3_1(const FiniteRing& ring, const Ideal& m, const Strategy& strategy,
                           bool force = false);

AuditReport audit_prop_4_1(const FiniteRing& ring, const Ideal& ideal, const Strategy& strategy);

/// Sum and product laws for approximations, over nonempty subset pairs.
AuditReport audit_prop_4_2(const FiniteRing& ring, const Ideal& ideal, const Strategy& strategy,
                           SumMode sum_mode = SumMode::Pairwise);

/// Runs several groups against one ideal and concatenates the results.
/// SpaceProps is audited on the coset partition of the ideal.
AuditReport audit_groups(const FiniteRing& ring, const Ideal& ideal,
                         const std::vector<PropertyGroup>& groups, const Strategy& strategy,
                         SumMode sum_mode = SumMode::Pairwise, bool force = false);

/**
 * Recomputes both sides of the entry's claim on its witness from scratch.
 * True when the witness is a genuine violation.
 */
bool witness_reproduces(const FiniteRing& ring, const Ideal& ideal, const AuditEntry& entry,
                        SumMode sum_mode = SumMode::Pairwise);
bool witness_reproduces(const ApproximationSpace& space, const AuditEntry& entry);

std::string to_text(const AuditReport& report);
/// Machine-readable JSON; `report_from_json(to_json(r))` re-renders identically.
std::string to_json(const AuditReport& report);
AuditReport report_from_json(std::string_view text);

} // namespace roughring
