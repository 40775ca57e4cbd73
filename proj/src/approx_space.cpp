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

#include "roughring/approx_space.hpp"

#include <limits>

namespace roughring {

namespace {

constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
    return out;
}

std::string pair_text(const std::vector<std::string>& labels, Element a, Element b) {
    return "(" + labels[a] + "," + labels[b] + ")";
}

} // namespace

ApproximationSpace::ApproximationSpace(std::vector<ElementSet> blocks, std::vector<std::string> labels)
    : labels_(std::move(labels)), blocks_(std::move(blocks)) {
    if (blocks_.empty())
        throw Error(ErrorKind::InvalidPartition, "partition has no blocks");
    const std::size_t n = blocks_.front().universe_size();
    if (n == 0) throw Error(ErrorKind::InvalidPartition, "universe must be nonempty");
    if (labels_.empty()) labels_ = default_labels(n);
    if (labels_.size() != n)
        throw Error(ErrorKind::InvalidPartition, "label count does not match universe size");

    class_of_.assign(n, kUnassigned);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        const ElementSet& block = blocks_[b];
        if (block.universe_size() != n)
            throw Error(ErrorKind::InvalidPartition, "blocks drawn from different universes");
        if (block.empty()) throw Error(ErrorKind::InvalidPartition, "empty block");
        block.for_each([&](Element x) {
            if (class_of_[x] != kUnassigned)
                throw Error(ErrorKind::InvalidPartition,
                            "element " + labels_[x] + " lies in two blocks");
            class_of_[x] = b;
        });
    }
    for (Element x = 0; x < n; ++x)
        if (class_of_[x] == kUnassigned)
            throw Error(ErrorKind::InvalidPartition, "element " + labels_[x] + " is in no block");
}

ApproximationSpace ApproximationSpace::from_relation(
    std::vector<std::string> labels, const std::vector<std::pair<Element, Element>>& pairs) {
    const std::size_t n = labels.size();
    if (n == 0) throw Error(ErrorKind::InvalidPartition, "universe must be nonempty");

    std::vector<ElementSet> related(n, ElementSet(n));
    for (auto [a, b] : pairs) {
        if (a >= n || b >= n)
            throw Error(ErrorKind::IndexOutOfBounds, "relation pair outside universe");
        related[a].insert(b);
    }

    for (Element a = 0; a < n; ++a)
        if (!related[a].contains(a))
            throw Error(ErrorKind::RelationNotReflexive, "missing " + pair_text(labels, a, a));
    for (Element a = 0; a < n; ++a)
        related[a].for_each([&](Element b) {
            if (!related[b].contains(a))
                throw Error(ErrorKind::RelationNotSymmetric,
                            pair_text(labels, a, b) + " present but " + pair_text(labels, b, a) +
                                " missing");
        });
    for (Element a = 0; a < n; ++a)
        related[a].for_each([&](Element b) {
            const ElementSet missing = related[b] - related[a];
            if (!missing.empty()) {
                const Element c = missing.members().front();
                throw Error(ErrorKind::RelationNotTransitive,
                            pair_text(labels, a, b) + " and " + pair_text(labels, b, c) +
                                " present but " + pair_text(labels, a, c) + " missing");
            }
        });

    // Reflexive + symmetric + transitive: each row is the class of its element.
    std::vector<ElementSet> blocks;
    ElementSet seen(n);
    for (Element a = 0; a < n; ++a) {
        if (seen.contains(a)) continue;
        blocks.push_back(related[a]);
        seen |= related[a];
    }
    return ApproximationSpace(std::move(blocks), std::move(labels));
}

ApproximationSpace ApproximationSpace::discrete(std::size_t universe_size) {
    std::vector<ElementSet> blocks;
    for (Element x = 0; x < universe_size; ++x) blocks.push_back(ElementSet(universe_size, {x}));
    return ApproximationSpace(std::move(blocks));
}

std::size_t ApproximationSpace::block_of(Element x) const {
    if (x >= universe_size())
        throw Error(ErrorKind::IndexOutOfBounds,
                    "element " + std::to_string(x) + " outside universe");
    return class_of_[x];
}

void ApproximationSpace::check_subset(const ElementSet& x) const {
    if (x.universe_size() != universe_size())
        throw Error(ErrorKind::IndexOutOfBounds, "subset drawn from a different universe");
}

ElementSet ApproximationSpace::upper(const ElementSet& x) const {
    check_subset(x);
    ElementSet out(universe_size());
    for (const ElementSet& block : blocks_)
        if (block.intersects(x)) out |= block;
    return out;
}

ElementSet ApproximationSpace::lower(const ElementSet& x) const {
    check_subset(x);
    ElementSet out(universe_size());
    for (const ElementSet& block : blocks_)
        if (block.is_subset_of(x)) out |= block;
    return out;
}

std::string ApproximationSpace::format(const ElementSet& x) const {
    check_subset(x);
    std::string out = "{";
    bool first = true;
    x.for_each([&](Element e) {
        if (!first) out += ',';
        out += labels_[e];
        first = false;
    });
    return out + "}";
}

} // namespace roughring
