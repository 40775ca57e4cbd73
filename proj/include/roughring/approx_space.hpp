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
#include <string>
#include <utility>
#include <vector>

#include "roughring/element_set.hpp"

namespace roughring {

/**
 * A finite universe together with a partition into equivalence classes
 * (the elementary sets). Immutable once built; construction validates that
 * the blocks are nonempty, pairwise disjoint and cover the universe.
 */
class ApproximationSpace {
public:
    /// Labels default to "0".."n-1" when `labels` is empty.
    ApproximationSpace(std::vector<ElementSet> blocks, std::vector<std::string> labels = {});

    /// Partition induced by an equivalence relation given as ordered pairs.
    static ApproximationSpace from_relation(std::vector<std::string> labels,
                                            const std::vector<std::pair<Element, Element>>& pairs);

    /// Every element in its own block.
    static ApproximationSpace discrete(std::size_t universe_size);

    std::size_t universe_size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<ElementSet>& blocks() const noexcept { return blocks_; }
    std::size_t block_of(Element x) const;

    ElementSet empty_set() const { return ElementSet(universe_size()); }
    ElementSet universe() const { return ElementSet::full(universe_size()); }

    /// [x]_R, the block containing x.
    const ElementSet& equivalence_class(Element x) const { return blocks_[block_of(x)]; }

    /// Union of blocks meeting X.
    ElementSet upper(const ElementSet& x) const;
    /// Union of blocks contained in X.
    ElementSet lower(const ElementSet& x) const;
    ElementSet boundary(const ElementSet& x) const { return upper(x) - lower(x); }
    bool is_rough(const ElementSet& x) const { return !boundary(x).empty(); }

    /// Renders a subset with element labels, e.g. `{x1,x6}`.
    std::string format(const ElementSet& x) const;

private:
    void check_subset(const ElementSet& x) const;

    std::vector<std::string> labels_;
    std::vector<ElementSet> blocks_;
    std::vector<std::size_t> class_of_;
};

} // namespace roughring
