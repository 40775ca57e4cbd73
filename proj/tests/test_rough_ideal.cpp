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

#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "roughring/rough_ideal.hpp"

using namespace roughring;

namespace {

ElementSet z6(std::initializer_list<Element> m) { return ElementSet(6, m); }
ElementSet z12(std::initializer_list<Element> m) { return ElementSet(12, m); }

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::IoError;
}

void for_each_nonempty_pair(std::size_t n, const std::function<void(const ElementSet&, const ElementSet&)>& f) {
    const std::uint64_t full = ElementSet::full_mask(n);
    for (std::uint64_t a = 1; a <= full; ++a)
        for (std::uint64_t b = 1; b <= full; ++b)
            f(ElementSet::from_bits(n, a), ElementSet::from_bits(n, b));
}

} // namespace

TEST_CASE("approximations relative to a maximal ideal of Z12") {
    const FiniteRing r = make_zn(12);
    const Ideal m = Ideal::from_set(r, z12({0, 3, 6, 9}));
    const ElementSet x = z12({1, 2, 6, 7, 9});
    CHECK(upper_wrt(r, m, x) == r.all());
    CHECK(lower_wrt(r, m, x).empty());
    const RoughApproximation a = apr(r, m, x);
    CHECK(a.boundary == r.all());
    CHECK(a.rough);
    CHECK(a.subset == x);
    CHECK(a.ideal == m);
}

TEST_CASE("approximations relative to {0,2,4} in Z6") {
    const FiniteRing r = make_zn(6);
    const Ideal m = Ideal::from_set(r, z6({0, 2, 4}));
    const ElementSet x = z6({1, 2, 3, 4, 5});
    CHECK(upper_wrt(r, m, x) == r.all());
    CHECK(lower_wrt(r, m, x) == z6({1, 3, 5}));
    const RoughApproximation a = apr(r, m, x);
    CHECK(a.boundary == z6({0, 2, 4}));
    CHECK(a.rough);
    CHECK(lower_wrt(r, m, z6({0, 1, 2, 4})) == z6({0, 2, 4}));
    CHECK(upper_wrt(r, m, r.empty_set()).empty());

    const RoughApproximation coset = apr(r, m, z6({1, 3, 5}));
    CHECK(coset.lower == z6({1, 3, 5}));
    CHECK(coset.upper == z6({1, 3, 5}));
    CHECK_FALSE(coset.rough);
}

TEST_CASE("operators validate their inputs") {
    const FiniteRing r = make_zn(6);
    const Ideal m = Ideal::from_set(r, z6({0, 2, 4}));
    CHECK(kind_of([&] { upper_wrt(make_zn(12), m, z12({1})); }) == ErrorKind::NotAnIdeal);
    CHECK(kind_of([&] { lower_wrt(r, m, z12({1})); }) == ErrorKind::IndexOutOfBounds);
    // {0,2,4} is an ideal of Z6 but not of Z2xZ3 (where 2 = (0,2), 4 = (1,1)).
    CHECK(kind_of([&] { apr(direct_product(make_zn(2), make_zn(3)), m, z6({1})); }) ==
          ErrorKind::NotAnIdeal);
}

TEST_CASE("set sums") {
    const FiniteRing r = make_zn(6);
    CHECK(set_sum(r, z6({1}), z6({2})) == z6({3}));
    CHECK(set_sum(r, z6({0, 3}), z6({0, 3})) == z6({0, 3}));
    const ElementSet x = z6({1, 4, 5});
    CHECK(set_sum(r, z6({0}), x) == x);
    CHECK(set_sum(r, z6({1}), z6({1})) == z6({2}));
    CHECK(set_sum(r, z6({1}), z6({1}), SumMode::Closure) == z6({0, 2, 4}));
    CHECK(set_sum(r, z6({1}), z6({0, 1}), SumMode::Closure) == r.all());
    CHECK(set_sum(r, z6({2}), z6({2}), SumMode::Closure) == z6({0, 2, 4}));
    CHECK(kind_of([&] { set_sum(r, r.empty_set(), x); }) == ErrorKind::EmptyOperand);
    CHECK(kind_of([&] { set_sum(r, x, r.empty_set(), SumMode::Closure); }) == ErrorKind::EmptyOperand);
}

TEST_CASE("set products are all finite sums of pairwise products") {
    const FiniteRing r = make_zn(6);
    CHECK(set_product(r, z6({1, 2, 3, 4, 5}), z6({0, 1, 2, 4})) == r.all());
    CHECK(set_product(r, z6({1, 3, 5}), z6({0, 2, 4})) == z6({0, 2, 4}));
    CHECK(set_product(make_zn(4), ElementSet(4, {0}), ElementSet(4, {0})) == ElementSet(4, {0}));
    // Zero enters only through repeated sums: {2}{1} gives 2 and 2+2.
    CHECK(set_product(make_zn(4), ElementSet(4, {2}), ElementSet(4, {1})) == ElementSet(4, {0, 2}));
    CHECK(kind_of([&] { set_product(r, z6({1}), r.empty_set()); }) == ErrorKind::EmptyOperand);
}

TEST_CASE("set_product matches breadth-first enumeration of finite sums") {
    for (int n : {2, 3, 4, 5, 6}) {
        const FiniteRing r = make_zn(n);
        const auto raw = oracle::zn(n);
        for_each_nonempty_pair(n, [&](const ElementSet& a, const ElementSet& b) {
            CHECK(oracle::to_set(set_product(r, a, b)) ==
                  oracle::finite_sums_of_products(raw, oracle::to_set(a), oracle::to_set(b)));
            CHECK(oracle::to_set(set_sum(r, a, b)) ==
                  oracle::pairwise_sum(raw, oracle::to_set(a), oracle::to_set(b)));
        });
    }
    std::mt19937_64 gen(11);
    const FiniteRing p = direct_product(make_zn(4), make_zn(6));
    const auto raw = oracle::product(oracle::zn(4), oracle::zn(6));
    for (int i = 0; i < 300; ++i) {
        const auto a = ElementSet::from_bits(24, (gen() & ElementSet::full_mask(24)) | 1);
        const auto b = ElementSet::from_bits(24, (gen() & ElementSet::full_mask(24)) | 2);
        CHECK(oracle::to_set(set_product(p, a, b)) ==
              oracle::finite_sums_of_products(raw, oracle::to_set(a), oracle::to_set(b)));
    }
}

TEST_CASE("oracle equivalence: definition, coset partition and approximator agree") {
    std::mt19937_64 gen(2024);
    std::vector<std::pair<FiniteRing, oracle::RawRing>> rings;
    for (int n = 2; n <= 16; ++n) rings.emplace_back(make_zn(n), oracle::zn(n));
    rings.emplace_back(direct_product(make_zn(2), make_zn(6)),
                       oracle::product(oracle::zn(2), oracle::zn(6)));
    rings.emplace_back(direct_product(make_zn(4), make_zn(4)),
                       oracle::product(oracle::zn(4), oracle::zn(4)));
    for (const auto& [r, raw] : rings) {
        for (const Ideal& i : all_ideals(r)) {
            const IdealApproximator ap(r, i);
            const ApproximationSpace space = coset_partition(r, i);
            const oracle::Set members = oracle::to_set(i.members());
            for (int k = 0; k < 200; ++k) {
                const auto x = ElementSet::from_bits(r.size(), gen() & ElementSet::full_mask(r.size()));
                const oracle::Set xs = oracle::to_set(x);
                CHECK(oracle::to_set(ap.upper(x)) == oracle::upper(raw, members, xs));
                CHECK(oracle::to_set(ap.lower(x)) == oracle::lower(raw, members, xs));
                CHECK(ap.upper(x) == space.upper(x));
                CHECK(ap.lower(x) == space.lower(x));
            }
        }
    }
}

TEST_CASE("property: sum and product laws over all nonempty pairs") {
    for (const FiniteRing& r : {make_zn(4), make_zn(6), direct_product(make_zn(2), make_zn(2))}) {
        for (const Ideal& i : all_ideals(r)) {
            const IdealApproximator ap(r, i);
            for_each_nonempty_pair(r.size(), [&](const ElementSet& a, const ElementSet& b) {
                // upper(A) + upper(B) = upper(A + B)
                CHECK(set_sum(r, ap.upper(a), ap.upper(b)) == ap.upper(set_sum(r, a, b)));
                CHECK(set_sum(r, ap.upper(a), ap.upper(b), SumMode::Closure) ==
                      ap.upper(set_sum(r, a, b, SumMode::Closure)));
                // lower(A) + lower(B) within lower(A + B)
                const ElementSet la = ap.lower(a), lb = ap.lower(b);
                if (!la.empty() && !lb.empty())
                    CHECK(set_sum(r, la, lb).is_subset_of(ap.lower(set_sum(r, a, b))));
                // upper(A) * upper(B) within upper(A * B)
                CHECK(set_product(r, ap.upper(a), ap.upper(b))
                          .is_subset_of(ap.upper(set_product(r, a, b))));
                CHECK(set_product(r, a, b) == set_product(r, b, a));
                CHECK(set_product(r, a, b).is_subset_of(set_product(r, a | b, b)));
            });
            for (Element x = 0; x < r.size(); ++x) {
                const ElementSet c = ap.coset_of(x);
                CHECK(ap.lower(c) == c);
                CHECK(ap.upper(c) == c);
            }
        }
    }
}
