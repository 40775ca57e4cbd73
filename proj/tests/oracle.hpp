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

// Brute-force reference implementations used only by the tests. They work on
// raw integer tables and std::set so they share no code path with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "roughring/element_set.hpp"
#include "roughring/ring.hpp"

namespace oracle {

using Set = std::set<int>;

struct RawRing {
    int n = 0;
    std::vector<std::vector<int>> add, mul;
    int zero = 0;
    int one = 0;
};

inline RawRing zn(int n) {
    RawRing r;
    r.n = n;
    r.add.assign(n, std::vector<int>(n));
    r.mul.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            r.add[a][b] = (a + b) % n;
            r.mul[a][b] = (a * b) % n;
        }
    r.one = n == 1 ? 0 : 1;
    return r;
}

inline RawRing product(const RawRing& a, const RawRing& b) {
    RawRing r;
    r.n = a.n * b.n;
    r.add.assign(r.n, std::vector<int>(r.n));
    r.mul.assign(r.n, std::vector<int>(r.n));
    for (int x = 0; x < r.n; ++x)
        for (int y = 0; y < r.n; ++y) {
            r.add[x][y] = a.add[x / b.n][y / b.n] * b.n + b.add[x % b.n][y % b.n];
            r.mul[x][y] = a.mul[x / b.n][y / b.n] * b.n + b.mul[x % b.n][y % b.n];
        }
    r.zero = a.zero * b.n + b.zero;
    r.one = a.one * b.n + b.one;
    return r;
}

inline Set all(const RawRing& r) {
    Set s;
    for (int i = 0; i < r.n; ++i) s.insert(i);
    return s;
}

inline Set from_bits(std::uint64_t bits) {
    Set s;
    for (int i = 0; i < 64; ++i)
        if ((bits >> i) & 1U) s.insert(i);
    return s;
}

inline Set to_set(const roughring::ElementSet& e) {
    Set s;
    for (auto m : e.members()) s.insert(static_cast<int>(m));
    return s;
}

inline roughring::ElementSet to_element_set(const Set& s, std::size_t n) {
    roughring::ElementSet out(n);
    for (int e : s) out.insert(static_cast<roughring::Element>(e));
    return out;
}

inline bool subset(const Set& a, const Set& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Set coset(const RawRing& r, const Set& ideal, int x) {
    Set s;
    for (int i : ideal) s.insert(r.add[x][i]);
    return s;
}

/// {x : (x + I) meets X}, straight from the definition.
inline Set upper(const RawRing& r, const Set& ideal, const Set& x) {
    Set out;
    for (int e = 0; e < r.n; ++e)
        for (int i : ideal)
            if (x.count(r.add[e][i])) {
                out.insert(e);
                break;
            }
    return out;
}

/// {x : x + I contained in X}.
inline Set lower(const RawRing& r, const Set& ideal, const Set& x) {
    Set out;
    for (int e = 0; e < r.n; ++e) {
        bool inside = true;
        for (int i : ideal) inside = inside && x.count(r.add[e][i]);
        if (inside) out.insert(e);
    }
    return out;
}

inline bool is_ideal(const RawRing& r, const Set& s) {
    if (!s.count(r.zero)) return false;
    for (int a : s) {
        for (int b : s)
            if (!s.count(r.add[a][b])) return false;
        for (int x = 0; x < r.n; ++x)
            if (!s.count(r.mul[x][a])) return false;
        bool has_inverse = false;
        for (int b : s) has_inverse = has_inverse || r.add[a][b] == r.zero;
        if (!has_inverse) return false;
    }
    return true;
}

/// Every ideal, found by testing every subset. Practical up to n = 16.
inline std::vector<Set> all_ideals(const RawRing& r) {
    std::vector<Set> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << r.n); ++bits) {
        Set s = from_bits(bits);
        if (is_ideal(r, s)) out.push_back(s);
    }
    return out;
}

/// Maximal among the proper ideals in `ideals`.
inline std::vector<Set> maximal_ideals(const RawRing& r, const std::vector<Set>& ideals) {
    std::vector<Set> out;
    const Set everything = all(r);
    for (const Set& m : ideals) {
        if (m == everything) continue;
        bool maximal = true;
        for (const Set& j : ideals)
            if (j != m && j != everything && subset(m, j)) maximal = false;
        if (maximal) out.push_back(m);
    }
    return out;
}

inline Set pairwise_sum(const RawRing& r, const Set& a, const Set& b) {
    Set out;
    for (int x : a)
        for (int y : b) out.insert(r.add[x][y]);
    return out;
}

/// All a1*b1 + ... + ak*bk with k >= 1, by breadth-first search over k.
inline Set finite_sums_of_products(const RawRing& r, const Set& a, const Set& b) {
    Set products;
    for (int x : a)
        for (int y : b) products.insert(r.mul[x][y]);
    Set reached = products, frontier = products;
    while (!frontier.empty()) {
        Set next;
        for (int s : frontier)
            for (int p : products) {
                const int t = r.add[s][p];
                if (!reached.count(t)) next.insert(t);
            }
        reached.insert(next.begin(), next.end());
        frontier = next;
    }
    return reached;
}

/// Additive isomorphism search preserving both tables; n! work, so keep n small.
inline bool isomorphic(const roughring::FiniteRing& a, const roughring::FiniteRing& b) {
    if (a.size() != b.size()) return false;
    const std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = perm[a.zero()] == b.zero() && perm[a.one()] == b.one();
        for (std::size_t x = 0; ok && x < n; ++x)
            for (std::size_t y = 0; ok && y < n; ++y)
                ok = perm[a.add(x, y)] == b.add(perm[x], perm[y]) &&
                     perm[a.mul(x, y)] == b.mul(perm[x], perm[y]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Every set partition of {0..n-1}, via restricted growth strings.
inline std::vector<std::vector<int>> set_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> rgs(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int max_block) {
        if (pos == n) {
            out.push_back(rgs);
            return;
        }
        for (int b = 0; b <= max_block + 1; ++b) {
            rgs[pos] = b;
            rec(pos + 1, std::max(max_block, b));
        }
    };
    if (n > 0) rec(1, 0);
    return out;
}

inline bool is_prime_number(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace oracle
