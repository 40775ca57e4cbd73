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

#include "roughring/ring.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace roughring {

namespace {

std::string triple(Element a, Element b, Element c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

std::vector<std::uint8_t> flatten(std::size_t n, const OpTable& table, const char* which) {
    if (table.size() != n)
        throw Error(ErrorKind::BadTableShape, std::string(which) + " table must have " +
                                                  std::to_string(n) + " rows");
    std::vector<std::uint8_t> flat;
    flat.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        if (table[r].size() != n)
            throw Error(ErrorKind::BadTableShape, std::string(which) + " table row " +
                                                      std::to_string(r) + " must have " +
                                                      std::to_string(n) + " entries");
        for (Element v : table[r]) {
            if (v >= n)
                throw Error(ErrorKind::BadTableShape, std::string(which) + " table entry " +
                                                          std::to_string(v) + " out of range");
            flat.push_back(static_cast<std::uint8_t>(v));
        }
    }
    return flat;
}

} // namespace

FiniteRing FiniteRing::from_tables(std::size_t n, const OpTable& add, const OpTable& mul,
                                   Element zero, Element one, std::string name,
                                   std::vector<std::string> labels) {
    if (n < 1 || n > kMaxUniverse)
        throw Error(ErrorKind::SizeOutOfRange,
                    "ring order " + std::to_string(n) + " outside 1..64");
    if (zero >= n || one >= n)
        throw Error(ErrorKind::BadTableShape, "zero/one index out of range");

    FiniteRing r;
    r.n_ = n;
    r.zero_ = zero;
    r.one_ = one;
    r.add_ = flatten(n, add, "add");
    r.mul_ = flatten(n, mul, "mul");
    auto A = [&](Element a, Element b) -> Element { return r.add_[a * n + b]; };
    auto M = [&](Element a, Element b) -> Element { return r.mul_[a * n + b]; };

    for (Element a = 0; a < n; ++a)
        if (A(a, zero) != a || A(zero, a) != a)
            throw Error(ErrorKind::NotAbelianGroup,
                        "zero is not an additive identity at " + triple(a, zero, A(a, zero)));
    for (Element a = 0; a < n; ++a)
        for (Element b = a + 1; b < n; ++b)
            if (A(a, b) != A(b, a))
                throw Error(ErrorKind::NotAbelianGroup,
                            "addition not commutative at (" + std::to_string(a) + "," +
                                std::to_string(b) + ")");
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                if (A(A(a, b), c) != A(a, A(b, c)))
                    throw Error(ErrorKind::NotAbelianGroup,
                                "addition not associative at " + triple(a, b, c));
    r.neg_.assign(n, 0);
    for (Element a = 0; a < n; ++a) {
        bool found = false;
        for (Element b = 0; b < n && !found; ++b)
            if (A(a, b) == zero) {
                r.neg_[a] = static_cast<std::uint8_t>(b);
                found = true;
            }
        if (!found)
            throw Error(ErrorKind::NotAbelianGroup,
                        "element " + std::to_string(a) + " has no additive inverse");
    }

    for (Element a = 0; a < n; ++a)
        for (Element b = a + 1; b < n; ++b)
            if (M(a, b) != M(b, a))
                throw Error(ErrorKind::MulNotCommutative,
                            "at (" + std::to_string(a) + "," + std::to_string(b) + ")");
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                if (M(M(a, b), c) != M(a, M(b, c)))
                    throw Error(ErrorKind::MulNotAssociative, "at " + triple(a, b, c));
    for (Element a = 0; a < n; ++a)
        if (M(a, one) != a)
            throw Error(ErrorKind::NoUnity, "element " + std::to_string(one) +
                                                " is not a multiplicative identity: " +
                                                std::to_string(a) + "*" + std::to_string(one) +
                                                "=" + std::to_string(M(a, one)));
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                if (M(a, A(b, c)) != A(M(a, b), M(a, c)))
                    throw Error(ErrorKind::NotDistributive, "at " + triple(a, b, c));

    r.name_ = name.empty() ? "ring" + std::to_string(n) : std::move(name);
    if (labels.empty()) {
        for (Element e = 0; e < n; ++e) labels.push_back(std::to_string(e));
    } else if (labels.size() != n) {
        throw Error(ErrorKind::BadTableShape, "label count does not match ring order");
    }
    r.labels_ = std::move(labels);
    return r;
}

std::vector<Element> FiniteRing::elements() const {
    std::vector<Element> out(n_);
    for (Element e = 0; e < n_; ++e) out[e] = e;
    return out;
}

bool FiniteRing::has_tuple_labels() const {
    for (Element e = 0; e < n_; ++e)
        if (labels_[e] != std::to_string(e)) return true;
    return false;
}

OpTable FiniteRing::unflatten(const std::vector<std::uint8_t>& flat) const {
    OpTable out(n_, std::vector<Element>(n_));
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b) out[a][b] = flat[a * n_ + b];
    return out;
}

FiniteRing make_zn(std::size_t n) {
    if (n < 1 || n > kMaxUniverse)
        throw Error(ErrorKind::SizeOutOfRange, "Z_n needs 1 <= n <= 64, got " + std::to_string(n));
    OpTable add(n, std::vector<Element>(n)), mul(n, std::vector<Element>(n));
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            add[a][b] = (a + b) % n;
            mul[a][b] = (a * b) % n;
        }
    return FiniteRing::from_tables(n, add, mul, 0, n == 1 ? 0 : 1, "Z" + std::to_string(n));
}

FiniteRing direct_product(const FiniteRing& a, const FiniteRing& b) {
    const std::size_t na = a.size(), nb = b.size();
    if (na * nb > kMaxUniverse)
        throw Error(ErrorKind::SizeOutOfRange, "product order " + std::to_string(na * nb) +
                                                   " exceeds 64");
    const std::size_t n = na * nb;
    auto pack = [nb](Element i, Element j) { return i * nb + j; };

    OpTable add(n, std::vector<Element>(n)), mul(n, std::vector<Element>(n));
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
            const Element xi = x / nb, xj = x % nb, yi = y / nb, yj = y % nb;
            add[x][y] = pack(a.add(xi, yi), b.add(xj, yj));
            mul[x][y] = pack(a.mul(xi, yi), b.mul(xj, yj));
        }

    // Nested tuples are flattened: (Z2xZ2)xZ3 labels read (i,j,k).
    auto inner = [](const FiniteRing& r, Element e) {
        const std::string& s = r.label(e);
        return r.has_tuple_labels() ? s.substr(1, s.size() - 2) : s;
    };
    std::vector<std::string> labels;
    for (Element x = 0; x < n; ++x)
        labels.push_back("(" + inner(a, x / nb) + "," + inner(b, x % nb) + ")");

    return FiniteRing::from_tables(n, add, mul, pack(a.zero(), b.zero()), pack(a.one(), b.one()),
                                   a.name() + "x" + b.name(), std::move(labels));
}

FiniteRing parse_ring_spec(std::string_view spec) {
    constexpr std::string_view table_prefix = "table:";
    if (spec.substr(0, table_prefix.size()) == table_prefix)
        return load_ring_table(std::string(spec.substr(table_prefix.size())));

    auto parse_factor = [&](std::string_view f) {
        std::size_t n = 0;
        if (f.size() < 2 || f.front() != 'Z')
            throw Error(ErrorKind::ParseError, "bad ring factor '" + std::string(f) +
                                                   "' in '" + std::string(spec) +
                                                   "' (expected Z<n>)");
        auto [ptr, ec] = std::from_chars(f.data() + 1, f.data() + f.size(), n);
        if (ec != std::errc{} || ptr != f.data() + f.size())
            throw Error(ErrorKind::ParseError, "bad modulus in ring factor '" + std::string(f) + "'");
        return make_zn(n);
    };

    std::string_view rest = spec;
    auto cut = rest.find('x');
    FiniteRing ring = parse_factor(rest.substr(0, cut));
    while (cut != std::string_view::npos) {
        rest.remove_prefix(cut + 1);
        cut = rest.find('x');
        ring = direct_product(ring, parse_factor(rest.substr(0, cut)));
    }
    return ring;
}

FiniteRing load_ring_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open ring table '" + path + "'");
    try {
        const auto doc = nlohmann::json::parse(in);
        const auto n = doc.at("n").get<std::size_t>();
        return FiniteRing::from_tables(n, doc.at("add").get<OpTable>(), doc.at("mul").get<OpTable>(),
                                       doc.at("zero").get<Element>(), doc.at("one").get<Element>(),
                                       doc.value("name", "table:" + path));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, "ring table '" + path + "': " + e.what());
    }
}

std::string ring_table_json(const FiniteRing& ring) {
    nlohmann::ordered_json doc;
    doc["name"] = ring.name();
    doc["n"] = ring.size();
    doc["zero"] = ring.zero();
    doc["one"] = ring.one();
    doc["add"] = ring.add_table();
    doc["mul"] = ring.mul_table();
    return doc.dump();
}

} // namespace roughring
