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

#include <cstdio>
#include <fstream>

#include "oracle.hpp"
#include "roughring/ring.hpp"

using namespace roughring;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::IoError;
}

OpTable raw_table(const std::vector<std::vector<int>>& t) {
    OpTable out;
    for (const auto& row : t) out.emplace_back(row.begin(), row.end());
    return out;
}

} // namespace

TEST_CASE("Z_n arithmetic") {
    const FiniteRing z6 = make_zn(6);
    CHECK(z6.size() == 6);
    CHECK(z6.add(3, 5) == 2);
    CHECK(z6.mul(3, 4) == 0);
    CHECK(z6.neg(0) == 0);
    CHECK(z6.neg(2) == 4);
    CHECK(z6.name() == "Z6");

    const FiniteRing z12 = make_zn(12);
    CHECK(z12.mul(5, 5) == 1);
    CHECK(z12.mul(3, 4) == 0);

    const FiniteRing z1 = make_zn(1);
    CHECK(z1.is_zero_ring());
    CHECK(z1.zero() == 0);
    CHECK(z1.one() == 0);

    CHECK(z6.elements() == std::vector<Element>{0, 1, 2, 3, 4, 5});
    CHECK_THROWS_AS(z6.add(6, 0), Error);
    CHECK(kind_of([] { make_zn(0); }) == ErrorKind::SizeOutOfRange);
    CHECK(kind_of([] { make_zn(65); }) == ErrorKind::SizeOutOfRange);
    CHECK_NOTHROW(make_zn(64));
}

TEST_CASE("from_tables accepts valid tables and reproduces make_zn") {
    const auto z4 = oracle::zn(4);
    const FiniteRing r = FiniteRing::from_tables(4, raw_table(z4.add), raw_table(z4.mul), 0, 1);
    CHECK(r == make_zn(4));
    for (std::size_t n = 1; n <= 16; ++n) {
        const FiniteRing zn = make_zn(n);
        CHECK(FiniteRing::from_tables(n, zn.add_table(), zn.mul_table(), zn.zero(), zn.one()) == zn);
    }
    CHECK_NOTHROW(FiniteRing::from_tables(1, {{0}}, {{0}}, 0, 0));
}

TEST_CASE("from_tables reports the broken axiom") {
    const auto z4 = oracle::zn(4);
    auto mul = raw_table(z4.mul);
    mul[2][2] = 1;
    const ErrorKind k = kind_of([&] { FiniteRing::from_tables(4, raw_table(z4.add), mul, 0, 1); });
    CHECK((k == ErrorKind::NotDistributive || k == ErrorKind::MulNotAssociative));

    auto asym = raw_table(z4.mul);
    asym[1][2] = 3;
    CHECK(kind_of([&] { FiniteRing::from_tables(4, raw_table(z4.add), asym, 0, 1); }) ==
          ErrorKind::MulNotCommutative);

    CHECK(kind_of([&] { FiniteRing::from_tables(4, raw_table(z4.add), raw_table(z4.mul), 0, 3); }) ==
          ErrorKind::NoUnity);

    auto add = raw_table(z4.add);
    add[1][1] = 3;
    add[1][3] = 1;
    CHECK(kind_of([&] { FiniteRing::from_tables(4, add, raw_table(z4.mul), 0, 1); }) ==
          ErrorKind::NotAbelianGroup);

    CHECK(kind_of([&] { FiniteRing::from_tables(4, {{0}}, raw_table(z4.mul), 0, 1); }) ==
          ErrorKind::BadTableShape);
    auto wide = raw_table(z4.add);
    wide[0][0] = 9;
    CHECK(kind_of([&] { FiniteRing::from_tables(4, wide, raw_table(z4.mul), 0, 1); }) ==
          ErrorKind::BadTableShape);

    // Multiplication by zero everywhere: no unity in a nonzero ring.
    OpTable zeros(4, std::vector<Element>(4, 0));
    CHECK(kind_of([&] { FiniteRing::from_tables(4, raw_table(z4.add), zeros, 0, 1); }) ==
          ErrorKind::NoUnity);
}

TEST_CASE("direct products") {
    const FiniteRing z2z2 = direct_product(make_zn(2), make_zn(2));
    // (1,0) has index 2, (0,1) index 1.
    CHECK(z2z2.label(2) == "(1,0)");
    CHECK(z2z2.label(1) == "(0,1)");
    CHECK(z2z2.mul(2, 1) == 0);
    CHECK(z2z2.one() == 3);
    CHECK(z2z2.has_tuple_labels());
    CHECK_FALSE(make_zn(5).has_tuple_labels());

    CHECK(oracle::isomorphic(direct_product(make_zn(2), make_zn(3)), make_zn(6)));
    CHECK(oracle::isomorphic(direct_product(make_zn(1), make_zn(5)), make_zn(5)));
    CHECK_FALSE(oracle::isomorphic(z2z2, make_zn(4)));
    CHECK_FALSE(oracle::isomorphic(direct_product(make_zn(2), make_zn(4)), make_zn(8)));

    const FiniteRing triple = direct_product(direct_product(make_zn(2), make_zn(2)), make_zn(3));
    CHECK(triple.label(triple.one()) == "(1,1,1)");
    CHECK(kind_of([] { direct_product(make_zn(8), make_zn(9)); }) == ErrorKind::SizeOutOfRange);
}

TEST_CASE("property: ring laws hold in products of cyclic rings") {
    for (auto [p, q] : {std::pair{2, 3}, {4, 6}, {3, 3}, {2, 8}, {5, 7}}) {
        const FiniteRing r = direct_product(make_zn(p), make_zn(q));
        const auto raw = oracle::product(oracle::zn(p), oracle::zn(q));
        for (Element a = 0; a < r.size(); ++a) {
            CHECK(r.add(a, r.neg(a)) == r.zero());
            CHECK(r.mul(a, r.one()) == a);
            for (Element b = 0; b < r.size(); ++b) {
                CHECK(r.add(a, b) == static_cast<Element>(raw.add[a][b]));
                CHECK(r.mul(a, b) == static_cast<Element>(raw.mul[a][b]));
                CHECK(r.add(a, b) == r.add(b, a));
                for (Element c = 0; c < r.size(); c += 3)
                    CHECK(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)));
            }
        }
    }
}

TEST_CASE("CRT: Z_p x Z_q is isomorphic to Z_pq exactly when gcd is 1") {
    for (int p = 1; p <= 4; ++p)
        for (int q = 1; q <= 4; ++q) {
            if (p * q > 8) continue;
            CAPTURE(p);
            CAPTURE(q);
            CHECK(oracle::isomorphic(direct_product(make_zn(p), make_zn(q)), make_zn(p * q)) ==
                  (std::gcd(p, q) == 1));
        }
}

TEST_CASE("ring spec grammar") {
    CHECK(parse_ring_spec("Z12") == make_zn(12));
    const FiniteRing r = parse_ring_spec("Z4xZ6");
    CHECK(r.size() == 24);
    CHECK(r.name() == "Z4xZ6");
    CHECK(parse_ring_spec("Z2xZ2xZ3").size() == 12);
    for (const char* bad : {"", "Z", "Zx", "12", "Z4x", "Z4*Z6", "Z1 2"}) {
        CAPTURE(bad);
        CHECK(kind_of([&] { parse_ring_spec(bad); }) == ErrorKind::ParseError);
    }
    CHECK(kind_of([] { parse_ring_spec("Z65"); }) == ErrorKind::SizeOutOfRange);
    CHECK(kind_of([] { parse_ring_spec("table:/nonexistent/ring.json"); }) == ErrorKind::IoError);
}

TEST_CASE("table files") {
    const std::string path = "roughring_test_ring_table.json";
    {
        std::ofstream out(path);
        out << ring_table_json(direct_product(make_zn(2), make_zn(3)));
    }
    const FiniteRing loaded = parse_ring_spec("table:" + path);
    CHECK(loaded == direct_product(make_zn(2), make_zn(3)));
    {
        std::ofstream out(path);
        out << R"({"n": 2, "zero": 0, "one": 1, "add": [[0,1],[1,0]], "mul": [[0,0],[0,1]]})";
    }
    CHECK(load_ring_table(path) == make_zn(2));
    {
        std::ofstream out(path);
        out << R"({"n": 2, "zero": 0})";
    }
    CHECK(kind_of([&] { load_ring_table(path); }) == ErrorKind::ParseError);
    std::remove(path.c_str());
}
