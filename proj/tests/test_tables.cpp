/**************************************************************************
 * tests/test_tables.cpp
 *
 * Copyright 2026 The centra Authors
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
 **************************************************************************/

#include <catch_amalgamated.hpp>

#include "centra/tables.hpp"

using namespace centra;

namespace {

PiSet pi(const char* s) { return PiSet::parse(s); }

} // namespace

TEST_CASE("shipped tables file matches the built-in copy") {
    const auto file = ClassTables::load(tables_path());
    REQUIRE(file == ClassTables::builtin());
    REQUIRE(file.hash() == ClassTables::builtin().hash());
    REQUIRE(ClassTables::builtin().hash() == 0x5ddb9a0907a68529ULL);
}

TEST_CASE("tables file edits change the hash") {
    auto t = ClassTables::builtin();
    const auto h = t.hash();
    t.table5["M11"] = 7;
    REQUIRE(t.hash() != h);
    REQUIRE_FALSE(t == ClassTables::builtin());
}

TEST_CASE("alternating part of the second table") {
    for (std::uint64_t n : {5, 6, 7}) REQUIRE(x_alt_membership(n, pi("3")));
    REQUIRE_FALSE(x_alt_membership(8, pi("3")));
    REQUIRE(x_alt_membership(7, pi("2,3,5")));
    REQUIRE(x_alt_membership(8, pi("2")));
    REQUIRE(x_alt_membership(8, pi("2,5")));
    REQUIRE_FALSE(x_alt_membership(9, pi("2")));
    for (std::uint64_t p : {5, 7, 11, 13}) {
        const auto s = PiSet(std::vector<std::uint64_t>{p});
        REQUIRE(x_alt_membership(p + 4, s));
        REQUIRE_FALSE(x_alt_membership(p + 5, s));
    }
    REQUIRE_THROWS_AS(x_alt_membership(4, pi("2")), InvalidInput);
}

TEST_CASE("thickness and rank bounds") {
    REQUIRE(thickness_bound(2) == 8);
    REQUIRE(thickness_bound(3) == 7);
    REQUIRE(thickness_bound(7) == 11);
    REQUIRE_THROWS_AS(thickness_bound(9), InvalidInput);
    REQUIRE(x_class_bound(ClassicalFamily::L, pi("3")) == 7);
    REQUIRE(x_class_bound(ClassicalFamily::U, pi("2,7")) == 8);
    REQUIRE(x_class_bound(ClassicalFamily::O, pi("11")) == 15);
    REQUIRE(x_class_bound_variant(pi("2")) == 6);
    REQUIRE(psp_bound(pi("2")) == 16);
    REQUIRE(psp_bound(pi("3")) == 15);
    REQUIRE(psp_bound(pi("5")) == 15);
    REQUIRE(psp_bound(pi("7")) == 13);
    REQUIRE(x_class_membership(ClassicalFamily::Sp, 4, 3, pi("7")) == true);
    REQUIRE(x_class_membership(ClassicalFamily::L, 12, 2, pi("7")) == false);
}

TEST_CASE("sporadic rows") {
    REQUIRE(x_spor_membership("J2", pi("7")));
    REQUIRE_FALSE(x_spor_membership("J2", pi("5")));
    REQUIRE(x_spor_membership("M11", pi("2,3,5,11")));
    REQUIRE(x_spor_membership("M11", pi("2")));
    REQUIRE_FALSE(x_spor_membership("M12", pi("2")));
    REQUIRE(sporadic_alt_degree("M11") == 6);
    REQUIRE(sporadic_alt_degree("J1") == 5);
    REQUIRE(sporadic_alt_degree("M") == 12);
    REQUIRE(exceptional_alt_degree("E8") == 10);
    REQUIRE(exceptional_alt_degree("2B2") == 2);
    REQUIRE_THROWS_AS(sporadic_alt_degree("M13"), InvalidInput);
    REQUIRE_THROWS_AS(x_spor_membership("Foo", pi("2")), InvalidInput);
}

TEST_CASE("the set Q") {
    for (std::uint64_t q : {8, 27, 7, 5, 3, 13, 17, 32, 128, 243}) REQUIRE(q_in_Q(q));
    for (std::uint64_t q : {11, 4, 9, 16, 2, 31, 64, 1, 0, 6, 25}) REQUIRE_FALSE(q_in_Q(q));
}

TEST_CASE("first table lookups") {
    using V = std::vector<std::string>;
    auto has = [](const V& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); };
    auto a = table1_lookup(pi("2,3,5"));
    for (const char* s : {"A5", "A6", "PSp4(3)"}) REQUIRE(has(a, s));
    auto b = table1_lookup(pi("2,3,7"));
    for (const char* s : {"L3(2)", "L2(8)", "U3(3)"}) REQUIRE(has(b, s));
    REQUIRE(has(table1_lookup(pi("2,3,13")), "L3(3)"));
    // |Sz(8)| = 2^6 5 7 13, and 3 divides |Out| = 3
    REQUIRE(has(table1_lookup(pi("2,3,5,7,13")), "2B2(8)"));
    // |Aut L2(7)| = 336 = 2^4 3 7
    REQUIRE(has(table1_lookup(pi("2,3,7")), "L2(7)"));
    REQUIRE_THROWS_AS(table1_lookup(PiSet::all()), InvalidInput);
}

TEST_CASE("membership of identifications") {
    REQUIRE(table_membership(Identification::alt(7), pi("3")) == "X_Alt");
    REQUIRE(table_membership(Identification::alt(8), pi("3")).empty());
    REQUIRE(table_membership(Identification::sporadic("M11"), pi("2")) == "X_Spor");
    REQUIRE(table_membership(Identification::classical("L", 3, 3), pi("13")) == "X_Class");
    REQUIRE(table_membership(Identification::exceptional("2B2", 8), pi("2")) == "X_Exc");
}

TEST_CASE("rank bounds parse") {
    REQUIRE(RankBound::parse("p+4").at(7) == 11);
    REQUIRE(RankBound::parse("8").at(7) == 8);
    REQUIRE(RankBound::parse("p+4").to_string() == "p+4");
    REQUIRE_THROWS_AS(RankBound::parse("q"), InvalidInput);
}
