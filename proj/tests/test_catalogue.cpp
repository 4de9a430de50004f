/**************************************************************************
 * tests/test_catalogue.cpp
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

#include "centra/catalogue.hpp"
#include "centra/grpstruct.hpp"

using namespace centra;

TEST_CASE("group names parse to the expected families") {
    REQUIRE(parse_group_name("A7")->family == Family::Alt);
    REQUIRE(parse_group_name("Alt(7)")->param == 7);
    REQUIRE(parse_group_name("PSL2(7)")->family == Family::PSL2);
    REQUIRE(parse_group_name("L2(7)")->param == 7);
    REQUIRE(parse_group_name("L3(3)")->family == Family::PSL3);
    REQUIRE(parse_group_name("SL2(3)")->family == Family::SL2);
    REQUIRE(parse_group_name("M11")->family == Family::FileBacked);
    REQUIRE(parse_group_name("U3_3")->name == "U3(3)");
    REQUIRE(parse_group_name("Sz8")->name == "Sz(8)");
    REQUIRE_FALSE(parse_group_name("M99"));
    REQUIRE_FALSE(parse_group_name("hello"));
}

TEST_CASE("every catalogue group builds with its known order") {
    const std::pair<const char*, std::uint64_t> known[] = {
        {"M11", 7920},   {"M12", 95040},  {"M22", 443520}, {"U3(3)", 6048}, {"PSp4(3)", 25920},
        {"L3(4)", 20160}, {"Sz(8)", 29120}, {"L3(3)", 5616},  {"A8", 20160},   {"L2(32)", 32736},
        {"S4", 24},      {"D10", 10},     {"Q8", 8},        {"C6", 6},        {"SL2(5)", 120},
    };
    for (const auto& [name, n] : known) {
        INFO(name);
        REQUIRE(build(name).order() == n);
    }
    for (const auto& e : catalogue()) {
        INFO(e.name);
        auto g = build(e.name);
        REQUIRE(g.order() > 1);
        const auto series = derived_series(g);
        if (e.simple) {
            REQUIRE(series.orders.size() == 1);
            REQUIRE_FALSE(e.identifications.empty());
        }
    }
}

TEST_CASE("generator files declare matching orders") {
    for (const auto& [display, stem] : file_backed_groups()) {
        INFO(display);
        auto f = GeneratorFile::load(data_dir() + "/" + stem + ".gens");
        REQUIRE(f.order);
        REQUIRE(PermGroup::generate(f.degree, f.generators).order() == *f.order);
    }
}

TEST_CASE("deleted module shape depends on whether p divides m") {
    REQUIRE(deleted_module_shape(5, 2).dimension == 4);
    REQUIRE(deleted_module_shape(6, 2).dimension == 4);
    REQUIRE(deleted_module_shape(6, 2).quotient);
    REQUIRE(deleted_module_shape(9, 3).dimension == 7);
    REQUIRE(deleted_module_shape(8, 3).dimension == 7);
    REQUIRE_FALSE(deleted_module_shape(8, 3).quotient);
}

TEST_CASE("deleted module matrices form a representation") {
    for (auto [m, p] : {std::pair<std::size_t, std::uint64_t>{5, 2}, {6, 2}, {6, 3}, {7, 7}}) {
        auto f = FiniteField::make_order(p);
        auto s = symmetric_group(m);
        const auto el = s.elements(10000);
        for (std::size_t i = 0; i < el.size(); i += 37)
            for (std::size_t j = 0; j < el.size(); j += 53)
                REQUIRE(deleted_module_matrix(f, el[i] * el[j]) ==
                        deleted_module_matrix(f, el[i]) * deleted_module_matrix(f, el[j]));
    }
}

TEST_CASE("identifications print in the usual notation") {
    REQUIRE(Identification::alt(8).to_string() == "A8");
    REQUIRE(Identification::classical("L", 4, 2).to_string() == "L4(2)");
    REQUIRE(Identification::exceptional("2B2", 8).to_string() == "2B2(8)");
    REQUIRE(Identification::sporadic("M11").to_string() == "M11");
}

TEST_CASE("bad generator files are rejected") {
    std::istringstream a("3 1 2\n");
    REQUIRE_THROWS_AS(GeneratorFile::parse(a), InvalidInput);
    std::istringstream b("degree 3\n1 1 2\n");
    REQUIRE_THROWS_AS(GeneratorFile::parse(b), InvalidInput);
    REQUIRE_THROWS_AS(build("Q9"), InvalidInput);
}
