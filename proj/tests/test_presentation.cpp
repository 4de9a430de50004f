/**************************************************************************
 * tests/test_presentation.cpp
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

#include <sstream>

#include "centra/catalogue.hpp"
#include "centra/presentation.hpp"

using namespace centra;

namespace {

/// Coxeter presentation of S_n on the adjacent transpositions.
Presentation coxeter_symmetric(std::size_t n) {
    Presentation p;
    p.generator_count = n - 1;
    for (int i = 1; i < static_cast<int>(n); ++i) {
        p.relators.push_back({i, i});
        for (int j = i + 1; j < static_cast<int>(n); ++j)
            p.relators.push_back(power({i, j}, j == i + 1 ? 3 : 2));
    }
    return p;
}

Presentation triangle(std::size_t l, std::size_t m, std::size_t k) {
    return {2, {power({1}, l), power({2}, m), power({1, 2}, k)}};
}

} // namespace

TEST_CASE("coset enumeration recovers group orders") {
    REQUIRE(coset_enumeration(triangle(2, 3, 5)) == 60);
    REQUIRE(coset_enumeration(triangle(2, 3, 4)) == 24);
    REQUIRE(coset_enumeration(triangle(2, 3, 3)) == 12);
    REQUIRE(coset_enumeration({1, {power({1}, 11)}}) == 11);
    for (std::size_t n = 2; n <= 6; ++n) REQUIRE(coset_enumeration(coxeter_symmetric(n)) == factorial(n));
}

TEST_CASE("coset enumeration gives subgroup indices") {
    // <a> has order 2 and <b> order 3 in A5 = (2,3,5)
    REQUIRE(coset_enumeration(triangle(2, 3, 5), {{1}}) == 30);
    REQUIRE(coset_enumeration(triangle(2, 3, 5), {{2}}) == 20);
    REQUIRE(coset_enumeration(triangle(2, 3, 5), {{1}, {2}}) == 1);
    // S_{n-1} has index n in S_n
    auto s5 = coxeter_symmetric(5);
    REQUIRE(coset_enumeration(s5, {{1}, {2}, {3}}) == 5);
}

TEST_CASE("infinite or oversized enumerations hit the cap") {
    REQUIRE_THROWS_AS(coset_enumeration(triangle(2, 3, 7), {}, 5000), CapExceeded);
    REQUIRE_THROWS_AS(coset_enumeration({2, {}}, {}, 1000), CapExceeded);
}

TEST_CASE("presentation text round-trips and rejects bad letters") {
    auto p = triangle(2, 3, 7);
    std::istringstream in(p.to_text());
    auto q = Presentation::parse(in);
    REQUIRE(q.generator_count == 2);
    REQUIRE(q.relators == p.relators);
    std::istringstream bad("gens 2\n1 3\n");
    REQUIRE_THROWS_AS(Presentation::parse(bad), InvalidInput);
    std::istringstream none("1 1\n");
    REQUIRE_THROWS_AS(Presentation::parse(none), InvalidInput);
}

TEST_CASE("shipped presentations define their groups") {
    for (const auto& [display, stem] : shipped_presentation_names()) {
        INFO(display);
        auto sp = shipped_presentation(display);
        const auto order = sp.group.order();
        REQUIRE(order == build(display).order());
        REQUIRE(Order(coset_enumeration(sp.presentation, {{2}}, 200000)) * element_order(sp.group.generators()[1]) == order);
    }
}

TEST_CASE("relator evaluation catches non-relations") {
    auto a5 = alternating_group(5);
    REQUIRE_THROWS_AS(verify_relators(triangle(2, 3, 4), {parse_cycles("(1,2)(3,4)", 5), parse_cycles("(1,3,5)", 5)}),
                      InvalidInput);
    REQUIRE_THROWS_AS(shipped_presentation("M11"), InvalidInput);
    REQUIRE(a5.order() == 60);
}
