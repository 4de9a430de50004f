/**************************************************************************
 * tests/test_grpstruct.cpp
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

#include <unordered_set>

#include "centra/catalogue.hpp"
#include "centra/grpstruct.hpp"

using namespace centra;

namespace {

using ElementSet = std::unordered_set<Permutation, PermutationHash>;

std::uint64_t brute_centraliser_order(const PermGroup& g, const Permutation& x) {
    std::uint64_t n = 0;
    g.for_each_element(kDefaultElementCap, [&](const Permutation& y) { n += y.commutes_with(x); });
    return n;
}

/// Subgroup generated by all commutators, by closure.
std::uint64_t brute_derived_order(const PermGroup& g) {
    const auto el = g.elements(100000);
    ElementSet gens;
    for (const auto& a : el)
        for (const auto& b : el) gens.insert(commutator(a, b));
    ElementSet seen{Permutation::identity(g.degree())};
    std::vector<Permutation> queue(seen.begin(), seen.end());
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (const auto& s : gens) {
            auto y = queue[i] * s;
            if (seen.insert(y).second) queue.push_back(std::move(y));
        }
    return seen.size();
}

} // namespace

TEST_CASE("class size times centraliser order is |G| on every class") {
    for (const auto& e : catalogue()) {
        INFO(e.name);
        auto g = build(e.name);
        Order total = 0;
        for (const auto& cls : conjugacy_representatives(g)) {
            REQUIRE(cls.size * centraliser(g, cls.representative).order() == g.order());
            total += cls.size;
        }
        REQUIRE(total == g.order());
    }
}

TEST_CASE("class numbers") {
    const std::pair<const char*, std::size_t> known[] = {
        {"A5", 5}, {"S5", 7}, {"A7", 9}, {"A8", 14}, {"L2(7)", 6}, {"L2(8)", 9}, {"M11", 10},
        {"M12", 15}, {"M22", 12}, {"L3(4)", 10}, {"U3(3)", 14}, {"Sz(8)", 11}, {"PSp4(3)", 20}, {"SL2(5)", 9},
    };
    for (const auto& [name, k] : known) {
        INFO(name);
        REQUIRE(conjugacy_representatives(build(name)).size() == k);
    }
}

TEST_CASE("centralisers agree with brute counts and across methods") {
    for (const char* name : {"A7", "L2(11)", "M11", "SL2(5)", "Q8", "D10"}) {
        INFO(name);
        auto g = build(name);
        for (const auto& cls : conjugacy_representatives(g)) {
            const auto& x = cls.representative;
            auto a = centraliser(g, x, kDefaultElementCap, CentraliserMethod::Filter);
            auto b = centraliser(g, x, kDefaultElementCap, CentraliserMethod::ConjugationOrbit);
            REQUIRE(a.order() == brute_centraliser_order(g, x));
            REQUIRE(a.order() == b.order());
            for (const auto& s : b.generators) {
                REQUIRE(a.contains(s));
                REQUIRE(s.commutes_with(x));
            }
        }
    }
}

TEST_CASE("centres") {
    const std::pair<const char*, int> known[] = {{"SL2(5)", 2}, {"SL2(3)", 2}, {"Q8", 2}, {"D8", 2}, {"D10", 1},
                                                 {"S4", 1},     {"C6", 6},     {"A5", 1}, {"M11", 1}};
    for (const auto& [name, z] : known) {
        INFO(name);
        auto g = build(name);
        REQUIRE(centre(g).order() == z);
        std::uint64_t brute = 0;
        g.for_each_element(kDefaultElementCap, [&](const Permutation& y) {
            bool c = true;
            for (const auto& s : g.generators()) c = c && y.commutes_with(s);
            brute += c;
        });
        REQUIRE(brute == static_cast<std::uint64_t>(z));
    }
}

TEST_CASE("derived subgroups agree with commutator closure") {
    for (const char* name : {"S3", "S4", "S5", "SL2(3)", "D8", "Q8", "A5", "SL2(5)", "C6"}) {
        INFO(name);
        auto g = build(name);
        REQUIRE(derived_subgroup(g).order() == brute_derived_order(g));
    }
}

TEST_CASE("derived series and solubility") {
    using V = std::vector<Order>;
    REQUIRE(derived_series(build("S4")).orders == V{24, 12, 4, 1});
    REQUIRE(derived_series(build("SL2(3)")).orders == V{24, 8, 2, 1});
    REQUIRE(derived_series(build("S5")).orders == V{120, 60});
    REQUIRE(derived_series(build("SL2(5)")).orders == V{120});
    REQUIRE(derived_series(build("S4")).derived_length == 3);
    REQUIRE(is_soluble(build("D10")));
    REQUIRE_FALSE(is_soluble(build("A5")));
    REQUIRE(is_soluble(PermGroup::trivial(3)));
}

TEST_CASE("normal closure") {
    auto s4 = build("S4");
    auto v = normal_closure(s4, {parse_cycles("(1,2)(3,4)", 4)});
    REQUIRE(v.order() == 4);
    auto a = normal_closure(s4, {parse_cycles("(1,2,3)", 4)});
    REQUIRE(a.order() == 12);
    REQUIRE(normal_closure(s4, {parse_cycles("(1,2)", 4)}).order() == 24);
}

TEST_CASE("p-central p-groups") {
    REQUIRE(is_p_central(build("Q8"), 2));
    REQUIRE_FALSE(is_p_central(build("D8"), 2));
    REQUIRE(is_p_central(cyclic_group(9), 3));
    REQUIRE_THROWS_AS(is_p_central(build("S3"), 2), InvalidInput);
}

TEST_CASE("caps are reported, not ignored") {
    auto a9 = build("A9");
    REQUIRE_THROWS_AS(conjugacy_representatives(a9, 1000), CapExceeded);
    REQUIRE_THROWS_AS(centraliser(a9, parse_cycles("(1,2,3)", 9), 10, CentraliserMethod::ConjugationOrbit), CapExceeded);
}
