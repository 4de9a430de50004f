/**************************************************************************
 * tests/test_permcore.cpp
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

#include <random>
#include <unordered_set>

#include "centra/catalogue.hpp"
#include "centra/perm_group.hpp"

using namespace centra;

namespace {

using ElementSet = std::unordered_set<Permutation, PermutationHash>;

/// Closure of the generators under right multiplication; no BSGS involved.
ElementSet closure(const std::vector<Permutation>& gens, std::size_t n) {
    ElementSet seen{Permutation::identity(n)};
    std::vector<Permutation> queue{Permutation::identity(n)};
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (const auto& s : gens) {
            auto y = queue[i] * s;
            if (seen.insert(y).second) queue.push_back(std::move(y));
        }
    return seen;
}

Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation::from_images(std::move(img));
}

} // namespace

TEST_CASE("composition acts left to right") {
    auto a = parse_cycles("(1,2)", 3), b = parse_cycles("(2,3)", 3);
    auto ab = a * b;
    for (std::size_t i = 0; i < 3; ++i) REQUIRE(ab(i) == b(a(i)));
    REQUIRE(ab.to_cycle_string() == "(1,3,2)");
    REQUIRE((a * a.inverse()).is_identity());
    REQUIRE(parse_cycles("(1 2 3)(4 5)", 5).to_cycle_string() == "(1,2,3)(4,5)");
    REQUIRE_THROWS_AS(parse_cycles("(1,7)", 5), InvalidInput);
    REQUIRE_THROWS_AS(Permutation::identity(kMaxDegree + 1), InvalidInput);
}

TEST_CASE("alternating and symmetric group orders") {
    for (std::size_t n = 3; n <= 12; ++n) {
        REQUIRE(alternating_group(n).order() == factorial(n) / 2);
        REQUIRE(symmetric_group(n).order() == factorial(n));
    }
}

TEST_CASE("linear group orders match the order formulas") {
    for (std::uint64_t q : {4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32})
        REQUIRE(psl2(q).order() == psl2_order(q));
    for (std::uint64_t q : {2, 3, 4}) REQUIRE(psl3(q).order() == psl3_order(q));
    for (std::uint64_t q : {3, 5, 7}) REQUIRE(sl2(q).order() == sl2_order(q));
    REQUIRE(psl2_order(8) == 504);
    REQUIRE(psl3_order(3) == 5616);
    REQUIRE(psl3_order(4) == 20160);
}

TEST_CASE("membership and enumeration agree with closure for groups of order at most 5000") {
    std::mt19937_64 rng(20240611);
    for (const auto& e : catalogue()) {
        auto d = parse_group_name(e.name);
        if (!d || !d->expected_order || *d->expected_order > 5000) continue;
        INFO(e.name);
        auto g = build(*d);
        const auto set = closure(g.generators(), g.degree());
        REQUIRE(Order(set.size()) == g.order());
        ElementSet listed;
        g.for_each_element(10000, [&](const Permutation& x) { listed.insert(x); });
        REQUIRE(listed == set);
        for (const auto& x : set) REQUIRE(g.contains(x));
        for (int t = 0; t < 300; ++t) {
            auto x = random_perm(g.degree(), rng);
            REQUIRE(g.contains(x) == (set.count(x) == 1));
        }
    }
}

TEST_CASE("rank is a bijection onto 0..|G|-1") {
    for (auto g : {alternating_group(6), psl2(11), symmetric_group(5)}) {
        std::vector<bool> hit(static_cast<std::size_t>(g.order()), false);
        g.for_each_element(100000, [&](const Permutation& x) {
            const auto r = g.rank(x);
            REQUIRE(r < hit.size());
            REQUIRE_FALSE(hit[r]);
            hit[r] = true;
        });
        REQUIRE(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
    }
}

TEST_CASE("sifting: residue is trivial exactly for members, and the path rebuilds x") {
    auto g = psl2(13);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        auto x = g.random_element(rng());
        PermGroup::SiftPath path;
        auto [res, level] = g.sift(x, &path);
        REQUIRE(res.is_identity());
        Permutation y = Permutation::identity(g.degree());
        for (auto it = path.rbegin(); it != path.rend(); ++it) y = y * g.transversal(it->first, it->second);
        REQUIRE(y == x);
    }
    auto s = symmetric_group(g.degree());
    int outside = 0;
    for (int t = 0; t < 50; ++t) {
        auto x = s.random_element(rng());
        outside += !g.contains(x);
    }
    REQUIRE(outside > 0);
}

TEST_CASE("seeded random elements are reproducible members") {
    auto g = alternating_group(9);
    for (std::uint64_t s = 0; s < 20; ++s) {
        REQUIRE(g.random_element(s) == g.random_element(s));
        REQUIRE(g.contains(g.random_element(s)));
    }
}

TEST_CASE("extend grows the group and keeps the original") {
    auto c = cyclic_group(5);
    auto a5 = alternating_group(5);
    auto g = PermGroup::generate(5, {a5.generators()[0]});
    auto h = g.extend(a5.generators()[1]);
    REQUIRE(g.order() == 3);
    REQUIRE(h.order() == 60);
    REQUIRE(c.order() == 5);
}

TEST_CASE("element orders") {
    REQUIRE(element_order(parse_cycles("(1,2,3)(4,5)", 5)) == 6);
    REQUIRE(element_order(Permutation::identity(4)) == 1);
    REQUIRE(element_order(parse_cycles("(1,2,3,4,5,6,7)(8,9,10,11)", 11)) == 28);
}
