/**************************************************************************
 * tests/test_properties.cpp
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

#include "centra/properties.hpp"
#include "centra/report.hpp"

using namespace centra;

namespace {

/// Nonempty subsets of {2,3,5,7}, smallest first.
std::vector<PiSet> small_prime_sets() {
    const std::uint64_t ps[] = {2, 3, 5, 7};
    std::vector<PiSet> out;
    for (unsigned mask = 1; mask < 16; ++mask) {
        std::vector<std::uint64_t> v;
        for (unsigned i = 0; i < 4; ++i)
            if (mask >> i & 1u) v.push_back(ps[i]);
        out.emplace_back(v);
    }
    return out;
}

} // namespace

TEST_CASE("small simple groups have soluble centralisers for all primes") {
    for (const char* name : {"A5", "A6", "A7", "L2(7)", "L2(8)", "L2(11)", "L2(13)", "M11"}) {
        INFO(name);
        auto r = check_soluble_pi_centralisers(build(name), PiSet::all());
        REQUIRE(r.outcome == Outcome::Holds);
        REQUIRE_FALSE(r.witness);
    }
}

TEST_CASE("A8 separates 2 from 3") {
    auto a8 = build("A8");
    REQUIRE(check_soluble_pi_centralisers(a8, PiSet::parse("2")).outcome == Outcome::Holds);
    auto r = check_soluble_pi_centralisers(a8, PiSet::parse("3"));
    REQUIRE(r.outcome == Outcome::Fails);
    REQUIRE(r.witness);
    const auto& x = r.witness->element;
    std::size_t moved = 0;
    for (std::size_t i = 0; i < x.degree(); ++i) moved += x(i) != i;
    REQUIRE(moved == 3);
    REQUIRE(r.witness->order == 3);
    REQUIRE(r.witness->derived_orders.back() >= 60);
    REQUIRE(verify_witness(a8, PiSet::parse("3"), *r.witness).empty());
}

TEST_CASE("an involution in A9 has an insoluble centraliser, beyond the thickness bound") {
    auto a9 = build("A9");
    auto r = check_soluble_pi_centralisers(a9, PiSet::parse("2"));
    REQUIRE(r.outcome == Outcome::Fails);
    REQUIRE(r.witness->order == 2);
    REQUIRE(9 > thickness_bound(2));
    REQUIRE(verify_witness(a9, PiSet::parse("2"), *r.witness).empty());
    REQUIRE(check_soluble_pi_centralisers(build("M12"), PiSet::parse("2")).outcome == Outcome::Fails);
}

TEST_CASE("holding is monotone under shrinking pi") {
    for (const char* name : {"A8", "A9", "L2(16)", "L3(3)", "PSp4(3)", "S5", "SL2(5)"}) {
        INFO(name);
        auto g = build(name);
        const auto sets = small_prime_sets();
        for (const auto& big : sets) {
            if (check_soluble_pi_centralisers(g, big).outcome != Outcome::Holds) continue;
            for (const auto& small : sets)
                if (small.is_subset_of(big)) REQUIRE(check_soluble_pi_centralisers(g, small).outcome == Outcome::Holds);
        }
    }
}

TEST_CASE("class profiles agree with the direct check") {
    for (const char* name : {"A8", "L2(16)", "U3(3)", "SL2(5)"}) {
        auto g = build(name);
        auto prof = ClassProfile::of(g, kDefaultElementCap);
        for (const auto& pi : small_prime_sets()) {
            INFO(name << " " << pi.to_string());
            const auto r = check_soluble_pi_centralisers(g, pi);
            REQUIRE((r.outcome == Outcome::Fails) == prof.first_failure(pi).has_value());
        }
    }
}

TEST_CASE("reports round-trip through JSON and re-verify") {
    auto a8 = build("A8");
    auto r = check_soluble_pi_centralisers(a8, PiSet::parse("3"), kDefaultElementCap, "A8", 5);
    const auto j = to_json(r);
    REQUIRE(j["elapsed_ms"].is_null());
    auto back = report_from_json(nlohmann::json::parse(canonical_dump(j)));
    REQUIRE(back.outcome == Outcome::Fails);
    REQUIRE(back.witness->element == r.witness->element);
    REQUIRE(back.seed == 5);
    REQUIRE(verify_witness(a8, back.pi, *back.witness).empty());
    REQUIRE(canonical_dump(to_json(back)) == canonical_dump(j));

    Witness forged = *back.witness;
    forged.centraliser_order = 1;
    REQUIRE_FALSE(verify_witness(a8, back.pi, forged).empty());
    forged = *back.witness;
    REQUIRE_FALSE(verify_witness(a8, PiSet::parse("2"), forged).empty());

    auto holds = to_json(check_soluble_pi_centralisers(build("A5"), PiSet::all(), kDefaultElementCap, "A5"));
    REQUIRE(holds["witness"].is_null());
    REQUIRE_THROWS_AS(report_from_json(nlohmann::json::parse(R"({"group":"x"})")), InvalidInput);
}

TEST_CASE("caps become a capped outcome") {
    auto r = check_soluble_pi_centralisers(build("M22"), PiSet::all(), 100000);
    REQUIRE(r.outcome == Outcome::Capped);
    REQUIRE_FALSE(r.witness);
    REQUIRE_FALSE(r.cap_message.empty());
}

TEST_CASE("cross-check over small prime sets has no violations") {
    Crosschecker cc;
    for (const auto& pi : small_prime_sets()) {
        auto rep = cc.run(pi, {"A5", "A7", "A8", "L2(7)", "L2(8)", "L2(11)", "L3(3)", "M11", "Sz(8)"});
        INFO(pi.to_string());
        REQUIRE(rep.violations == 0);
    }
    auto rep = cc.run(PiSet::parse("3"), {"A7", "A8"});
    REQUIRE(rep.rows[0].status == "consistent");
    REQUIRE(rep.rows[0].membership == "A7 in X_Alt");
    REQUIRE(rep.rows[1].status == "fails");
    auto m11 = cc.run(PiSet::parse("2"), {"M11"});
    REQUIRE(m11.rows[0].membership == "M11 in X_Spor");
    // 7 does not divide |L2(11)|
    auto skip = cc.run(PiSet::parse("7"), {"L2(11)"});
    REQUIRE(skip.rows[0].status == "skipped");
}
