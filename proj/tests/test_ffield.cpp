/**************************************************************************
 * tests/test_ffield.cpp
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

#include "centra/ffield.hpp"
#include "centra/number_theory.hpp"

using namespace centra;

namespace {

const std::uint64_t kOrders[] = {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 125, 243, 256};

} // namespace

TEST_CASE("field axioms hold exhaustively on small fields") {
    for (auto q : kOrders) {
        if (q > 32) continue;
        auto f = FiniteField::make_order(q);
        REQUIRE(f->order() == q);
        for (std::uint32_t a = 0; a < q; ++a) {
            REQUIRE(f->add(a, 0) == a);
            REQUIRE(f->mul(a, 1) == a);
            REQUIRE(f->add(a, f->neg(a)) == 0);
            if (a) REQUIRE(f->mul(a, f->inv(a)) == 1);
            for (std::uint32_t b = 0; b < q; ++b) {
                REQUIRE(f->add(a, b) == f->add(b, a));
                REQUIRE(f->mul(a, b) == f->mul(b, a));
                REQUIRE(f->add(a, b) == f->add_slow(a, b));
                REQUIRE(f->mul(a, b) == f->mul_slow(a, b));
                for (std::uint32_t c = 0; c < q; c += 3)
                    REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            }
        }
    }
}

TEST_CASE("table arithmetic agrees with polynomial arithmetic on sampled pairs") {
    for (auto q : kOrders) {
        auto f = FiniteField::make_order(q);
        for (std::uint32_t a = 0; a < q; a += 1 + q / 40)
            for (std::uint32_t b = 0; b < q; b += 1 + q / 37) {
                REQUIRE(f->mul(a, b) == f->mul_slow(a, b));
                REQUIRE(f->add(a, b) == f->add_slow(a, b));
            }
    }
}

TEST_CASE("multiplicative group is cyclic of order q-1") {
    for (auto q : kOrders) {
        auto f = FiniteField::make_order(q);
        REQUIRE(f->mult_order(f->primitive()) == q - 1);
        std::uint64_t count = 0;
        for (std::uint32_t a = 1; a < q; ++a) {
            REQUIRE((q - 1) % f->mult_order(a) == 0);
            REQUIRE(f->pow(a, static_cast<long long>(q - 1)) == 1);
            count += f->mult_order(a) == q - 1;
        }
        // Euler phi(q-1) generators
        std::uint64_t phi = q - 1;
        for (auto r : nt::prime_divisors(q - 1)) phi = phi / r * (r - 1);
        REQUIRE(count == phi);
    }
}

TEST_CASE("Frobenius is an automorphism of order k fixing the prime field") {
    for (auto q : kOrders) {
        auto f = FiniteField::make_order(q);
        const auto k = f->spec().k;
        for (std::uint32_t a = 0; a < q; ++a) {
            std::uint32_t x = a;
            for (std::uint32_t i = 0; i < k; ++i) x = f->frobenius(x);
            REQUIRE(x == a);
            REQUIRE((f->frobenius(a) == a) == (a < f->characteristic()));
        }
    }
}

TEST_CASE("field elements refuse to mix fields") {
    auto f4 = FiniteField::make_order(4), f8 = FiniteField::make_order(8);
    FieldElement a(f4, 2), b(f8, 2);
    REQUIRE_THROWS_AS(a + b, InvalidInput);
    REQUIRE((a * a.inv()).value() == 1);
    REQUIRE_THROWS_AS(FiniteField::make_order(6), InvalidInput);
    REQUIRE_THROWS_AS(f4->inv(0), InvalidInput);
}

TEST_CASE("spec lines round-trip") {
    for (auto q : {4u, 9u, 27u, 125u}) {
        auto f = FiniteField::make_order(q);
        auto s = FieldSpec::parse_line(f->spec().to_line());
        REQUIRE(s.to_line() == f->spec().to_line());
        auto g = FiniteField::make(s);
        for (std::uint32_t a = 0; a < q; ++a) REQUIRE(g->inv(a ? a : 1) == f->inv(a ? a : 1));
    }
}
