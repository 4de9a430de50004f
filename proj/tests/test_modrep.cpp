/**************************************************************************
 * tests/test_modrep.cpp
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
#include "centra/modrep.hpp"

using namespace centra;

namespace {

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

/// log_p |H / H'H^p|, the dimension of Hom(H, F_p).
std::size_t hom_dimension(const PermGroup& h, std::uint32_t p) {
    std::vector<Permutation> gens;
    for (const auto& a : h.generators()) {
        Permutation x = Permutation::identity(h.degree());
        for (std::uint32_t i = 0; i < p; ++i) x = x * a;
        gens.push_back(x);
        for (const auto& b : h.generators()) gens.push_back(commutator(a, b));
    }
    auto n = normal_closure(h, gens);
    Order idx = h.order() / n.order();
    std::size_t k = 0;
    while (idx > 1) {
        REQUIRE(idx % p == 0);
        idx /= p;
        ++k;
    }
    return k;
}

PermGroup point_stabiliser(const PermGroup& g) {
    std::vector<Permutation> gens;
    g.for_each_element(kDefaultElementCap, [&](const Permutation& x) {
        if (x(0) == 0) gens.push_back(x);
    });
    return PermGroup::generate(g.degree(), gens);
}

} // namespace

TEST_CASE("permutation and deleted modules are homomorphisms") {
    for (const char* name : {"A5", "A6", "L2(7)", "L2(8)"}) {
        auto g = build(name);
        for (std::uint32_t p : {2u, 3u, 5u}) {
            auto m = GModule::permutation_module(g, p);
            m.verify_homomorphism();
            auto d = m.deleted_submodule();
            REQUIRE_NOTHROW(GModule(g, d.matrices(), true));
            REQUIRE(d.dimension() == deleted_module_shape(g.degree(), p).dimension);
        }
    }
}

TEST_CASE("element matrices multiply like the group") {
    auto g = build("A6");
    auto m = GModule::permutation_module(g, 3).deleted_submodule();
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        auto x = g.random_element(rng()), y = g.random_element(rng());
        REQUIRE(m.element_matrix(x * y) == m.element_matrix(x) * m.element_matrix(y));
    }
}

TEST_CASE("H1 of a permutation module is Hom of the point stabiliser") {
    for (const auto& [display, stem] : shipped_presentation_names()) {
        auto sp = shipped_presentation(display);
        if (sp.group.order() > 6000) continue;
        const auto stab = point_stabiliser(sp.group);
        for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
            INFO(display << " p=" << p);
            auto m = GModule::permutation_module(sp.group, p);
            REQUIRE(derivation_space(sp.presentation, m).dim_h1 == hom_dimension(stab, p));
        }
    }
}

TEST_CASE("B1 has dimension d minus the fixed space, and H1 of trivial modules of perfect groups vanishes") {
    for (const auto& [display, stem] : shipped_presentation_names()) {
        auto sp = shipped_presentation(display);
        INFO(display);
        for (std::uint32_t p : {2u, 3u}) {
            auto m = GModule::permutation_module(sp.group, p).deleted_submodule();
            auto ds = derivation_space(sp.presentation, m);
            REQUIRE(ds.dim_b1 == m.dimension() - fixed_subspace(m).size());
            REQUIRE(derivation_space(sp.presentation, GModule::trivial_module(sp.group, p, 2)).dim_h1 == 0);
        }
    }
}

TEST_CASE("complement counting matches p^dim Z1") {
    struct Case {
        const char* group;
        std::uint32_t p;
        bool deleted;
    };
    for (auto c : {Case{"A5", 2, false}, Case{"A5", 2, true}, Case{"A5", 3, true}, Case{"A5", 5, true}, Case{"L2(7)", 2, true}}) {
        INFO(c.group << " p=" << c.p << " deleted=" << c.deleted);
        auto sp = shipped_presentation(c.group);
        auto m = GModule::permutation_module(sp.group, c.p);
        if (c.deleted) m = m.deleted_submodule();
        auto ds = derivation_space(sp.presentation, m);
        REQUIRE(complement_count_oracle(sp.presentation, m) == ipow(c.p, ds.dim_z1));
    }
    auto sp = shipped_presentation("L2(7)");
    auto nat = GModule::load(data_dir() + "/modules/L2_7_natural_F2.mod", sp.group);
    auto ds = derivation_space(sp.presentation, nat);
    REQUIRE(complement_count_oracle(sp.presentation, nat) == ipow(2, ds.dim_z1));
    REQUIRE(ds.dim_h1 == 1);
    REQUIRE(is_irreducible(nat).irreducible);
}

TEST_CASE("A8 on the 7-dimensional deleted module over F3 has an A6 vector stabiliser") {
    auto e = deleted_perm_embedding(7, 3);
    REQUIRE(e.shape.dimension == 7);
    GModule m(e.group, e.matrices);
    auto scan = module_scan_soluble_stabilisers(m);
    REQUIRE_FALSE(scan.all_soluble);
    REQUIRE(scan.witness);
    REQUIRE(scan.witness_orbit == 56);
    REQUIRE(scan.witness_stabiliser_order == 360);
    // brute force over all of A8
    const auto& f = *m.field();
    std::uint64_t fixing = 0;
    e.group.for_each_element(kDefaultElementCap, [&](const Permutation& x) {
        fixing += vec_mul(f, *scan.witness, m.element_matrix(x)) == *scan.witness;
    });
    REQUIRE(fixing == 360);
    auto vs = vector_stabiliser(m, *scan.witness);
    REQUIRE(vs.orbit_size * vs.stabiliser.order() == 20160);
    REQUIRE_FALSE(scan.witness_series.soluble);
}

TEST_CASE("small deleted modules have only soluble stabilisers") {
    auto e = deleted_perm_embedding(4, 2);
    GModule m(e.group, e.matrices);
    REQUIRE(module_scan_soluble_stabilisers(m).all_soluble);
    REQUIRE_THROWS_AS(module_scan_soluble_stabilisers(GModule(deleted_perm_embedding(9, 3).group,
                                                              deleted_perm_embedding(9, 3).matrices),
                                                      1000),
                      CapExceeded);
}

TEST_CASE("modules reject inconsistent input") {
    auto g = build("A5");
    auto f = FiniteField::make_order(2);
    REQUIRE_THROWS_AS(GModule(g, {Matrix::identity(f, 2)}), InvalidInput);
    REQUIRE_THROWS_AS(vector_stabiliser(GModule::trivial_module(g, 2), Vec{0}), InvalidInput);
}
