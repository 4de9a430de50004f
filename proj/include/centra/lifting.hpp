/**************************************************************************
 * include/centra/lifting.hpp
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

#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "centra/catalogue.hpp"
#include "centra/errors.hpp"
#include "centra/grpstruct.hpp"
#include "centra/linalg.hpp"
#include "centra/matrix_action.hpp"

namespace centra {

/// Direct product acting on the disjoint union of the two point sets.
inline PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
    const std::size_t n = a.degree(), m = b.degree();
    auto lift = [&](const Permutation& x, std::size_t off) {
        std::vector<Point> img(n + m);
        for (std::size_t i = 0; i < n + m; ++i) img[i] = static_cast<Point>(i);
        for (std::size_t i = 0; i < x.degree(); ++i) img[off + i] = static_cast<Point>(off + x(i));
        return Permutation::from_images(std::move(img));
    };
    std::vector<Permutation> gens;
    for (const auto& x : a.generators()) gens.push_back(lift(x, 0));
    for (const auto& y : b.generators()) gens.push_back(lift(y, n));
    return PermGroup::generate(n + m, gens);
}

/// Embeds x of the first or second factor into direct_product(a, b).
inline Permutation embed_factor(const Permutation& x, std::size_t offset, std::size_t degree) {
    std::vector<Point> img(degree);
    for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < x.degree(); ++i) img[offset + i] = static_cast<Point>(offset + x(i));
    return Permutation::from_images(std::move(img));
}

/// An extension G with a designated normal subgroup N.
struct Extension {
    PermGroup group;
    std::vector<Permutation> normal_generators;
};

/// Affine group V : H on the vectors of V = GF(p)^d, with H given by
/// matrices; N is the translation subgroup. Vectors are points in code order.
inline Extension affine_extension(const std::vector<Matrix>& mats, std::uint64_t cap = kMaxDegree) {
    if (mats.empty()) throw InvalidInput("no matrices");
    const auto& f = *mats.front().field();
    const std::size_t d = mats.front().rows();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) {
        total *= f.order();
        if (total > cap) throw CapExceeded("affine points", total, cap);
    }
    std::vector<Permutation> lin, trans;
    for (const auto& a : mats) {
        std::vector<Point> img(total);
        for (std::uint64_t c = 0; c < total; ++c)
            img[c] = static_cast<Point>(encode_vector(f, vec_mul(f, decode_vector(f, c, d), a)));
        lin.push_back(Permutation::from_images(std::move(img)));
    }
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Point> img(total);
        for (std::uint64_t c = 0; c < total; ++c) {
            Vec v = decode_vector(f, c, d);
            v[i] = f.add(v[i], 1);
            img[c] = static_cast<Point>(encode_vector(f, v));
        }
        trans.push_back(Permutation::from_images(std::move(img)));
    }
    std::vector<Permutation> gens = lin;
    gens.insert(gens.end(), trans.begin(), trans.end());
    return {PermGroup::generate(total, gens), trans};
}

/// G/N as a permutation group on the right cosets of N.
struct Quotient {
    PermGroup group;
    std::vector<Permutation> coset_reps;
    std::vector<std::uint32_t> coset_of; ///< by rank in G

    /// Image of an element of G.
    Permutation image(const PermGroup& g, const Permutation& x) const {
        std::vector<Point> img(coset_reps.size());
        for (std::size_t i = 0; i < coset_reps.size(); ++i) img[i] = coset_of[g.rank(coset_reps[i] * x)];
        return Permutation::from_images(std::move(img));
    }
};

inline Quotient quotient_by(const PermGroup& g, const PermGroup& n, std::uint64_t cap = kDefaultElementCap) {
    if (g.order() > Order(cap)) throw CapExceeded("quotient", saturate_u64(g.order()), cap);
    for (const auto& s : n.generators())
        if (!g.contains(s)) throw InvalidInput("normal subgroup generator is not in the group");
    for (const auto& s : n.generators())
        for (const auto& t : g.generators())
            if (!n.contains(s.conjugate_by(t))) throw InvalidInput("subgroup is not normal");
    Quotient q;
    constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
    q.coset_of.assign(saturate_u64(g.order()), kUnset);
    const auto nel = n.elements(cap);
    g.for_each_element(cap, [&](const Permutation& x) {
        if (q.coset_of[g.rank(x)] != kUnset) return;
        const auto id = static_cast<std::uint32_t>(q.coset_reps.size());
        q.coset_reps.push_back(x);
        for (const auto& y : nel) q.coset_of[g.rank(y * x)] = id;
    });
    if (q.coset_reps.size() > kMaxDegree) throw CapExceeded("quotient degree", q.coset_reps.size(), kMaxDegree);
    std::vector<Permutation> gens;
    for (const auto& s : g.generators()) gens.push_back(q.image(g, s));
    q.group = PermGroup::generate(q.coset_reps.size(), gens);
    return q;
}

struct LiftVerdict {
    bool holds = false;
    Permutation lift;
    Order lift_order = 0;
    Order target_order = 0;            ///< order of the element downstairs
    Order centraliser_order = 0;       ///< |C_G(lift)|
    Order image_order = 0;             ///< |C_G(lift)N/N|
    Order quotient_centraliser_order = 0; ///< |C_{G/N}(xbar)|
    bool downstairs_insoluble = false;
    bool upstairs_insoluble = false;
};

/// Coprime lifting: for y in G with xbar = yN of order coprime to |N|,
/// builds the lift of order |xbar| in yN and checks C_G(lift)N/N = C_{G/N}(xbar).
inline LiftVerdict lifting_check(const Extension& ext, const Permutation& y, std::uint64_t cap = kDefaultElementCap) {
    const auto& g = ext.group;
    if (!g.contains(y)) throw InvalidInput("element is not in the group");
    const auto n = PermGroup::generate(g.degree(), ext.normal_generators);
    const auto q = quotient_by(g, n, cap);
    const auto xbar = q.image(g, y);
    LiftVerdict v;
    v.target_order = element_order(xbar);
    if (boost::multiprecision::gcd(v.target_order, n.order()) != 1)
        throw InvalidInput("order of the element is not coprime to |N|");
    // y^m lies in N with order c coprime to m; y^(c c') with c c' = 1 mod m
    const auto m = static_cast<long long>(v.target_order);
    const auto c = static_cast<long long>(element_order(y) / v.target_order);
    long long k = c;
    while (k % m != 1 % m) k += c;
    v.lift = y.pow(k);
    v.lift_order = element_order(v.lift);
    const auto cg = centraliser(g, v.lift, cap);
    v.centraliser_order = cg.order();
    std::vector<Permutation> imgs;
    for (const auto& s : cg.generators) imgs.push_back(q.image(g, s));
    const auto image = PermGroup::generate(q.group.degree(), imgs);
    v.image_order = image.order();
    const auto cq = centraliser(q.group, xbar, cap);
    v.quotient_centraliser_order = cq.order();
    bool inside = true;
    for (const auto& s : imgs) inside = inside && cq.contains(s);
    v.holds = v.lift_order == v.target_order && q.image(g, v.lift) == xbar && inside && v.image_order == cq.order();
    return v;
}

/// Central lifting: N central of p-power order and xbar = yN of p-power
/// order with C_{G/N}(xbar) insoluble; checks that y has p-power order and
/// an insoluble centraliser.
inline LiftVerdict central_lifting_check(const Extension& ext, const Permutation& y, std::uint64_t p,
                                         std::uint64_t cap = kDefaultElementCap) {
    const auto& g = ext.group;
    if (!g.contains(y)) throw InvalidInput("element is not in the group");
    const auto n = PermGroup::generate(g.degree(), ext.normal_generators);
    for (auto r : prime_divisors(n.order()))
        if (r != p) throw InvalidInput("N is not a p-group");
    for (const auto& s : n.generators())
        for (const auto& t : g.generators())
            if (!s.commutes_with(t)) throw InvalidInput("N is not central");
    const auto q = quotient_by(g, n, cap);
    const auto xbar = q.image(g, y);
    LiftVerdict v;
    v.target_order = element_order(xbar);
    for (auto r : prime_divisors(v.target_order))
        if (r != p) throw InvalidInput("element does not have p-power order modulo N");
    const auto cq = centraliser(q.group, xbar, cap);
    v.quotient_centraliser_order = cq.order();
    v.downstairs_insoluble = !is_soluble(cq.group);
    if (!v.downstairs_insoluble) throw InvalidInput("centraliser downstairs is soluble");
    v.lift = y;
    v.lift_order = element_order(y);
    const auto cg = centraliser(g, y, cap);
    v.centraliser_order = cg.order();
    v.upstairs_insoluble = !is_soluble(cg.group);
    bool p_power = true;
    for (auto r : prime_divisors(v.lift_order)) p_power = p_power && r == p;
    v.holds = p_power && v.upstairs_insoluble;
    return v;
}

} // namespace centra
