/**************************************************************************
 * include/centra/grpstruct.hpp
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
#include <optional>
#include <unordered_map>
#include <vector>

#include "centra/errors.hpp"
#include "centra/perm_group.hpp"
#include "centra/permutation.hpp"
#include "centra/pi_set.hpp"

namespace centra {

inline constexpr std::uint64_t kDefaultElementCap = 2'000'000;
inline constexpr std::uint64_t kDefaultOrbitCap = 1'000'000;

/// A subgroup given by generators, together with its own BSGS.
struct Subgroup {
    std::vector<Permutation> generators;
    PermGroup group;

    const Order& order() const { return group.order(); }
    bool contains(const Permutation& x) const { return group.contains(x); }

    /// Checks that every generator lies in `parent`.
    static Subgroup of(const PermGroup& parent, std::vector<Permutation> gens) {
        for (const auto& g : gens)
            if (!parent.contains(g)) throw InvalidInput("subgroup generator is not in the parent group");
        Subgroup s;
        s.group = PermGroup::generate(parent.degree(), gens);
        s.generators = std::move(gens);
        return s;
    }
};

namespace detail {

/// Grows a subgroup from a stream of candidates until its order reaches
/// `target`; candidates already inside are skipped.
class SubgroupGrower {
public:
    SubgroupGrower(std::size_t degree, Order target) : group_(PermGroup::trivial(degree)), target_(std::move(target)) {}

    bool done() const { return group_.order() == target_; }

    void offer(const Permutation& x) {
        if (done() || group_.contains(x)) return;
        group_ = group_.extend(x);
        gens_.push_back(x);
    }

    Subgroup take() && { return Subgroup{std::move(gens_), std::move(group_)}; }

private:
    PermGroup group_;
    Order target_;
    std::vector<Permutation> gens_;
};

} // namespace detail

enum class CentraliserMethod { Automatic, Filter, ConjugationOrbit };

/// C_G(x) by filtering the elements of G.
inline Subgroup centraliser_by_filter(const PermGroup& g, const Permutation& x, std::uint64_t cap) {
    std::vector<Permutation> commuting;
    g.for_each_element(cap, [&](const Permutation& y) {
        if (y.commutes_with(x)) commuting.push_back(y);
    });
    detail::SubgroupGrower grow(g.degree(), Order(commuting.size()));
    for (const auto& y : commuting) {
        if (grow.done()) break;
        grow.offer(y);
    }
    return std::move(grow).take();
}

/// Conjugacy class of x as an orbit with its Schreier tree.
struct ConjugationOrbit {
    std::vector<Permutation> points;
    std::vector<Permutation> transversal; ///< x^transversal[k] == points[k]
};

inline ConjugationOrbit conjugation_orbit(const PermGroup& g, const Permutation& x, std::uint64_t cap) {
    ConjugationOrbit orb;
    std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
    orb.points.push_back(x);
    orb.transversal.push_back(Permutation::identity(g.degree()));
    index.emplace(x, 0);
    for (std::size_t k = 0; k < orb.points.size(); ++k) {
        for (const auto& s : g.generators()) {
            Permutation y = orb.points[k].conjugate_by(s);
            if (index.count(y)) continue;
            if (orb.points.size() >= cap) throw CapExceeded("conjugation orbit", orb.points.size() + 1, cap);
            index.emplace(y, static_cast<std::uint32_t>(orb.points.size()));
            orb.points.push_back(std::move(y));
            orb.transversal.push_back(orb.transversal[k] * s);
        }
    }
    return orb;
}

/// C_G(x) as the stabiliser of x in the conjugation action, generated by
/// Schreier generators of the orbit.
inline Subgroup centraliser_by_orbit(const PermGroup& g, const Permutation& x, std::uint64_t cap) {
    ConjugationOrbit orb = conjugation_orbit(g, x, cap);
    std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
    for (std::size_t k = 0; k < orb.points.size(); ++k) index.emplace(orb.points[k], static_cast<std::uint32_t>(k));
    detail::SubgroupGrower grow(g.degree(), g.order() / orb.points.size());
    if (!x.is_identity()) grow.offer(x);
    for (std::size_t k = 0; k < orb.points.size() && !grow.done(); ++k) {
        for (const auto& s : g.generators()) {
            if (grow.done()) break;
            const std::uint32_t j = index.at(orb.points[k].conjugate_by(s));
            grow.offer(orb.transversal[k] * s * orb.transversal[j].inverse());
        }
    }
    return std::move(grow).take();
}

/// C_G(x). Filters the elements of G when |G| <= cap, otherwise uses the
/// conjugation orbit of x with orbit length limit cap.
inline Subgroup centraliser(const PermGroup& g, const Permutation& x, std::uint64_t cap = kDefaultElementCap,
                            CentraliserMethod method = CentraliserMethod::Automatic) {
    if (!g.contains(x)) throw InvalidInput("element is not in the group");
    if (x.is_identity()) return Subgroup{g.generators(), g};
    if (method == CentraliserMethod::Automatic)
        method = g.order() <= Order(cap) ? CentraliserMethod::Filter : CentraliserMethod::ConjugationOrbit;
    return method == CentraliserMethod::Filter ? centraliser_by_filter(g, x, cap) : centraliser_by_orbit(g, x, cap);
}

/// Z(G).
inline Subgroup centre(const PermGroup& g, std::uint64_t cap = kDefaultElementCap) {
    const auto& gens = g.generators();
    auto central = [&](const Permutation& y) {
        for (const auto& s : gens)
            if (!y.commutes_with(s)) return false;
        return true;
    };
    std::size_t first = 0;
    while (first < gens.size() && gens[first].is_identity()) ++first;
    if (first == gens.size()) return Subgroup{{}, PermGroup::trivial(g.degree())};
    const PermGroup& pool = g.order() <= Order(cap) ? g : centraliser(g, gens[first], cap).group;
    std::vector<Permutation> z;
    pool.for_each_element(cap, [&](const Permutation& y) {
        if (central(y)) z.push_back(y);
    });
    detail::SubgroupGrower grow(g.degree(), Order(z.size()));
    for (const auto& y : z) grow.offer(y);
    return std::move(grow).take();
}

/// [a, b] = a^-1 b^-1 a b
inline Permutation commutator(const Permutation& a, const Permutation& b) {
    return a.inverse() * b.inverse() * a * b;
}

/// Smallest normal subgroup of G containing `gens`.
inline PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& gens) {
    PermGroup n = PermGroup::trivial(g.degree());
    std::vector<Permutation> queue;
    for (const auto& x : gens) {
        if (n.contains(x)) continue;
        n = n.extend(x);
        queue.push_back(x);
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (const auto& s : g.generators()) {
            Permutation c = queue[i].conjugate_by(s);
            if (n.contains(c)) continue;
            n = n.extend(c);
            queue.push_back(std::move(c));
        }
    }
    return n;
}

inline PermGroup derived_subgroup(const PermGroup& g) {
    std::vector<Permutation> comms;
    const auto& gens = g.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(commutator(gens[i], gens[j]));
    return normal_closure(g, comms);
}

struct SeriesReport {
    std::vector<Order> orders; ///< |G|, |G'|, ... up to the first repeated term
    bool soluble = false;
    std::size_t derived_length = 0; ///< meaningful only when soluble
};

/// Derived series; stops at the trivial group or when a term is perfect.
inline SeriesReport derived_series(const PermGroup& g) {
    SeriesReport r;
    PermGroup cur = g;
    r.orders.push_back(cur.order());
    while (!cur.is_trivial()) {
        PermGroup next = derived_subgroup(cur);
        if (next.order() == cur.order()) break;
        r.orders.push_back(next.order());
        cur = std::move(next);
    }
    r.soluble = cur.is_trivial();
    r.derived_length = r.soluble ? r.orders.size() - 1 : 0;
    return r;
}

inline bool is_soluble(const PermGroup& g) { return derived_series(g).soluble; }

struct ConjugacyClass {
    Permutation representative;
    Order size;
};

/// One representative per class, each the first class member met in the
/// enumeration order; classes are listed in that order too.
inline std::vector<ConjugacyClass> conjugacy_representatives(const PermGroup& g, std::uint64_t cap = kDefaultElementCap) {
    if (g.order() > Order(cap)) throw CapExceeded("conjugacy classes", saturate_u64(g.order()), cap);
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    std::vector<ConjugacyClass> out;
    std::vector<Permutation> frontier;
    g.for_each_element(cap, [&](const Permutation& x) {
        const auto r = g.rank(x);
        if (seen[r]) return;
        seen[r] = true;
        std::uint64_t size = 1;
        frontier.assign(1, x);
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            for (const auto& s : g.generators()) {
                Permutation y = frontier[i].conjugate_by(s);
                const auto ry = g.rank(y);
                if (seen[ry]) continue;
                seen[ry] = true;
                ++size;
                frontier.push_back(std::move(y));
            }
        }
        out.push_back({x, Order(size)});
    });
    return out;
}

/// True iff every element of order p in the p-group P is central.
inline bool is_p_central(const PermGroup& p_group, std::uint64_t p, std::uint64_t cap = kDefaultElementCap) {
    if (!nt::is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
    Order n = p_group.order();
    while (n % p == 0) n /= p;
    if (n != 1) throw InvalidInput("group is not a p-group for p = " + std::to_string(p));
    const auto& gens = p_group.generators();
    bool ok = true;
    p_group.for_each_element(cap, [&](const Permutation& y) {
        if (!ok || element_order(y) != p) return;
        for (const auto& s : gens)
            if (!y.commutes_with(s)) {
                ok = false;
                return;
            }
    });
    return ok;
}

} // namespace centra
