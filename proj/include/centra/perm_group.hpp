/**************************************************************************
 * include/centra/perm_group.hpp
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

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "centra/errors.hpp"
#include "centra/permutation.hpp"
#include "centra/slp.hpp"

namespace centra {

inline std::uint64_t saturate_u64(const Order& n) {
    if (n > Order(std::numeric_limits<std::uint64_t>::max())) return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(n);
}

/// Finite permutation group with a base and strong generating set built by
/// deterministic Schreier-Sims. Base points are the smallest moved points of
/// the strong generators that first require them. Immutable once built
/// except through `extend`, which returns a new group.
class PermGroup {
public:
    /// One step (i, j) of a sifting path: the element passed level i through
    /// orbit position j.
    using SiftPath = std::vector<std::pair<std::size_t, std::size_t>>;

    PermGroup() = default;

    /// Builds the BSGS of the group generated by `gens` (all of degree n).
    /// An empty list yields the trivial group on n points.
    static PermGroup generate(std::size_t n, const std::vector<Permutation>& gens) {
        PermGroup g;
        g.degree_ = n;
        g.gens_ = gens;
        for (const auto& x : gens)
            if (x.degree() != n) throw InvalidInput("generator degree does not match group degree");
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (gens[j].is_identity()) continue;
            if (std::find(g.strong_.begin(), g.strong_.end(), gens[j]) != g.strong_.end()) continue;
            g.strong_.push_back(gens[j]);
            g.strong_slp_.push_back(g.slp_.generator(static_cast<std::uint32_t>(j)));
        }
        for (std::size_t s = 0; s < g.strong_.size(); ++s) {
            if (g.fixes_base(g.strong_[s])) g.base_.push_back(static_cast<Point>(g.strong_[s].first_moved_point()));
        }
        g.levels_.resize(g.base_.size());
        for (std::size_t i = 0; i < g.base_.size(); ++i) {
            for (std::size_t s = 0; s < g.strong_.size(); ++s)
                if (g.fixes_prefix(g.strong_[s], i)) g.levels_[i].gens.push_back(s);
            g.rebuild_level(i);
        }
        if (!g.base_.empty()) g.schreier_sims(g.base_.size() - 1);
        g.compute_order();
        return g;
    }

    static PermGroup generate(const std::vector<Permutation>& gens) {
        if (gens.empty()) throw InvalidInput("generator list is empty");
        return generate(gens.front().degree(), gens);
    }

    static PermGroup trivial(std::size_t n) { return generate(n, {}); }

    /// The group generated by this group and x; x is appended to the
    /// generator list so existing programs stay valid.
    PermGroup extend(const Permutation& x) const {
        PermGroup g = *this;
        if (x.degree() != degree_) throw InvalidInput("generator degree does not match group degree");
        const auto j = static_cast<std::uint32_t>(g.gens_.size());
        g.gens_.push_back(x);
        SiftPath path;
        auto [h, stop] = g.strip(x, 0, &path);
        if (stop == g.base_.size() && h.is_identity()) return g;
        std::uint32_t node = g.slp_.generator(j);
        for (auto [lvl, pos] : path) node = g.slp_.product(node, g.slp_.inverse(g.levels_[lvl].u_slp[pos]));
        g.insert_strong(std::move(h), node, 0, stop);
        g.schreier_sims(stop);
        g.compute_order();
        return g;
    }

    std::size_t degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }
    const std::vector<Permutation>& strong_generators() const { return strong_; }
    const Order& order() const { return order_; }
    bool is_trivial() const { return order_ == 1; }

    std::vector<Point> base() const { return base_; }

    std::vector<std::size_t> basic_orbit_lengths() const {
        std::vector<std::size_t> out;
        for (const auto& l : levels_) out.push_back(l.orbit.size());
        return out;
    }

    /// Orbit of base point i, in breadth-first discovery order.
    const std::vector<Point>& basic_orbit(std::size_t i) const { return levels_.at(i).orbit; }

    /// Transversal element mapping base point i to basic_orbit(i)[j].
    const Permutation& transversal(std::size_t i, std::size_t j) const { return levels_.at(i).u.at(j); }

    /// Program node of transversal(i, j) in program().
    std::uint32_t transversal_node(std::size_t i, std::size_t j) const { return levels_.at(i).u_slp.at(j); }
    std::uint32_t strong_generator_node(std::size_t s) const { return strong_slp_.at(s); }

    /// Records how strong generators and transversal elements arise from
    /// generators(); generator j is Op::Generator with a = j.
    const StraightLineProgram& program() const { return slp_; }

    /// Sifts x through the chain. Returns the residue and the level where
    /// sifting stopped (== base length when every level was passed).
    std::pair<Permutation, std::size_t> sift(const Permutation& x, SiftPath* path = nullptr) const {
        if (x.degree() != degree_) throw InvalidInput("permutation degree does not match group degree");
        return strip(x, 0, path);
    }

    bool contains(const Permutation& x) const {
        if (x.degree() != degree_) throw InvalidInput("permutation degree does not match group degree");
        auto [h, stop] = strip(x, 0, nullptr);
        return stop == base_.size() && h.is_identity();
    }

    /// x = u_{k-1} ... u_1 u_0 with u_i = transversal(i, path[i].second).
    /// Throws when x is not in the group.
    SiftPath factorise(const Permutation& x) const {
        SiftPath path;
        auto [h, stop] = sift(x, &path);
        if (stop != base_.size() || !h.is_identity()) throw InvalidInput("element is not in the group");
        return path;
    }

    /// Perfect hash of a member into [0, |G|): mixed radix of orbit positions.
    std::uint64_t rank(const Permutation& x) const {
        if (order_ > Order(std::numeric_limits<std::uint64_t>::max())) throw CapExceeded("rank", saturate_u64(order_), std::numeric_limits<std::uint64_t>::max());
        std::uint64_t r = 0, radix = 1;
        Permutation g = x;
        for (std::size_t i = 0; i < levels_.size(); ++i) {
            const auto& L = levels_[i];
            const auto pos = L.pos[g(base_[i])];
            if (pos < 0) throw InvalidInput("element is not in the group");
            r += radix * static_cast<std::uint64_t>(pos);
            radix *= L.orbit.size();
            g *= L.uinv[static_cast<std::size_t>(pos)];
        }
        if (!g.is_identity()) throw InvalidInput("element is not in the group");
        return r;
    }

    /// Visits every element exactly once, ordered lexicographically by the
    /// tuple of base images. Throws CapExceeded when |G| > cap.
    void for_each_element(std::uint64_t cap, const std::function<void(const Permutation&)>& visit) const {
        if (order_ > Order(cap)) throw CapExceeded("element enumeration", saturate_u64(order_), cap);
        Permutation id = Permutation::identity(degree_);
        enumerate_from(0, id, visit);
    }

    std::vector<Permutation> elements(std::uint64_t cap) const {
        std::vector<Permutation> out;
        if (order_ <= Order(cap)) out.reserve(static_cast<std::size_t>(order_));
        for_each_element(cap, [&](const Permutation& p) { out.push_back(p); });
        return out;
    }

    /// Product-replacement random element; deterministic in the seed.
    Permutation random_element(std::uint64_t seed) const {
        Permutation id = Permutation::identity(degree_);
        if (strong_.empty()) return id;
        std::mt19937_64 rng(seed);
        const std::size_t r = std::max<std::size_t>(10, strong_.size());
        std::vector<Permutation> slots;
        for (std::size_t i = 0; i < r; ++i) slots.push_back(strong_[i % strong_.size()]);
        Permutation acc = id;
        auto step = [&] {
            const std::size_t i = rng() % r;
            std::size_t j = rng() % (r - 1);
            if (j >= i) ++j;
            const bool invert = rng() & 1;
            const bool left = rng() & 1;
            const Permutation y = invert ? slots[j].inverse() : slots[j];
            slots[i] = left ? y * slots[i] : slots[i] * y;
            acc = acc * slots[i];
        };
        for (int k = 0; k < 60; ++k) step();
        for (int k = 0; k < 10; ++k) step();
        return acc;
    }

private:
    struct Level {
        std::vector<std::size_t> gens;
        std::vector<Point> orbit;
        std::vector<std::int32_t> pos;
        std::vector<Permutation> u;
        std::vector<Permutation> uinv;
        std::vector<std::uint32_t> u_slp;
    };

    bool fixes_prefix(const Permutation& x, std::size_t len) const {
        for (std::size_t i = 0; i < len; ++i)
            if (x(base_[i]) != base_[i]) return false;
        return true;
    }
    bool fixes_base(const Permutation& x) const { return fixes_prefix(x, base_.size()); }

    void rebuild_level(std::size_t i) {
        Level& L = levels_[i];
        L.orbit.assign(1, base_[i]);
        L.pos.assign(degree_, -1);
        L.pos[base_[i]] = 0;
        L.u.assign(1, Permutation::identity(degree_));
        L.uinv.assign(1, Permutation::identity(degree_));
        L.u_slp.assign(1, identity_node());
        for (std::size_t j = 0; j < L.orbit.size(); ++j) {
            for (auto s : L.gens) {
                const Point img = strong_[s](L.orbit[j]);
                if (L.pos[img] >= 0) continue;
                L.pos[img] = static_cast<std::int32_t>(L.orbit.size());
                L.orbit.push_back(img);
                Permutation w = L.u[j] * strong_[s];
                L.uinv.push_back(w.inverse());
                L.u.push_back(std::move(w));
                L.u_slp.push_back(slp_.product(L.u_slp[j], strong_slp_[s]));
            }
        }
    }

    std::uint32_t identity_node() {
        if (!identity_node_) identity_node_ = slp_.identity();
        return *identity_node_;
    }

    std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from, SiftPath* path) const {
        for (std::size_t i = from; i < levels_.size(); ++i) {
            const auto pos = levels_[i].pos[g(base_[i])];
            if (pos < 0) return {std::move(g), i};
            if (path) path->emplace_back(i, static_cast<std::size_t>(pos));
            g *= levels_[i].uinv[static_cast<std::size_t>(pos)];
        }
        return {std::move(g), levels_.size()};
    }

    /// Adds h (which fixes base points 0..stop-1) to levels from..stop,
    /// appending a base point when stop is the base length.
    void insert_strong(Permutation h, std::uint32_t node, std::size_t from, std::size_t stop) {
        if (stop == base_.size()) {
            base_.push_back(static_cast<Point>(h.first_moved_point()));
            levels_.emplace_back();
        }
        strong_.push_back(std::move(h));
        strong_slp_.push_back(node);
        const std::size_t s = strong_.size() - 1;
        for (std::size_t l = from; l <= stop; ++l) {
            levels_[l].gens.push_back(s);
            rebuild_level(l);
        }
    }

    /// Deterministic Schreier-Sims, processing levels from `top` down to 0.
    void schreier_sims(std::size_t top) {
        std::ptrdiff_t i = static_cast<std::ptrdiff_t>(top);
        while (i >= 0) {
            const auto li = static_cast<std::size_t>(i);
            bool restarted = false;
            for (std::size_t j = 0; j < levels_[li].orbit.size() && !restarted; ++j) {
                for (std::size_t gi = 0; gi < levels_[li].gens.size(); ++gi) {
                    const Level& L = levels_[li];
                    const std::size_t s = L.gens[gi];
                    const Point img = strong_[s](L.orbit[j]);
                    const auto jj = static_cast<std::size_t>(L.pos[img]);
                    Permutation g = L.u[j] * strong_[s];
                    if (g == L.u[jj]) continue;
                    g *= L.uinv[jj];
                    SiftPath path;
                    auto [h, stop] = strip(std::move(g), li + 1, &path);
                    if (stop == levels_.size() && h.is_identity()) continue;
                    std::uint32_t node = slp_.product(slp_.product(L.u_slp[j], strong_slp_[s]), slp_.inverse(L.u_slp[jj]));
                    for (auto [lvl, p] : path) node = slp_.product(node, slp_.inverse(levels_[lvl].u_slp[p]));
                    insert_strong(std::move(h), node, li + 1, stop);
                    i = static_cast<std::ptrdiff_t>(stop);
                    restarted = true;
                    break;
                }
            }
            if (!restarted) --i;
        }
    }

    void compute_order() {
        order_ = 1;
        for (const auto& l : levels_) order_ *= l.orbit.size();
    }

    void enumerate_from(std::size_t i, const Permutation& suffix, const std::function<void(const Permutation&)>& visit) const {
        if (i == levels_.size()) {
            visit(suffix);
            return;
        }
        const Level& L = levels_[i];
        std::vector<std::size_t> idx(L.orbit.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return suffix(L.orbit[a]) < suffix(L.orbit[b]); });
        for (auto t : idx) enumerate_from(i + 1, L.u[t] * suffix, visit);
    }

    std::size_t degree_ = 0;
    std::vector<Permutation> gens_;
    std::vector<Permutation> strong_;
    std::vector<std::uint32_t> strong_slp_;
    std::vector<Point> base_;
    std::vector<Level> levels_;
    StraightLineProgram slp_;
    std::optional<std::uint32_t> identity_node_;
    Order order_ = 1;
};

// Free-function spellings of the core operations.

inline PermGroup bsgs_build(const std::vector<Permutation>& gens) { return PermGroup::generate(gens); }

inline bool membership(const PermGroup& g, const Permutation& x) { return g.contains(x); }

inline std::vector<Permutation> enumerate_elements(const PermGroup& g, std::uint64_t cap) { return g.elements(cap); }

inline Permutation random_element(const PermGroup& g, std::uint64_t seed) { return g.random_element(seed); }

} // namespace centra
