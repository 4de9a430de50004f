/**************************************************************************
 * include/centra/ncgraph.hpp
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
#include <map>
#include <optional>
#include <random>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "centra/errors.hpp"
#include "centra/grpstruct.hpp"
#include "centra/perm_group.hpp"

namespace centra {

/// Adjacency is stored as a bitmap only up to this many vertices.
inline constexpr std::size_t kMaterialiseCap = 5000;

/// Vertices with the commutation adjacency, x ~ y iff xy != yx.
class GraphView {
public:
    GraphView() = default;
    explicit GraphView(std::vector<Permutation> vertices) : vertices_(std::move(vertices)) {
        if (vertices_.size() <= kMaterialiseCap) materialise();
    }

    const std::vector<Permutation>& vertices() const { return vertices_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    bool materialised() const { return !adj_.empty() || vertices_.empty(); }

    bool adjacent(std::size_t i, std::size_t j) const {
        if (!adj_.empty()) return adj_[i][j];
        return i != j && !vertices_[i].commutes_with(vertices_[j]);
    }

    /// Vertex index of x, if x is a vertex.
    std::optional<std::size_t> index_of(const Permutation& x) const {
        if (index_.empty())
            for (std::size_t i = 0; i < vertices_.size(); ++i) index_.emplace(vertices_[i], i);
        auto it = index_.find(x);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Degree by counting neighbours.
    std::uint64_t brute_degree(std::size_t i) const {
        if (!adj_.empty()) return adj_[i].count();
        std::uint64_t d = 0;
        for (std::size_t j = 0; j < vertices_.size(); ++j) d += adjacent(i, j);
        return d;
    }

private:
    void materialise() {
        const std::size_t n = vertices_.size();
        adj_.assign(n, boost::dynamic_bitset<>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (!vertices_[i].commutes_with(vertices_[j])) adj_[i].set(j), adj_[j].set(i);
    }

    std::vector<Permutation> vertices_;
    std::vector<boost::dynamic_bitset<>> adj_;
    mutable std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
};

/// Non-commuting graph of G: vertices are the non-central elements in
/// enumeration order.
class NCGraph : public GraphView {
public:
    static NCGraph build(const PermGroup& g, std::uint64_t cap = kDefaultElementCap) {
        if (g.order() > Order(cap)) throw CapExceeded("non-commuting graph", saturate_u64(g.order()), cap);
        Subgroup z = centre(g, cap);
        std::vector<Permutation> verts;
        g.for_each_element(cap, [&](const Permutation& x) {
            if (!z.contains(x)) verts.push_back(x);
        });
        return NCGraph(g, std::move(verts), z.order(), cap);
    }

    const PermGroup& group() const { return group_; }
    const Order& centre_order() const { return centre_order_; }

    /// |G| - |C_G(x)|.
    std::uint64_t degree(std::size_t i) const {
        const auto c = centraliser(group_, vertices()[i], cap_);
        return saturate_u64(group_.order() - c.order());
    }

private:
    NCGraph(PermGroup g, std::vector<Permutation> verts, Order z, std::uint64_t cap)
        : GraphView(std::move(verts)), group_(std::move(g)), centre_order_(std::move(z)), cap_(cap) {}

    PermGroup group_;
    Order centre_order_;
    std::uint64_t cap_;
};

/// Non-neighbours of vertex i (i included), with isolated vertices of the
/// induced subgraph removed.
inline GraphView lambda_star(const NCGraph& gamma, std::size_t i) {
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < gamma.vertex_count(); ++j)
        if (!gamma.adjacent(i, j)) keep.push_back(j);
    std::vector<Permutation> verts;
    for (auto j : keep) {
        bool isolated = true;
        for (auto k : keep)
            if (gamma.adjacent(j, k)) {
                isolated = false;
                break;
            }
        if (!isolated) verts.push_back(gamma.vertices()[j]);
    }
    return GraphView(std::move(verts));
}

/// True iff C_G(a) and C_G(b) meet exactly in Z(G).
inline bool is_domination_pair(const PermGroup& g, const Permutation& a, const Permutation& b,
                               std::uint64_t cap = kDefaultElementCap) {
    const auto ca = centraliser(g, a, cap);
    const auto z = centre(g, cap);
    Order common = 0;
    ca.group.for_each_element(cap, [&](const Permutation& y) {
        if (y.commutes_with(b)) ++common;
    });
    return common == z.order();
}

/// First pair (a, b) with C(a) n C(b) = Z(G); a runs over class
/// representatives by increasing centraliser order, b over all vertices.
inline std::optional<std::pair<Permutation, Permutation>> domination_pair(const NCGraph& gamma,
                                                                         std::uint64_t cap = kDefaultElementCap) {
    if (gamma.vertex_count() == 0) return std::nullopt;
    const auto& g = gamma.group();
    struct Rep {
        Permutation x;
        std::vector<Permutation> cent;
    };
    std::vector<Rep> reps;
    for (const auto& cls : conjugacy_representatives(g, cap)) {
        if (!gamma.index_of(cls.representative)) continue;
        reps.push_back({cls.representative, centraliser(g, cls.representative, cap).group.elements(cap)});
    }
    std::stable_sort(reps.begin(), reps.end(), [](const Rep& u, const Rep& v) { return u.cent.size() < v.cent.size(); });
    const auto z = saturate_u64(gamma.centre_order());
    for (const auto& r : reps)
        for (const auto& b : gamma.vertices()) {
            std::uint64_t common = 0;
            for (const auto& y : r.cent) common += y.commutes_with(b);
            if (common == z) return std::make_pair(r.x, b);
        }
    return std::nullopt;
}

/// A pair generating an insoluble subgroup: seeded random pairs first, then
/// class representatives against all elements. None exists when G is soluble.
inline std::optional<std::pair<Permutation, Permutation>> two_generated_insoluble_witness(
    const PermGroup& g, std::uint64_t trials, std::uint64_t seed, std::uint64_t cap = kDefaultElementCap) {
    if (is_soluble(g)) return std::nullopt;
    auto insoluble = [&](const Permutation& x, const Permutation& y) {
        return !is_soluble(PermGroup::generate(g.degree(), {x, y}));
    };
    std::mt19937_64 rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        auto x = g.random_element(rng()), y = g.random_element(rng());
        if (insoluble(x, y)) return std::make_pair(x, y);
    }
    std::optional<std::pair<Permutation, Permutation>> found;
    for (const auto& cls : conjugacy_representatives(g, cap)) {
        g.for_each_element(cap, [&](const Permutation& y) {
            if (!found && insoluble(cls.representative, y)) found = std::make_pair(cls.representative, y);
        });
        if (found) break;
    }
    return found;
}

struct Fingerprint {
    std::uint64_t vertex_count = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> degrees; ///< (degree, multiplicity), increasing
    std::uint64_t triangles = 0;
    bool triangles_exact = true;
};

/// Triangles are counted exactly up to `exact_cap` vertices, otherwise
/// estimated from `samples` seeded vertex pairs.
inline Fingerprint fingerprint(const NCGraph& gamma, std::uint64_t cap = kDefaultElementCap,
                               std::size_t exact_cap = 1500, std::uint64_t samples = 20000, std::uint64_t seed = 1) {
    Fingerprint fp;
    const auto& g = gamma.group();
    fp.vertex_count = gamma.vertex_count();
    std::map<std::uint64_t, std::uint64_t> deg;
    for (const auto& cls : conjugacy_representatives(g, cap)) {
        if (!gamma.index_of(cls.representative)) continue;
        const auto c = centraliser(g, cls.representative, cap).order();
        deg[saturate_u64(g.order() - c)] += saturate_u64(cls.size);
    }
    fp.degrees.assign(deg.begin(), deg.end());
    const std::size_t n = gamma.vertex_count();
    if (n < 3) return fp;
    if (n <= exact_cap) {
        std::vector<boost::dynamic_bitset<>> adj(n, boost::dynamic_bitset<>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (gamma.adjacent(i, j)) adj[i].set(j);
        for (std::size_t i = 0; i < n; ++i)
            for (auto j = adj[i].find_first(); j != boost::dynamic_bitset<>::npos; j = adj[i].find_next(j))
                fp.triangles += (adj[i] & adj[j]).count();
        return fp;
    }
    fp.triangles_exact = false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    long double common = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        const auto i = pick(rng), j = pick(rng);
        if (i == j || !gamma.adjacent(i, j)) continue;
        for (std::size_t k = 0; k < n; ++k) common += gamma.adjacent(i, k) && gamma.adjacent(j, k);
    }
    // each triangle has three edges; ordered pairs sampled from n^2
    fp.triangles = static_cast<std::uint64_t>(common / samples * n * n / 6.0L + 0.5L);
    return fp;
}

} // namespace centra
