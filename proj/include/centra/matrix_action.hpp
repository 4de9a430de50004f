/**************************************************************************
 * include/centra/matrix_action.hpp
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
#include <unordered_map>
#include <vector>

#include "centra/errors.hpp"
#include "centra/linalg.hpp"
#include "centra/permutation.hpp"

namespace centra {

/// Base-q digits of v, first coordinate most significant.
inline std::uint64_t encode_vector(const FiniteField& f, const Vec& v) {
    std::uint64_t c = 0;
    for (auto x : v) c = c * f.order() + x;
    return c;
}

inline Vec decode_vector(const FiniteField& f, std::uint64_t code, std::size_t dim) {
    Vec v(dim, 0);
    for (std::size_t i = dim; i-- > 0;) {
        v[i] = static_cast<std::uint32_t>(code % f.order());
        code /= f.order();
    }
    return v;
}

/// Scales v so that its first non-zero coordinate is 1.
inline Vec normalise_projective(const FiniteField& f, Vec v) {
    for (auto x : v)
        if (x) {
            const auto inv = f.inv(x);
            for (auto& y : v) y = f.mul(y, inv);
            break;
        }
    return v;
}

/// Action of matrices on a finite set of vectors closed under them.
struct VectorAction {
    std::vector<Vec> points;
    std::vector<Permutation> generators;
};

/// Action on the orbit of `seeds` (optionally on projective points). Points
/// are listed in breadth-first order; throws CapExceeded past `cap` points.
inline VectorAction orbit_action(const std::vector<Matrix>& mats, const std::vector<Vec>& seeds, bool projective,
                                 std::size_t cap) {
    if (mats.empty()) throw InvalidInput("no matrices");
    const auto& f = *mats.front().field();
    VectorAction act;
    std::unordered_map<std::uint64_t, std::uint32_t> index;
    auto add = [&](Vec v) {
        if (projective) v = normalise_projective(f, std::move(v));
        const auto c = encode_vector(f, v);
        if (auto it = index.find(c); it != index.end()) return it->second;
        if (act.points.size() >= cap) throw CapExceeded("vector orbit", act.points.size() + 1, cap);
        const auto id = static_cast<std::uint32_t>(act.points.size());
        index.emplace(c, id);
        act.points.push_back(std::move(v));
        return id;
    };
    for (const auto& s : seeds) add(s);
    std::vector<std::vector<Point>> images(mats.size());
    for (std::size_t i = 0; i < act.points.size(); ++i)
        for (std::size_t g = 0; g < mats.size(); ++g) {
            const auto j = add(vec_mul(f, act.points[i], mats[g]));
            images[g].push_back(static_cast<Point>(j));
        }
    if (act.points.size() > kMaxDegree) throw CapExceeded("permutation degree", act.points.size(), kMaxDegree);
    for (auto& im : images) act.generators.push_back(Permutation::from_images(std::move(im)));
    return act;
}

/// Action on all non-zero vectors, which are listed in increasing code order.
inline VectorAction nonzero_vector_action(const std::vector<Matrix>& mats, std::size_t cap = kMaxDegree) {
    if (mats.empty()) throw InvalidInput("no matrices");
    const auto& f = *mats.front().field();
    const std::size_t d = mats.front().rows();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) {
        total *= f.order();
        if (total - 1 > cap) throw CapExceeded("non-zero vectors", total - 1, cap);
    }
    std::vector<Vec> seeds;
    for (std::uint64_t c = 1; c < total; ++c) seeds.push_back(decode_vector(f, c, d));
    return orbit_action(mats, seeds, false, cap);
}

} // namespace centra
