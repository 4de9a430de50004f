/**************************************************************************
 * include/centra/permutation.hpp
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
#include <cctype>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "centra/errors.hpp"

namespace centra {

/// Group orders and element orders; unbounded.
using Order = boost::multiprecision::cpp_int;

/// Internal points are 0-based; every textual format is 1-based.
using Point = std::uint16_t;

inline constexpr std::size_t kMaxDegree = 10000;

/// A permutation of {0, ..., n-1} stored as its image array. Products act
/// left to right: (a * b)(i) = b(a(i)).
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(std::size_t n) {
        check_degree(n);
        Permutation p;
        p.img_.resize(n);
        std::iota(p.img_.begin(), p.img_.end(), Point{0});
        return p;
    }

    /// From 0-based images; throws unless the array is a bijection.
    static Permutation from_images(std::vector<Point> images) {
        check_degree(images.size());
        std::vector<bool> seen(images.size(), false);
        for (auto v : images) {
            if (v >= images.size() || seen[v]) throw InvalidInput("image array is not a bijection");
            seen[v] = true;
        }
        Permutation p;
        p.img_ = std::move(images);
        return p;
    }

    /// From 1-based images, as in generator files.
    static Permutation from_images_1based(const std::vector<long long>& images) {
        std::vector<Point> v;
        v.reserve(images.size());
        for (auto x : images) {
            if (x < 1 || static_cast<std::size_t>(x) > images.size())
                throw InvalidInput("image " + std::to_string(x) + " out of range 1.." + std::to_string(images.size()));
            v.push_back(static_cast<Point>(x - 1));
        }
        return from_images(std::move(v));
    }

    /// Product of the given 0-based cycles on n points.
    static Permutation from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles) {
        Permutation p = identity(n);
        std::vector<bool> used(n, false);
        for (const auto& c : cycles) {
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (c[i] >= n) throw InvalidInput("cycle point exceeds degree");
                if (used[c[i]]) throw InvalidInput("cycles are not disjoint");
                used[c[i]] = true;
                p.img_[c[i]] = static_cast<Point>(c[(i + 1) % c.size()]);
            }
        }
        return p;
    }

    std::size_t degree() const { return img_.size(); }
    Point operator()(std::size_t i) const { return img_[i]; }
    const std::vector<Point>& images() const { return img_; }

    bool is_identity() const {
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    Permutation operator*(const Permutation& b) const {
        if (degree() != b.degree()) throw InvalidInput("degree mismatch in permutation product");
        Permutation r;
        r.img_.resize(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = b.img_[img_[i]];
        return r;
    }

    Permutation& operator*=(const Permutation& b) {
        if (degree() != b.degree()) throw InvalidInput("degree mismatch in permutation product");
        for (auto& v : img_) v = b.img_[v];
        return *this;
    }

    Permutation inverse() const {
        Permutation r;
        r.img_.resize(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<Point>(i);
        return r;
    }

    /// x^g = g^-1 x g
    Permutation conjugate_by(const Permutation& g) const {
        if (degree() != g.degree()) throw InvalidInput("degree mismatch in conjugation");
        Permutation r;
        r.img_.resize(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) r.img_[g.img_[i]] = g.img_[img_[i]];
        return r;
    }

    bool commutes_with(const Permutation& b) const {
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (b.img_[img_[i]] != img_[b.img_[i]]) return false;
        return true;
    }

    Permutation pow(long long e) const {
        Permutation base = e < 0 ? inverse() : *this;
        unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
        Permutation r = identity(degree());
        for (; n; n >>= 1) {
            if (n & 1) r *= base;
            base = base * base;
        }
        return r;
    }

    /// Non-trivial cycles, each starting at its smallest point, sorted by it.
    std::vector<std::vector<std::size_t>> cycles() const {
        std::vector<std::vector<std::size_t>> out;
        std::vector<bool> seen(img_.size(), false);
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (seen[i] || img_[i] == i) continue;
            std::vector<std::size_t> c;
            for (std::size_t j = i; !seen[j]; j = img_[j]) {
                seen[j] = true;
                c.push_back(j);
            }
            out.push_back(std::move(c));
        }
        return out;
    }

    std::vector<std::size_t> cycle_lengths() const {
        std::vector<std::size_t> out;
        for (const auto& c : cycles()) out.push_back(c.size());
        return out;
    }

    /// Smallest moved point, or degree() for the identity.
    std::size_t first_moved_point() const {
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != i) return i;
        return img_.size();
    }

    /// 1-based cycle notation, e.g. "(1,2,3)(4,5)"; "()" for the identity.
    std::string to_cycle_string() const {
        std::string s;
        for (const auto& c : cycles()) {
            s += '(';
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(c[i] + 1);
            }
            s += ')';
        }
        return s.empty() ? "()" : s;
    }

    std::size_t hash() const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto v : img_) h = (h ^ v) * 1099511628211ull;
        return h;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    static void check_degree(std::size_t n) {
        if (n > kMaxDegree) throw InvalidInput("degree " + std::to_string(n) + " exceeds ceiling 10000");
    }

    std::vector<Point> img_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept { return p.hash(); }
};

/// lcm of the cycle lengths.
inline Order element_order(const Permutation& x) {
    Order r = 1;
    for (auto len : x.cycle_lengths()) r = boost::multiprecision::lcm(r, Order(len));
    return r;
}

/// Parses 1-based cycle notation such as "(1,2,3)(4,5)" or "(1 2 3)(4 5)".
/// "()" is the identity. Points must not exceed `degree`.
inline Permutation parse_cycles(const std::string& text, std::size_t degree) {
    std::vector<std::vector<std::size_t>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw InvalidInput("empty cycle notation");
    while (i < text.size()) {
        if (text[i] != '(') throw InvalidInput("cycle notation: expected '(' in '" + text + "'");
        ++i;
        std::vector<std::size_t> cyc;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i) throw InvalidInput("cycle notation: expected a point in '" + text + "'");
            unsigned long v = std::stoul(text.substr(start, i - start));
            if (v < 1 || v > degree)
                throw InvalidInput("cycle notation: point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
            cyc.push_back(v - 1);
        }
        if (cyc.size() > 1) cycles.push_back(std::move(cyc));
        skip_ws();
    }
    return Permutation::from_cycles(degree, cycles);
}

} // namespace centra
