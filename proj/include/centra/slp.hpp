/**************************************************************************
 * include/centra/slp.hpp
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
#include <vector>

#include "centra/errors.hpp"

namespace centra {

/// Straight-line program over a fixed list of generators. Node i is either
/// the identity, generator j, the product of two earlier nodes, or the
/// inverse of an earlier node. Permutation groups record how every strong
/// generator and transversal element was formed, so that the same elements
/// can be rebuilt in any other image of the generators (matrices, words).
class StraightLineProgram {
public:
    enum class Op : std::uint8_t { Identity, Generator, Product, Inverse };

    struct Node {
        Op op;
        std::uint32_t a;
        std::uint32_t b;
    };

    std::uint32_t identity() { return push({Op::Identity, 0, 0}); }
    std::uint32_t generator(std::uint32_t j) { return push({Op::Generator, j, 0}); }
    std::uint32_t product(std::uint32_t a, std::uint32_t b) { return push({Op::Product, a, b}); }
    std::uint32_t inverse(std::uint32_t a) { return push({Op::Inverse, a, 0}); }

    std::size_t size() const { return nodes_.size(); }
    const Node& operator[](std::size_t i) const { return nodes_[i]; }

    /// Evaluates every node. `mul(x, y)` must compute x*y and `inv(x)` the
    /// inverse, `one` is the identity of the target group.
    template <class T, class Mul, class Inv>
    std::vector<T> evaluate(const std::vector<T>& gens, const T& one, Mul mul, Inv inv) const {
        std::vector<T> v;
        v.reserve(nodes_.size());
        for (const auto& n : nodes_) {
            switch (n.op) {
            case Op::Identity: v.push_back(one); break;
            case Op::Generator:
                if (n.a >= gens.size()) throw InvalidInput("program refers to a missing generator");
                v.push_back(gens[n.a]);
                break;
            case Op::Product: v.push_back(mul(v[n.a], v[n.b])); break;
            case Op::Inverse: v.push_back(inv(v[n.a])); break;
            }
        }
        return v;
    }

private:
    std::uint32_t push(Node n) {
        nodes_.push_back(n);
        return static_cast<std::uint32_t>(nodes_.size() - 1);
    }

    std::vector<Node> nodes_;
};

} // namespace centra
