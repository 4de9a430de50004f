/**************************************************************************
 * include/centra/pi_set.hpp
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
#include <sstream>
#include <string>
#include <vector>

#include "centra/errors.hpp"
#include "centra/number_theory.hpp"
#include "centra/permutation.hpp"

namespace centra {

/// A set of primes, or the set of all primes.
class PiSet {
public:
    PiSet() = default;

    explicit PiSet(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
        std::sort(primes_.begin(), primes_.end());
        primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
        for (auto p : primes_)
            if (!nt::is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
    }

    static PiSet all() {
        PiSet s;
        s.all_ = true;
        return s;
    }

    /// "2,3,5" or "all".
    static PiSet parse(const std::string& text) {
        if (text == "all") return all();
        std::vector<std::uint64_t> ps;
        std::istringstream is(text);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                throw InvalidInput("malformed prime list '" + text + "'");
            ps.push_back(std::stoull(tok));
        }
        if (ps.empty()) throw InvalidInput("empty prime list");
        return PiSet(std::move(ps));
    }

    bool is_all() const { return all_; }
    const std::vector<std::uint64_t>& primes() const { return primes_; }
    bool empty() const { return !all_ && primes_.empty(); }

    bool contains(std::uint64_t p) const {
        return all_ ? nt::is_prime(p) : std::binary_search(primes_.begin(), primes_.end(), p);
    }

    /// Smallest prime in the set; 2 for the set of all primes.
    std::uint64_t smallest() const {
        if (all_) return 2;
        if (primes_.empty()) throw InvalidInput("smallest prime of an empty set");
        return primes_.front();
    }

    /// Intersection with the prime divisors of n.
    PiSet restrict_to(const std::vector<std::uint64_t>& divisors) const {
        std::vector<std::uint64_t> out;
        for (auto p : divisors)
            if (contains(p)) out.push_back(p);
        return PiSet(std::move(out));
    }

    bool is_subset_of(const PiSet& other) const {
        if (other.all_) return true;
        if (all_) return false;
        return std::includes(other.primes_.begin(), other.primes_.end(), primes_.begin(), primes_.end());
    }

    std::string to_string() const {
        if (all_) return "all";
        std::string s;
        for (std::size_t i = 0; i < primes_.size(); ++i) s += (i ? "," : "") + std::to_string(primes_[i]);
        return s;
    }

    friend bool operator==(const PiSet&, const PiSet&) = default;

private:
    std::vector<std::uint64_t> primes_;
    bool all_ = false;
};

/// Prime divisors of a group order.
inline std::vector<std::uint64_t> prime_divisors(const Order& n) {
    std::vector<std::uint64_t> out;
    Order m = n;
    for (std::uint64_t d = 2; Order(d) * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) out.push_back(static_cast<std::uint64_t>(m));
    return out;
}

/// True iff every prime divisor of the order of x lies in pi.
inline bool is_pi_element(const Permutation& x, const PiSet& pi) {
    for (auto len : x.cycle_lengths())
        for (auto p : nt::prime_divisors(len))
            if (!pi.contains(p)) return false;
    return true;
}

} // namespace centra
