/**************************************************************************
 * include/centra/properties.hpp
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

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "centra/catalogue.hpp"
#include "centra/errors.hpp"
#include "centra/grpstruct.hpp"
#include "centra/pi_set.hpp"
#include "centra/tables.hpp"

namespace centra {

enum class Outcome { Holds, Fails, Capped };

inline std::string to_string(Outcome o) {
    switch (o) {
    case Outcome::Holds: return "holds";
    case Outcome::Fails: return "fails";
    case Outcome::Capped: return "capped";
    }
    return {};
}

inline Outcome parse_outcome(const std::string& s) {
    if (s == "holds") return Outcome::Holds;
    if (s == "fails") return Outcome::Fails;
    if (s == "capped") return Outcome::Capped;
    throw InvalidInput("unknown outcome '" + s + "'");
}

struct Witness {
    Permutation element;
    Order order = 0;
    Order centraliser_order = 0;
    std::vector<Order> derived_orders;
};

struct PropertyReport {
    std::string group;
    PiSet pi;
    Outcome outcome = Outcome::Holds;
    std::optional<Witness> witness;
    std::uint64_t classes_examined = 0;
    std::uint64_t cap = kDefaultElementCap;
    std::uint64_t seed = 0;
    std::uint64_t elapsed_ms = 0;
    std::string cap_message; ///< which limit bit, when capped
};

/// Decides whether C_G(x) is soluble for every non-central pi-element x,
/// one class representative at a time; stops at the first insoluble one.
inline PropertyReport check_soluble_pi_centralisers(const PermGroup& g, const PiSet& pi, std::uint64_t cap = kDefaultElementCap,
                                                    std::string name = "", std::uint64_t seed = 0,
                                                    CentraliserMethod method = CentraliserMethod::Automatic) {
    const auto start = std::chrono::steady_clock::now();
    PropertyReport r;
    r.group = std::move(name);
    r.pi = pi;
    r.cap = cap;
    r.seed = seed;
    try {
        const auto z = centre(g, cap);
        for (const auto& cls : conjugacy_representatives(g, cap)) {
            const auto& x = cls.representative;
            if (z.contains(x) || !is_pi_element(x, pi)) continue;
            ++r.classes_examined;
            const auto c = centraliser(g, x, cap, method);
            auto series = derived_series(c.group);
            if (!series.soluble) {
                r.outcome = Outcome::Fails;
                r.witness = Witness{x, element_order(x), c.order(), std::move(series.orders)};
                break;
            }
        }
    } catch (const CapExceeded& e) {
        r.outcome = Outcome::Capped;
        r.witness.reset();
        r.cap_message = e.what();
    }
    r.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    return r;
}

/// Re-checks a witness against the group alone: a member of G, non-central,
/// a pi-element, with the recorded order and an insoluble centraliser of
/// the recorded order. Returns an empty string or the first failed condition.
inline std::string verify_witness(const PermGroup& g, const PiSet& pi, const Witness& w, std::uint64_t cap = kDefaultElementCap) {
    if (!g.contains(w.element)) return "element is not in the group";
    if (centre(g, cap).contains(w.element)) return "element is central";
    if (!is_pi_element(w.element, pi)) return "element is not a pi-element";
    if (element_order(w.element) != w.order) return "recorded order is wrong";
    const auto c = centraliser(g, w.element, cap);
    if (c.order() != w.centraliser_order) return "recorded centraliser order is wrong";
    const auto s = derived_series(c.group);
    if (s.soluble) return "centraliser is soluble";
    if (s.orders != w.derived_orders) return "recorded derived series is wrong";
    return {};
}

// ------------------------------------------------------------ cross-check

/// Per-class data of one group, reusable across prime sets.
struct ClassProfile {
    struct Row {
        Permutation representative;
        std::vector<std::uint64_t> primes; ///< of the element order
        bool central = false;
        Order centraliser_order = 0;
        SeriesReport series;
    };
    std::vector<Row> rows;

    static ClassProfile of(const PermGroup& g, std::uint64_t cap) {
        ClassProfile p;
        const auto z = centre(g, cap);
        for (const auto& cls : conjugacy_representatives(g, cap)) {
            Row r;
            r.representative = cls.representative;
            r.primes = prime_divisors(element_order(cls.representative));
            r.central = z.contains(cls.representative);
            if (!r.central) {
                const auto c = centraliser(g, cls.representative, cap);
                r.centraliser_order = c.order();
                r.series = derived_series(c.group);
            }
            p.rows.push_back(std::move(r));
        }
        return p;
    }

    /// Same verdict and witness as check_soluble_pi_centralisers.
    std::optional<const Row*> first_failure(const PiSet& pi) const {
        for (const auto& r : rows) {
            if (r.central) continue;
            bool in = true;
            for (auto p : r.primes) in = in && pi.contains(p);
            if (in && !r.series.soluble) return &r;
        }
        return std::nullopt;
    }
};

struct CrosscheckRow {
    std::string group;
    PiSet pi_effective; ///< pi restricted to the primes dividing |S|
    std::string status; ///< skipped, fails, consistent, violation, capped
    std::string membership; ///< matching identification and table part
};

struct CrosscheckReport {
    PiSet pi;
    std::vector<CrosscheckRow> rows;
    std::uint64_t violations = 0;
};

/// Soundness of the classification on the catalogue: every simple group
/// whose non-central pi-element centralisers are all soluble must lie in
/// the union of the table collections for pi restricted to pi(S). Groups
/// with pi(S) disjoint from pi are skipped.
class Crosschecker {
public:
    explicit Crosschecker(std::uint64_t cap = kDefaultElementCap) : cap_(cap) {}

    CrosscheckReport run(const PiSet& pi, const std::vector<std::string>& only = {}) {
        CrosscheckReport rep;
        rep.pi = pi;
        for (const auto& e : catalogue()) {
            if (!e.simple) continue;
            if (!only.empty() && std::find(only.begin(), only.end(), e.name) == only.end()) continue;
            CrosscheckRow row;
            row.group = e.name;
            const auto& g = group(e.name);
            row.pi_effective = pi.restrict_to(prime_divisors(g.order()));
            if (row.pi_effective.empty()) {
                row.status = "skipped";
                rep.rows.push_back(std::move(row));
                continue;
            }
            const ClassProfile* prof = nullptr;
            try {
                prof = &profile(e.name);
            } catch (const CapExceeded&) {
                row.status = "capped";
                rep.rows.push_back(std::move(row));
                continue;
            }
            if (prof->first_failure(row.pi_effective)) {
                row.status = "fails";
            } else {
                row.status = "violation";
                for (const auto& id : e.identifications) {
                    const auto part = table_membership(id, row.pi_effective);
                    if (part.empty()) continue;
                    row.status = "consistent";
                    row.membership = id.to_string() + " in " + part;
                    break;
                }
                if (row.status == "violation") ++rep.violations;
            }
            rep.rows.push_back(std::move(row));
        }
        return rep;
    }

    const PermGroup& group(const std::string& name) {
        auto it = groups_.find(name);
        if (it == groups_.end()) it = groups_.emplace(name, build(name)).first;
        return it->second;
    }

    const ClassProfile& profile(const std::string& name) {
        auto it = profiles_.find(name);
        if (it == profiles_.end()) it = profiles_.emplace(name, ClassProfile::of(group(name), cap_)).first;
        return it->second;
    }

private:
    std::uint64_t cap_;
    std::map<std::string, PermGroup> groups_;
    std::map<std::string, ClassProfile> profiles_;
};

inline CrosscheckReport classification_crosscheck(const PiSet& pi, std::uint64_t cap = kDefaultElementCap,
                                            const std::vector<std::string>& only = {}) {
    Crosschecker c(cap);
    return c.run(pi, only);
}

} // namespace centra
