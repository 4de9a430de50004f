/**************************************************************************
 * include/centra/tables.hpp
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
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "centra/catalogue.hpp"
#include "centra/errors.hpp"
#include "centra/number_theory.hpp"
#include "centra/pi_set.hpp"

namespace centra {

/// Row bound of the form c or p + c, with p the smallest prime of pi.
struct RankBound {
    bool plus_p = false;
    std::uint64_t c = 0;

    std::uint64_t at(std::uint64_t p) const { return plus_p ? p + c : c; }
    std::string to_string() const { return plus_p ? "p+" + std::to_string(c) : std::to_string(c); }
    static RankBound parse(const std::string& s) {
        const bool plus = s.rfind("p+", 0) == 0;
        const auto digits = plus ? s.substr(2) : s;
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw InvalidInput("bad rank bound '" + s + "'");
        return {plus, std::stoull(digits)};
    }
    friend bool operator==(const RankBound&, const RankBound&) = default;
};

struct Table1Row {
    std::string kind; ///< explicit, suzuki, psl2_union
    std::vector<std::uint64_t> pi; ///< explicit rows only
    std::string pi_text;           ///< symbolic rows only
    std::vector<std::string> factors;
    friend bool operator==(const Table1Row&, const Table1Row&) = default;
};

/// Encodings of the five classification tables.
struct ClassTables {
    std::vector<Table1Row> table1;
    std::vector<RankBound> x_alt;   ///< rows: 3 in pi; 2 in pi and 3 not; neither
    std::vector<RankBound> x_class; ///< same row keys
    std::map<std::string, std::vector<std::uint64_t>> table3;
    std::map<std::string, std::uint64_t> table4;
    std::map<std::string, std::uint64_t> table5;

    friend bool operator==(const ClassTables&, const ClassTables&) = default;

    static const ClassTables& builtin() {
        static const ClassTables t = [] {
            ClassTables t;
            t.table1 = {
                {"suzuki", {}, "pi(2B2(2^p)) + {p}, p an odd prime", {"2B2(2^p)"}},
                {"psl2_union", {}, "union of pi(Aut(L2(q))) for q in Q0, Q0 a subset of Q of size at most 3",
                 {"L2(q), q in Q0"}},
                {"explicit", {2, 3, 5}, "", {"A5", "A6", "PSp4(3)"}},
                {"explicit", {2, 3, 7}, "", {"L3(2)", "L2(8)", "U3(3)"}},
                {"explicit", {2, 3, 13}, "", {"L3(3)"}},
            };
            t.x_alt = {{false, 7}, {false, 8}, {true, 4}};
            t.x_class = {{false, 7}, {false, 8}, {true, 4}};
            t.table3 = {
                {"M11", {2, 3, 5, 11}},
                {"M12", {3, 5, 11}},
                {"M22", {2, 3, 5, 7, 11}},
                {"M23", {5, 7, 11, 23}},
                {"M24", {5, 7, 11, 23}},
                {"HS", {7, 11}},
                {"J2", {7}},
                {"Co1", {11, 13, 23}},
                {"Co2", {7, 11, 23}},
                {"Co3", {7, 11, 23}},
                {"McL", {5, 7, 11}},
                {"Suz", {7, 11, 13}},
                {"He", {17}},
                {"HN", {11, 19}},
                {"Th", {5, 13, 19, 31}},
                {"Fi22", {7, 11, 13}},
                {"Fi23", {11, 13, 17, 23}},
                {"Fi24'", {11, 13, 17, 23, 29}},
                {"B", {11, 13, 17, 19, 23, 31, 47}},
                {"M", {19, 23, 29, 31, 41, 47, 59, 71}},
                {"J1", {3, 5, 7, 11, 19}},
                {"O'N", {5, 7, 11, 19, 31}},
                {"J3", {5, 17, 19}},
                {"Ru", {7, 13, 29}},
                {"J4", {11, 23, 29, 31, 37, 43}},
                {"Ly", {7, 11, 31, 37, 67}},
            };
            t.table4 = {{"2B2", 2}, {"2G2", 3}, {"3D4", 5}, {"G2", 5},  {"2F4", 5},
                        {"F4", 8},  {"2E6", 10}, {"E6", 10}, {"E7", 10}, {"E8", 10}};
            t.table5 = {{"M11", 6}, {"M12", 6},  {"M22", 7},   {"M23", 8},  {"M24", 8}, {"HS", 8},  {"J2", 6},
                        {"Co1", 9}, {"Co2", 8},  {"Co3", 8},   {"McL", 8},  {"Suz", 7}, {"He", 7},  {"HN", 12},
                        {"Th", 9},  {"Fi22", 10}, {"Fi23", 10}, {"Fi24'", 12}, {"B", 12}, {"M", 12}, {"J1", 5},
                        {"O'N", 7}, {"J3", 6},   {"Ru", 8},    {"J4", 8},   {"Ly", 11}};
            return t;
        }();
        return t;
    }

    static ClassTables from_json(const nlohmann::json& j) {
        ClassTables t;
        try {
            for (const auto& r : j.at("table1")) {
                Table1Row row;
                row.kind = r.at("kind").get<std::string>();
                if (r.at("pi").is_array()) row.pi = r.at("pi").get<std::vector<std::uint64_t>>();
                else row.pi_text = r.at("pi").get<std::string>();
                row.factors = r.at("factors").get<std::vector<std::string>>();
                t.table1.push_back(std::move(row));
            }
            for (const auto& r : j.at("table2").at("x_alt")) t.x_alt.push_back(RankBound::parse(r.at("max_n")));
            for (const auto& r : j.at("table2").at("x_class")) t.x_class.push_back(RankBound::parse(r.at("max_n")));
            t.table3 = j.at("table3").get<decltype(t.table3)>();
            t.table4 = j.at("table4").get<decltype(t.table4)>();
            t.table5 = j.at("table5").get<decltype(t.table5)>();
        } catch (const nlohmann::json::exception& e) {
            throw InvalidInput(std::string("malformed tables file: ") + e.what());
        }
        return t;
    }

    static ClassTables load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw InvalidInput("cannot read " + path);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw InvalidInput(path + ": " + e.what());
        }
        return from_json(j);
    }

    /// One line per row, independent of file formatting.
    std::string canonical_text() const {
        std::string s;
        auto list = [](const std::vector<std::uint64_t>& v) {
            std::string r;
            for (std::size_t i = 0; i < v.size(); ++i) r += (i ? "," : "") + std::to_string(v[i]);
            return r;
        };
        for (const auto& r : table1) {
            s += "1|" + r.kind + "|" + (r.pi.empty() ? r.pi_text : list(r.pi)) + "|";
            for (std::size_t i = 0; i < r.factors.size(); ++i) s += (i ? "," : "") + r.factors[i];
            s += "\n";
        }
        for (std::size_t i = 0; i < x_alt.size(); ++i) s += "2|alt|" + std::to_string(i) + "|" + x_alt[i].to_string() + "\n";
        for (std::size_t i = 0; i < x_class.size(); ++i)
            s += "2|class|" + std::to_string(i) + "|" + x_class[i].to_string() + "\n";
        for (const auto& [k, v] : table3) s += "3|" + k + "|" + list(v) + "\n";
        for (const auto& [k, v] : table4) s += "4|" + k + "|" + std::to_string(v) + "\n";
        for (const auto& [k, v] : table5) s += "5|" + k + "|" + std::to_string(v) + "\n";
        return s;
    }

    /// FNV-1a of canonical_text().
    std::uint64_t hash() const {
        std::uint64_t h = 14695981039346656037ull;
        for (unsigned char c : canonical_text()) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return h;
    }
};

inline std::string tables_path() { return data_dir() + "/tables.json"; }

namespace detail {

/// Row of the alternating and classical parts: 0 if 3 in pi, 1 if 2 in pi
/// and 3 not, 2 otherwise.
inline std::size_t table2_row(const PiSet& pi) {
    if (pi.contains(3)) return 0;
    if (pi.contains(2)) return 1;
    return 2;
}

inline const std::vector<std::uint64_t>& table3_row(const std::string& name) {
    const auto& t = ClassTables::builtin().table3;
    auto it = t.find(name);
    if (it == t.end()) throw InvalidInput("unknown sporadic group '" + name + "'");
    return it->second;
}

} // namespace detail

inline std::uint64_t x_alt_bound(const PiSet& pi) {
    return ClassTables::builtin().x_alt[detail::table2_row(pi)].at(pi.smallest());
}

inline bool x_alt_membership(std::uint64_t n, const PiSet& pi) {
    if (n < 5) throw InvalidInput("A_n is simple only for n >= 5");
    return n <= x_alt_bound(pi);
}

/// Largest d with every non-abelian section of thickness d allowed.
inline std::uint64_t thickness_bound(std::uint64_t p) {
    if (!nt::is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
    return p + 4 + (p == 2 ? 2 : 0);
}

enum class ClassicalFamily { L, U, O, Sp };

inline ClassicalFamily parse_classical_family(const std::string& s) {
    if (s == "L") return ClassicalFamily::L;
    if (s == "U") return ClassicalFamily::U;
    if (s == "O") return ClassicalFamily::O;
    if (s == "Sp") return ClassicalFamily::Sp;
    throw InvalidInput("unknown classical family '" + s + "'");
}

/// Rank bound n of the classical part; the bound is the same for every family.
inline std::uint64_t x_class_bound(ClassicalFamily, const PiSet& pi) {
    return ClassTables::builtin().x_class[detail::table2_row(pi)].at(pi.smallest());
}

/// The alternative rank bound p + 4, applied for every pi.
inline std::uint64_t x_class_bound_variant(const PiSet& pi) { return pi.smallest() + 4; }

/// Membership of the classical group of natural dimension `dim` over GF(q).
/// Symplectic groups PSp_{delta(q) n}(q) are measured by n = dim / delta(q),
/// with delta(q) = 2 for odd q and 1 for even q.
inline bool x_class_membership(ClassicalFamily fam, std::uint64_t dim, std::uint64_t q, const PiSet& pi) {
    std::uint64_t n = dim;
    if (fam == ClassicalFamily::Sp && q % 2 == 1) n = dim / 2;
    return n <= x_class_bound(fam, pi);
}

inline std::uint64_t psp_bound(const PiSet& pi) {
    const auto p = pi.smallest();
    return p + 6 + (p == 2 ? 8 : 0) + (p == 3 ? 6 : 0) + (p == 5 ? 4 : 0);
}

inline bool x_spor_membership(const std::string& name, const PiSet& pi) {
    const auto& row = detail::table3_row(name);
    return pi.is_subset_of(PiSet(row));
}

inline std::uint64_t sporadic_alt_degree(const std::string& name) {
    const auto& t = ClassTables::builtin().table5;
    auto it = t.find(name);
    if (it == t.end()) throw InvalidInput("unknown sporadic group '" + name + "'");
    return it->second;
}

inline std::uint64_t exceptional_alt_degree(const std::string& family) {
    const auto& t = ClassTables::builtin().table4;
    auto it = t.find(family);
    if (it == t.end()) throw InvalidInput("unknown exceptional family '" + family + "'");
    return it->second;
}

/// q = 2^r or 3^r with r an odd prime, or q an odd prime congruent to 0 or
/// +-2 mod 5.
inline bool q_in_Q(std::uint64_t q) {
    if (q < 2) return false;
    if (auto pp = nt::prime_power(q)) {
        const auto [r, e] = *pp;
        if ((r == 2 || r == 3) && e > 2 && nt::is_prime(e)) return true;
        if (e == 1 && r != 2) return r % 5 == 0 || r % 5 == 2 || r % 5 == 3;
    }
    return false;
}

namespace detail {

using Big = boost::multiprecision::cpp_int;

/// True iff every prime divisor of n lies in pi.
inline bool divisors_within(Big n, const PiSet& pi) {
    for (auto p : pi.primes())
        while (n % p == 0) n /= p;
    return n == 1;
}

inline std::set<std::uint64_t> primes_dividing(const Big& n, const PiSet& pi) {
    std::set<std::uint64_t> out;
    for (auto p : pi.primes())
        if (n % p == 0) out.insert(p);
    return out;
}

} // namespace detail

/// The rows of the first table whose prime set equals pi, as the list of
/// composition factors they allow.
inline std::vector<std::string> table1_lookup(const PiSet& pi) {
    using detail::Big;
    if (pi.is_all()) throw InvalidInput("table lookup needs a finite prime set");
    std::vector<std::string> out;
    const std::set<std::uint64_t> want(pi.primes().begin(), pi.primes().end());
    for (const auto& r : ClassTables::builtin().table1)
        if (r.kind == "explicit" && PiSet(r.pi) == pi) out.insert(out.end(), r.factors.begin(), r.factors.end());

    // 2B2(2^p): |S| = q^2 (q^2 + 1)(q - 1), q = 2^p
    for (auto p : pi.primes()) {
        if (p == 2 || p > 61) continue;
        const Big q = Big(1) << p;
        const Big order = q * q * (q * q + 1) * (q - 1);
        if (!detail::divisors_within(order, pi)) continue;
        auto got = detail::primes_dividing(order, pi);
        got.insert(p);
        if (got == want) out.push_back("2B2(" + q.str() + ")");
    }

    // L2(q), q in Q and q >= 4, with pi(Aut(L2(q))) inside pi
    struct Cand {
        std::string name;
        std::set<std::uint64_t> primes;
    };
    std::vector<Cand> cands;
    auto consider = [&](std::uint64_t r, std::uint64_t f) {
        const Big q = boost::multiprecision::pow(Big(r), static_cast<unsigned>(f));
        const Big d = (r == 2) ? 1 : 2;
        Big order = q * (q * q - 1) / d;
        order *= f * d; // outer automorphisms: field and diagonal
        if (!detail::divisors_within(order, pi)) return;
        cands.push_back({"L2(" + q.str() + ")", detail::primes_dividing(order, pi)});
    };
    for (auto r : pi.primes()) {
        if (r >= 5 && q_in_Q(r)) consider(r, 1);
        if (r > 2 && r <= 40) {
            consider(2, r);
            consider(3, r);
        }
    }
    std::set<std::string> hits;
    const std::size_t n = cands.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = j; k < n; ++k) {
                std::set<std::uint64_t> u = cands[i].primes;
                u.insert(cands[j].primes.begin(), cands[j].primes.end());
                u.insert(cands[k].primes.begin(), cands[k].primes.end());
                if (u != want) continue;
                hits.insert(cands[i].name);
                hits.insert(cands[j].name);
                hits.insert(cands[k].name);
            }
    out.insert(out.end(), hits.begin(), hits.end());
    return out;
}

/// Which part of the union of the second table an identification falls in,
/// or empty when none does.
inline std::string table_membership(const Identification& id, const PiSet& pi) {
    using K = Identification::Kind;
    switch (id.kind) {
    case K::Alternating: return x_alt_membership(id.n, pi) ? "X_Alt" : "";
    case K::Classical:
        return x_class_membership(parse_classical_family(id.family), id.n, id.q, pi) ? "X_Class" : "";
    case K::Exceptional: return "X_Exc";
    case K::Sporadic: return x_spor_membership(id.family, pi) ? "X_Spor" : "";
    }
    return "";
}

} // namespace centra
