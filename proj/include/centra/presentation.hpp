/**************************************************************************
 * include/centra/presentation.hpp
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
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "centra/errors.hpp"

namespace centra {

/// Word in the generators: +j stands for generator j, -j for its inverse
/// (1-based, as in presentation files).
using Word = std::vector<int>;

struct Presentation {
    std::size_t generator_count = 0;
    std::vector<Word> relators;

    void validate() const {
        for (const auto& w : relators)
            for (int s : w)
                if (s == 0 || static_cast<std::size_t>(std::abs(s)) > generator_count)
                    throw InvalidInput("relator letter " + std::to_string(s) + " outside 1.." + std::to_string(generator_count));
    }

    /// Evaluates w with `gens[j-1]` for generator j.
    template <class T, class Mul, class Inv>
    static T evaluate(const Word& w, const std::vector<T>& gens, const T& one, Mul mul, Inv inv) {
        T acc = one;
        for (int s : w) {
            const auto& g = gens.at(static_cast<std::size_t>(std::abs(s)) - 1);
            acc = mul(acc, s > 0 ? g : inv(g));
        }
        return acc;
    }

    std::string to_text() const {
        std::string s = "gens " + std::to_string(generator_count) + "\n";
        for (const auto& w : relators) {
            for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::to_string(w[i]);
            s += "\n";
        }
        return s;
    }

    static Presentation parse(std::istream& in) {
        Presentation p;
        bool have_header = false;
        std::string line;
        while (std::getline(in, line)) {
            if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
            std::istringstream ls(line);
            std::string first;
            if (!(ls >> first)) continue;
            if (!have_header) {
                if (first != "gens" || !(ls >> p.generator_count) || p.generator_count == 0)
                    throw InvalidInput("presentation must start with 'gens <r>'");
                have_header = true;
                continue;
            }
            Word w;
            std::istringstream ws(line);
            long long v;
            while (ws >> v) w.push_back(static_cast<int>(v));
            if (!ws.eof()) throw InvalidInput("malformed relator line '" + line + "'");
            p.relators.push_back(std::move(w));
        }
        if (!have_header) throw InvalidInput("presentation has no 'gens' line");
        p.validate();
        return p;
    }

    static Presentation load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw InvalidInput("cannot read presentation file " + path);
        return parse(in);
    }
};

/// The word w^n.
inline Word power(const Word& w, std::size_t n) {
    Word r;
    for (std::size_t i = 0; i < n; ++i) r.insert(r.end(), w.begin(), w.end());
    return r;
}

/// Index of the subgroup generated by `subgroup` in the finitely presented
/// group, by Felsch-style coset enumeration: cosets are defined in table
/// order and every definition is followed by deductions from all cyclic
/// conjugates of the relators. Throws CapExceeded once more than max_cosets
/// cosets are live at any time.
inline std::uint64_t coset_enumeration(const Presentation& pres, const std::vector<Word>& subgroup = {},
                                       std::size_t max_cosets = 2'000'000) {
    pres.validate();
    const std::size_t ncols = 2 * pres.generator_count;
    auto col = [](int s) { return static_cast<std::size_t>(2 * (std::abs(s) - 1) + (s < 0 ? 1 : 0)); };
    using Cols = std::vector<std::size_t>;
    std::vector<Cols> relw;
    for (const auto& w : pres.relators) {
        Cols c;
        for (int s : w) c.push_back(col(s));
        if (!c.empty()) relw.push_back(std::move(c));
    }
    // Cyclic conjugates of relators and their inverses, by first letter.
    std::vector<std::vector<Cols>> by_first(ncols);
    std::set<Cols> seen;
    for (const auto& r : relw) {
        Cols inv(r.rbegin(), r.rend());
        for (auto& x : inv) x ^= 1;
        for (const Cols* w : {&r, static_cast<const Cols*>(&inv)})
            for (std::size_t k = 0; k < w->size(); ++k) {
                Cols c(w->begin() + static_cast<long>(k), w->end());
                c.insert(c.end(), w->begin(), w->begin() + static_cast<long>(k));
                if (seen.insert(c).second) by_first[c.front()].push_back(std::move(c));
            }
    }
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> table(ncols, kNone);
    std::vector<std::size_t> parent{0};
    std::size_t live = 1;
    std::vector<std::pair<std::size_t, std::size_t>> deductions;

    auto at = [&](std::size_t c, std::size_t x) -> std::size_t& { return table[c * ncols + x]; };
    auto is_live = [&](std::size_t c) { return parent[c] == c; };
    auto rep = [&](std::size_t c) {
        std::size_t r = c;
        while (parent[r] != r) r = parent[r];
        while (parent[c] != r) {
            std::size_t n = parent[c];
            parent[c] = r;
            c = n;
        }
        return r;
    };
    auto define = [&](std::size_t c, std::size_t x) {
        if (live >= max_cosets) throw CapExceeded("coset enumeration", live + 1, max_cosets);
        const std::size_t d = parent.size();
        parent.push_back(d);
        table.resize(table.size() + ncols, kNone);
        ++live;
        at(c, x) = d;
        at(d, x ^ 1) = c;
        deductions.emplace_back(c, x);
    };
    std::vector<std::size_t> queue;
    auto merge = [&](std::size_t k, std::size_t l) {
        k = rep(k);
        l = rep(l);
        if (k == l) return;
        if (k > l) std::swap(k, l);
        parent[l] = k;
        --live;
        queue.push_back(l);
    };
    auto coincidence = [&](std::size_t a, std::size_t b) {
        queue.clear();
        merge(a, b);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const std::size_t e = queue[qi];
            for (std::size_t x = 0; x < ncols; ++x) {
                const std::size_t f = at(e, x);
                if (f == kNone) continue;
                at(f, x ^ 1) = kNone;
                const std::size_t e1 = rep(e), f1 = rep(f);
                if (at(e1, x) != kNone) merge(f1, at(e1, x));
                else if (at(f1, x ^ 1) != kNone) merge(e1, at(f1, x ^ 1));
                else {
                    at(e1, x) = f1;
                    at(f1, x ^ 1) = e1;
                    deductions.emplace_back(e1, x);
                }
            }
        }
    };
    // Traces w from c both ways; deduces a single missing entry or records
    // a coincidence. With fill, missing entries are defined (HLT step).
    auto scan = [&](std::size_t c, const Cols& w, bool fill) {
        std::size_t f = c, b = c;
        std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
        while (true) {
            while (i <= j && at(f, w[i]) != kNone) f = at(f, w[i++]);
            if (i > j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j >= i && at(b, w[j] ^ 1) != kNone) b = at(b, w[j--] ^ 1);
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (i == j) {
                at(f, w[i]) = b;
                at(b, w[i] ^ 1) = f;
                deductions.emplace_back(f, w[i]);
                return;
            }
            if (!fill) return;
            define(f, w[i]);
        }
    };
    auto process_deductions = [&] {
        while (!deductions.empty()) {
            auto [c, x] = deductions.back();
            deductions.pop_back();
            if (!is_live(c)) continue;
            for (const auto& w : by_first[x]) {
                scan(c, w, false);
                if (!is_live(c)) break;
            }
            if (!is_live(c) || at(c, x) == kNone) continue;
            const std::size_t d = at(c, x);
            for (const auto& w : by_first[x ^ 1]) {
                if (!is_live(d)) break;
                scan(d, w, false);
            }
        }
    };

    for (const auto& w : subgroup) {
        Cols c;
        for (int s : w) c.push_back(col(s));
        if (c.empty()) continue;
        scan(0, c, true);
        process_deductions();
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t c = 0; c < parent.size(); ++c) {
            for (std::size_t x = 0; x < ncols && is_live(c); ++x) {
                if (at(c, x) != kNone) continue;
                define(c, x);
                process_deductions();
                changed = true;
            }
        }
        // Consistency sweep: every relator must close at every live coset.
        for (std::size_t c = 0; c < parent.size(); ++c) {
            for (const auto& r : relw) {
                if (!is_live(c)) break;
                const std::size_t before = live;
                scan(c, r, false);
                if (!deductions.empty() || live != before) changed = true;
                process_deductions();
            }
        }
    }
    return live;
}

} // namespace centra
