/**************************************************************************
 * tools/gen_data.cpp
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

// Regenerates the shipped files under data/: generator files for the
// file-backed groups, presentations with matching generators, and the
// example module. Every search is seeded, so reruns give identical files.
//
//     gen_data <data-dir>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "centra/catalogue.hpp"
#include "centra/grpstruct.hpp"
#include "centra/modrep.hpp"
#include "centra/perm_io.hpp"
#include "centra/presentation.hpp"

using namespace centra;
namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& text) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
    std::cout << "wrote " << path.string() << "\n";
}

void write_gens(const fs::path& path, const PermGroup& g, const std::vector<Permutation>& gens,
                std::vector<std::string> comments) {
    GeneratorFile f;
    f.degree = g.degree();
    f.order = g.order();
    f.generators = gens;
    f.comments = std::move(comments);
    write_file(path, f.to_text());
}

PermGroup from_cycles(std::size_t n, const std::vector<std::string>& cycles) {
    std::vector<Permutation> gens;
    for (const auto& c : cycles) gens.push_back(parse_cycles(c, n));
    return PermGroup::generate(n, gens);
}

/// First seeded pair of random elements generating all of g.
std::vector<Permutation> two_generators(const PermGroup& g, std::uint64_t seed = 1) {
    for (std::uint64_t s = seed;; s += 2) {
        auto a = g.random_element(s), b = g.random_element(s + 1);
        if (PermGroup::generate(g.degree(), {a, b}).order() == g.order()) return {a, b};
    }
}

/// Group on the orbit of `start` under matrices, projectively.
PermGroup projective_group(const std::vector<Matrix>& mats, const Vec& start) {
    auto act = orbit_action(mats, {start}, true, kMaxDegree);
    return PermGroup::generate(act.points.size(), act.generators);
}

PermGroup unitary_3_3() {
    auto f = FiniteField::make(3, 2);
    std::vector<Vec> iso;
    for (std::uint64_t c = 1; c < 729; ++c) {
        Vec v = decode_vector(*f, c, 3);
        if (normalise_projective(*f, v) != v) continue;
        std::uint32_t s = 0;
        for (auto x : v) s = f->add(s, f->pow(x, 4));
        if (!s) iso.push_back(v);
    }
    std::uint32_t tz = 0;
    for (std::uint32_t a = 1; a < 9 && !tz; ++a)
        if (f->add(a, f->pow(a, 3)) == 0) tz = a;
    // unitary transvections x -> x + tz h(x, v) v with h(x, y) = sum x_i y_i^3
    std::vector<Matrix> mats;
    for (std::size_t k : {0, 7, 10}) {
        const auto& v = iso[k];
        Matrix m(f, 3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) m(i, j) = f->add(i == j ? 1 : 0, f->mul(tz, f->mul(f->pow(v[i], 3), v[j])));
        mats.push_back(m);
    }
    return projective_group(mats, iso[0]);
}

PermGroup symplectic_4_3() {
    auto f = FiniteField::make(3);
    // B(x, y) = x1 y3 + x2 y4 - x3 y1 - x4 y2; transvections x -> x + B(x, v) v
    auto form = [](const Vec& x, const Vec& y) {
        return static_cast<std::uint32_t>((x[0] * y[2] + x[1] * y[3] + 2 * x[2] * y[0] + 2 * x[3] * y[1]) % 3);
    };
    std::vector<Vec> vs = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 0, 0}, {1, 0, 1, 1}};
    std::vector<Matrix> mats;
    for (const auto& v : vs) {
        Matrix m(f, 4, 4);
        for (std::size_t i = 0; i < 4; ++i) {
            Vec e(4, 0);
            e[i] = 1;
            const auto c = form(e, v);
            for (std::size_t j = 0; j < 4; ++j) m(i, j) = (e[j] + c * v[j]) % 3;
        }
        mats.push_back(m);
    }
    return projective_group(mats, {1, 0, 0, 0});
}

PermGroup suzuki_8() {
    auto f = FiniteField::make(2, 3);
    auto th = [&](std::uint32_t x) { return f->pow(x, 4); };
    auto S = [&](std::uint32_t a, std::uint32_t b) {
        Matrix m = Matrix::identity(f, 4);
        m(1, 0) = a;
        m(2, 0) = b;
        m(2, 1) = th(a);
        m(3, 0) = f->add(f->add(f->mul(f->pow(a, 2), th(a)), f->mul(a, b)), th(b));
        m(3, 1) = f->add(f->mul(a, th(a)), b);
        m(3, 2) = a;
        return m;
    };
    const auto w = f->primitive();
    Matrix t(f, 4, 4);
    t(0, 3) = t(1, 2) = t(2, 1) = t(3, 0) = 1;
    Matrix d(f, 4, 4);
    d(0, 0) = f->pow(w, 3);
    d(1, 1) = f->pow(w, 2);
    d(2, 2) = f->pow(w, -2);
    d(3, 3) = f->pow(w, -3);
    return projective_group({S(1, 0), S(0, 1), S(w, 0), d, t}, {0, 0, 0, 1});
}

struct PresentationSpec {
    std::string stem;
    PermGroup group;
    std::vector<std::uint64_t> gen_orders;  ///< required orders of a, b
    std::uint64_t product_order;            ///< required order of ab
};

Word cat(std::initializer_list<Word> ws) {
    Word r;
    for (const auto& w : ws) r.insert(r.end(), w.begin(), w.end());
    return r;
}

std::uint64_t word_order(const Word& w, const std::vector<Permutation>& gens) {
    auto one = Permutation::identity(gens.front().degree());
    auto x = Presentation::evaluate(w, gens, one, std::multiplies<>(), [](const Permutation& p) { return p.inverse(); });
    return static_cast<std::uint64_t>(element_order(x));
}

Word free_reduce(const Word& w) {
    Word r;
    for (int s : w) {
        if (!r.empty() && r.back() == -s) r.pop_back();
        else r.push_back(s);
    }
    return r;
}

/// Relators w_x s w_{xs}^-1 for the non-tree edges of a breadth-first
/// spanning tree of the Cayley graph, shortest first.
std::vector<Word> cayley_relators(const PermGroup& g, const std::vector<Permutation>& gens) {
    std::unordered_map<Permutation, Word, PermutationHash> word;
    std::vector<Permutation> order{Permutation::identity(g.degree())};
    word.emplace(order.front(), Word{});
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t s = 0; s < gens.size(); ++s) {
            auto y = order[i] * gens[s];
            if (word.count(y)) continue;
            auto w = word.at(order[i]);
            w.push_back(static_cast<int>(s) + 1);
            word.emplace(y, std::move(w));
            order.push_back(std::move(y));
        }
    std::vector<Word> out;
    for (const auto& x : order)
        for (std::size_t s = 0; s < gens.size(); ++s) {
            Word w = word.at(x);
            w.push_back(static_cast<int>(s) + 1);
            const auto& back = word.at(x * gens[s]);
            for (auto it = back.rbegin(); it != back.rend(); ++it) w.push_back(-*it);
            w = free_reduce(w);
            if (!w.empty()) out.push_back(std::move(w));
        }
    std::stable_sort(out.begin(), out.end(), [](const Word& u, const Word& v) { return u.size() < v.size(); });
    return out;
}

/// Seeded search for a generating pair with the required orders, then
/// greedy addition of relators until coset enumeration returns |G|, then pruning.
void make_presentation(const fs::path& dir, const PresentationSpec& spec, const std::vector<Word>& fixed) {
    const auto& g = spec.group;
    std::vector<Permutation> gens;
    for (std::uint64_t s = 1;; ++s) {
        auto a = g.random_element(2 * s), b = g.random_element(2 * s + 1);
        if (element_order(a) != spec.gen_orders[0] || element_order(b) != spec.gen_orders[1]) continue;
        if (element_order(a * b) != spec.product_order) continue;
        bool fixed_hold = true;
        for (const auto& w : fixed) fixed_hold = fixed_hold && word_order(w, {a, b}) == 1;
        if (!fixed_hold) continue;
        if (PermGroup::generate(g.degree(), {a, b}).order() != g.order()) continue;
        gens = {a, b};
        break;
    }
    Word a{1}, b{2}, A{-1}, B{-2};
    Presentation p;
    p.generator_count = 2;
    p.relators = {power(a, spec.gen_orders[0]), power(b, spec.gen_orders[1]), power(cat({a, b}), spec.product_order)};
    std::vector<Word> candidates = fixed;
    // words a b^e1 a b^e2 ... a b^ek, shortest first
    for (std::size_t k = 1; k <= 4; ++k)
        for (std::uint32_t signs = 0; signs < (1u << k); ++signs) {
            Word w;
            for (std::size_t i = 0; i < k; ++i) w = cat({w, a, (signs >> i) & 1 ? B : b});
            candidates.push_back(power(w, word_order(w, gens)));
        }
    // Cycle relators of the Cayley graph, which present G on their own.
    auto cycles = cayley_relators(g, gens);
    candidates.insert(candidates.end(), cycles.begin(), cycles.end());
    // Cosets of <b>: |<b>| <= order(b) in the presented group, so index
    // |G| / order(b) pins the presented group's order to |G|.
    const std::uint64_t target = static_cast<std::uint64_t>(g.order() / spec.gen_orders[1]);
    auto index_of = [&] {
        try {
            return coset_enumeration(p, {b}, 100'000);
        } catch (const CapExceeded&) {
            return std::uint64_t{0};
        }
    };
    // Shortest sufficient prefix of the candidates, by bisection.
    const auto base = p.relators;
    auto with_prefix = [&](std::size_t n) {
        p.relators = base;
        p.relators.insert(p.relators.end(), candidates.begin(), candidates.begin() + static_cast<long>(n));
        return index_of();
    };
    std::size_t lo = 0, hi = candidates.size();
    if (with_prefix(hi) != target) throw Error(spec.stem + ": no presentation found");
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (with_prefix(mid) == target) hi = mid;
        else lo = mid + 1;
    }
    std::uint64_t index = with_prefix(hi);
    if (index != target) throw Error(spec.stem + ": no presentation found");
    for (std::size_t i = p.relators.size(); i-- > 3;) {
        auto trial = p;
        trial.relators.erase(trial.relators.begin() + static_cast<long>(i));
        std::swap(p, trial);
        if (index_of() != target) std::swap(p, trial);
    }
    verify_relators(p, gens);
    std::string text = "# relators verified on " + spec.stem + ".gens; cosets of <b>: " + std::to_string(target) + "\n";
    write_file(dir / (spec.stem + ".pres"), text + p.to_text());
    write_gens(dir / (spec.stem + ".gens"), PermGroup::generate(g.degree(), gens), gens, {"generators a, b of " + spec.stem + ".pres"});
}

/// A 3-dimensional GF(2) module for L2(7) = L3(2), found by searching
/// GL_3(2) for a pair satisfying the presentation.
void make_l27_module(const fs::path& data) {
    auto sp = shipped_presentation("L2(7)");
    auto f = FiniteField::make(2);
    std::vector<Matrix> gl;
    for (std::uint32_t code = 0; code < 512; ++code) {
        Matrix m(f, 3, 3);
        for (std::size_t i = 0; i < 9; ++i) m(i / 3, i % 3) = (code >> i) & 1;
        if (rank(*f, m.row_list()) == 3) gl.push_back(m);
    }
    for (const auto& x : gl)
        for (const auto& y : gl) {
            if (x.is_identity()) continue;
            const std::vector<Matrix> imgs{x, y};
            bool ok = true;
            for (const auto& r : sp.presentation.relators) {
                auto v = Presentation::evaluate(r, imgs, Matrix::identity(f, 3), std::multiplies<>(),
                                                [](const Matrix& m) { return m.inverse(); });
                if (!v.is_identity()) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            GModule mod(sp.group, imgs, true);
            write_file(data / "modules" / "L2_7_natural_F2.mod",
                       "# 3-dimensional module of L2(7) = L3(2) over GF(2), generators as in presentations/L2_7.gens\n" + mod.to_text());
            return;
        }
    throw Error("no 3-dimensional module found");
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: gen_data <data-dir>\n";
        return 2;
    }
    const fs::path data = argv[1];
    try {
        auto m11 = from_cycles(11, {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"});
        write_gens(data / "M11.gens", m11, m11.generators(), {"Mathieu group M11 on 11 points"});
        auto m12 = from_cycles(12, {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)", "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)"});
        write_gens(data / "M12.gens", m12, m12.generators(), {"Mathieu group M12 on 12 points"});
        auto m22 = from_cycles(22, {"(1,2,3,4,5,6,7,8,9,10,11)(12,13,14,15,16,17,18,19,20,21,22)",
                                    "(1,4,5,9,3)(2,8,10,7,6)(12,15,16,20,14)(13,19,21,18,17)",
                                    "(1,21)(2,10,8,6)(3,13,4,17)(5,19,9,18)(11,22)(12,14,16,20)"});
        write_gens(data / "M22.gens", m22, m22.generators(), {"Mathieu group M22 on 22 points"});

        auto u33 = unitary_3_3();
        write_gens(data / "U3_3.gens", u33, two_generators(u33),
                   {"U3(3) on the 28 isotropic points of the Hermitian form sum x_i^4 over GF(9)",
                    "generated by unitary transvections; two random generators kept"});
        auto psp = symplectic_4_3();
        write_gens(data / "PSp4_3.gens", psp, two_generators(psp),
                   {"PSp4(3) on the 40 points of PG(3,3), from symplectic transvections; two random generators kept"});
        auto l34 = psl3(4);
        write_gens(data / "L3_4.gens", l34, two_generators(l34), {"L3(4) on the 21 points of PG(2,4); two random generators kept"});
        auto sz8 = suzuki_8();
        write_gens(data / "Sz8.gens", sz8, two_generators(sz8),
                   {"Sz(8) on the 65 points of the Suzuki-Tits ovoid in PG(3,8); two random generators kept"});

        const fs::path pres = data / "presentations";
        {
            // a = (1,2)(3,4), b = (1,3,5): <a, b | a^2, b^3, (ab)^5>
            auto a = parse_cycles("(1,2)(3,4)", 5), b = parse_cycles("(1,3,5)", 5);
            Presentation p{2, {{1, 1}, {2, 2, 2}, power({1, 2}, 5)}};
            verify_relators(p, {a, b});
            if (coset_enumeration(p) != 60) throw Error("A5 presentation");
            write_file(pres / "A5.pres", "# relators verified on A5.gens; coset enumeration gives 60\n" + p.to_text());
            write_gens(pres / "A5.gens", PermGroup::generate(5, {a, b}), {a, b}, {"generators a, b of A5.pres"});
        }
        Word a{1}, b{2}, B{-2};
        make_presentation(pres, {"A6", alternating_group(6), {2, 4}, 5}, {power(cat({a, b, b}), 5)});
        make_presentation(pres, {"A7", alternating_group(7), {3, 5}, 7},
                          {power(cat({a, B, a, b}), 2), power(cat({a, B, B, a, b, b}), 2)});
        make_presentation(pres, {"L2_7", psl2(7), {2, 3}, 7}, {power(cat({{-1}, B, a, b}), 4)});
        make_presentation(pres, {"L2_8", psl2(8), {2, 3}, 7}, {});
        make_presentation(pres, {"L3_3", psl3(3), {2, 3}, 13}, {});

        ::setenv("CENTRA_DATA", data.c_str(), 1);
        make_l27_module(data);
    } catch (const std::exception& e) {
        std::cerr << "gen_data: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
