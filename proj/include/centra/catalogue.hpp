/**************************************************************************
 * include/centra/catalogue.hpp
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
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <regex>
#include <string>
#include <unordered_map>
#include <vector>

#include "centra/errors.hpp"
#include "centra/ffield.hpp"
#include "centra/linalg.hpp"
#include "centra/matrix_action.hpp"
#include "centra/number_theory.hpp"
#include "centra/perm_group.hpp"
#include "centra/perm_io.hpp"
#include "centra/presentation.hpp"

#ifndef CENTRA_DEFAULT_DATA_DIR
#define CENTRA_DEFAULT_DATA_DIR "data"
#endif

namespace centra {

/// Data directory: $CENTRA_DATA when set, else the build-time default.
inline std::string data_dir() {
    if (const char* env = std::getenv("CENTRA_DATA"); env && *env) return env;
    return CENTRA_DEFAULT_DATA_DIR;
}

// ---------------------------------------------------------------- orders

inline Order factorial(std::uint64_t n) {
    Order r = 1;
    for (std::uint64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Order alternating_order(std::uint64_t n) { return n < 2 ? Order(1) : factorial(n) / 2; }

inline Order psl2_order(std::uint64_t q) {
    Order Q = q;
    return Q * (Q * Q - 1) / std::gcd<std::uint64_t>(2, q - 1);
}

inline Order psl3_order(std::uint64_t q) {
    Order Q = q;
    return Q * Q * Q * (Q * Q * Q - 1) * (Q * Q - 1) / std::gcd<std::uint64_t>(3, q - 1);
}

inline Order sl2_order(std::uint64_t q) {
    Order Q = q;
    return Q * (Q * Q - 1);
}

// ---------------------------------------------------------- constructors

inline PermGroup alternating_group(std::size_t n) {
    if (n == 0) throw InvalidInput("alternating group of degree 0");
    if (n < 3) return PermGroup::trivial(n);
    std::vector<std::size_t> three{0, 1, 2}, longc;
    for (std::size_t i = (n % 2 ? 0 : 1); i < n; ++i) longc.push_back(i);
    std::vector<Permutation> gens{Permutation::from_cycles(n, {three})};
    if (n > 3) gens.push_back(Permutation::from_cycles(n, {longc}));
    return PermGroup::generate(n, gens);
}

inline PermGroup symmetric_group(std::size_t n) {
    if (n == 0) throw InvalidInput("symmetric group of degree 0");
    if (n == 1) return PermGroup::trivial(1);
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(i);
    return PermGroup::generate(n, {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {all})});
}

inline PermGroup cyclic_group(std::size_t n) {
    if (n == 0) throw InvalidInput("cyclic group of order 0");
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(i);
    return PermGroup::generate(n, {Permutation::from_cycles(n, {all})});
}

/// Dihedral group of the given order (>= 6) on order/2 points.
inline PermGroup dihedral_group(std::size_t order) {
    if (order < 6 || order % 2) throw InvalidInput("dihedral order must be even and at least 6");
    const std::size_t n = order / 2;
    std::vector<Point> rot(n), ref(n);
    for (std::size_t i = 0; i < n; ++i) {
        rot[i] = static_cast<Point>((i + 1) % n);
        ref[i] = static_cast<Point>((n - i) % n);
    }
    return PermGroup::generate(n, {Permutation::from_images(rot), Permutation::from_images(ref)});
}

/// Quaternion group of order 8 in its regular representation; point
/// 4s + u stands for (-1)^s times unit u of (1, i, j, k).
inline PermGroup quaternion_group() {
    // kUnit[a][b], kSign[a][b]: unit a times unit b
    static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    auto right_mult = [&](int g) {
        std::vector<Point> im(8);
        for (int s = 0; s < 2; ++s)
            for (int u = 0; u < 4; ++u) im[4 * s + u] = static_cast<Point>(4 * ((s + kSign[u][g]) % 2) + kUnit[u][g]);
        return Permutation::from_images(im);
    };
    return PermGroup::generate(8, {right_mult(1), right_mult(2)});
}

/// Normalised points of the projective space of the given dimension over F,
/// in lexicographic order of their coordinates.
inline std::vector<Vec> projective_points(const FiniteField& f, std::size_t dim) {
    std::vector<Vec> pts;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) total *= f.order();
    for (std::uint64_t c = 1; c < total; ++c) {
        Vec v = decode_vector(f, c, dim);
        if (normalise_projective(f, v) == v) pts.push_back(std::move(v));
    }
    return pts;
}

/// Permutations induced by matrices on a fixed list of points (projective or not).
inline std::vector<Permutation> induced_permutations(const std::vector<Matrix>& mats, const std::vector<Vec>& points,
                                                     bool projective) {
    const auto& f = *mats.front().field();
    std::unordered_map<std::uint64_t, Point> index;
    for (std::size_t i = 0; i < points.size(); ++i) index.emplace(encode_vector(f, points[i]), static_cast<Point>(i));
    std::vector<Permutation> out;
    for (const auto& m : mats) {
        std::vector<Point> im;
        for (const auto& p : points) {
            Vec w = vec_mul(f, p, m);
            if (projective) w = normalise_projective(f, std::move(w));
            auto it = index.find(encode_vector(f, w));
            if (it == index.end()) throw InvalidInput("matrices do not preserve the point set");
            im.push_back(it->second);
        }
        out.push_back(Permutation::from_images(std::move(im)));
    }
    return out;
}

/// Generators of SL_n(q) for n = 2, 3: elementary transvections, plus a
/// diagonal matrix over non-prime fields.
inline std::vector<Matrix> sl_generators(const FieldPtr& f, std::size_t n) {
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix t = Matrix::identity(f, n);
        t(i, (i + 1) % n) = 1;
        gens.push_back(t);
        if (n == 2) {
            Matrix l = Matrix::identity(f, n);
            l(1, 0) = 1;
            gens.push_back(l);
            break;
        }
    }
    if (!f->is_prime_field()) {
        Matrix d = Matrix::identity(f, n);
        d(0, 0) = f->primitive();
        d(1, 1) = f->inv(f->primitive());
        gens.push_back(d);
    }
    return gens;
}

inline void check_field_order(std::uint64_t q) {
    if (!nt::prime_power(q)) throw InvalidInput(std::to_string(q) + " is not a prime power");
    if (q > kMaxFieldOrder) throw InvalidInput("field order " + std::to_string(q) + " exceeds 65536");
}

/// PSL_2(q) on the q+1 points of the projective line.
inline PermGroup psl2(std::uint64_t q) {
    check_field_order(q);
    auto f = FiniteField::make_order(q);
    auto pts = projective_points(*f, 2);
    auto g = PermGroup::generate(pts.size(), induced_permutations(sl_generators(f, 2), pts, true));
    if (g.order() != psl2_order(q)) throw Error("PSL2(" + std::to_string(q) + ") construction produced the wrong order");
    return g;
}

/// PSL_3(q) on the q^2+q+1 points of the projective plane.
inline PermGroup psl3(std::uint64_t q) {
    check_field_order(q);
    auto f = FiniteField::make_order(q);
    auto pts = projective_points(*f, 3);
    if (pts.size() > kMaxDegree) throw InvalidInput("PSL3(" + std::to_string(q) + ") exceeds the degree ceiling");
    auto g = PermGroup::generate(pts.size(), induced_permutations(sl_generators(f, 3), pts, true));
    if (g.order() != psl3_order(q)) throw Error("PSL3(" + std::to_string(q) + ") construction produced the wrong order");
    return g;
}

/// SL_2(q) on the q^2-1 non-zero vectors.
inline PermGroup sl2(std::uint64_t q) {
    check_field_order(q);
    auto f = FiniteField::make_order(q);
    std::vector<Vec> pts;
    for (std::uint64_t c = 1; c < q * q; ++c) pts.push_back(decode_vector(*f, c, 2));
    if (pts.size() > kMaxDegree) throw InvalidInput("SL2(" + std::to_string(q) + ") exceeds the degree ceiling");
    auto g = PermGroup::generate(pts.size(), induced_permutations(sl_generators(f, 2), pts, false));
    if (g.order() != sl2_order(q)) throw Error("SL2(" + std::to_string(q) + ") construction produced the wrong order");
    return g;
}

// ------------------------------------------------------------ descriptors

enum class Family { Alt, Sym, PSL2, PSL3, SL2, Cyclic, Dihedral, Quaternion, FileBacked };

struct GroupDescriptor {
    Family family = Family::Alt;
    std::uint64_t param = 0;  ///< n, q, or order, by family
    std::string file_id;      ///< stem of data/<file_id>.gens for FileBacked
    std::string name;
    std::optional<Order> expected_order;
};

/// Shipped generator files: display name and file stem.
inline const std::vector<std::pair<std::string, std::string>>& file_backed_groups() {
    static const std::vector<std::pair<std::string, std::string>> kFiles = {
        {"M11", "M11"}, {"M12", "M12"}, {"M22", "M22"}, {"U3(3)", "U3_3"},
        {"PSp4(3)", "PSp4_3"}, {"L3(4)", "L3_4"}, {"Sz(8)", "Sz8"},
    };
    return kFiles;
}

/// Parses names such as A7, S4, L2(7), PSL2(7), L3(3), SL2(3), C5, D8, Q8,
/// M11, U3(3), PSp4(3), Sz(8). Returns nullopt for unknown names.
inline std::optional<GroupDescriptor> parse_group_name(std::string name) {
    std::string s;
    for (char c : name)
        if (c != '_' && c != ' ') s += c;
    for (const auto& [display, stem] : file_backed_groups()) {
        std::string d;
        for (char c : display)
            if (c != '(' && c != ')') d += c;
        if (s == display || s == d || s == stem) return GroupDescriptor{Family::FileBacked, 0, stem, display, std::nullopt};
    }
    static const std::regex kRe(R"(^(A|Alt|S|Sym|L2|PSL2|L3|PSL3|SL2|C|D|Q)\(?([0-9]+)\)?$)");
    std::smatch m;
    if (!std::regex_match(s, m, kRe)) return std::nullopt;
    const std::string fam = m[1];
    if (m[2].length() > 9) return std::nullopt;
    const std::uint64_t v = std::stoull(m[2]);
    GroupDescriptor d;
    d.param = v;
    if (fam == "A" || fam == "Alt") {
        d.family = Family::Alt;
        d.name = "A" + std::to_string(v);
        d.expected_order = alternating_order(v);
    } else if (fam == "S" || fam == "Sym") {
        d.family = Family::Sym;
        d.name = "S" + std::to_string(v);
        d.expected_order = factorial(v);
    } else if (fam == "L2" || fam == "PSL2") {
        d.family = Family::PSL2;
        d.name = "L2(" + std::to_string(v) + ")";
        d.expected_order = psl2_order(v);
    } else if (fam == "L3" || fam == "PSL3") {
        d.family = Family::PSL3;
        d.name = "L3(" + std::to_string(v) + ")";
        d.expected_order = psl3_order(v);
    } else if (fam == "SL2") {
        d.family = Family::SL2;
        d.name = "SL2(" + std::to_string(v) + ")";
        d.expected_order = sl2_order(v);
    } else if (fam == "C") {
        d.family = Family::Cyclic;
        d.name = "C" + std::to_string(v);
        d.expected_order = Order(v);
    } else if (fam == "D") {
        d.family = Family::Dihedral;
        d.name = "D" + std::to_string(v);
        d.expected_order = Order(v);
    } else {
        if (v != 8) return std::nullopt;
        d.family = Family::Quaternion;
        d.name = "Q8";
        d.expected_order = Order(8);
    }
    return d;
}

/// Loads data/<stem>.gens; checks the recorded order when present.
inline PermGroup load_group_file(const std::string& path) {
    auto f = GeneratorFile::load(path);
    auto g = PermGroup::generate(f.degree, f.generators);
    if (f.order && *f.order != g.order())
        throw InvalidInput(path + ": recorded order " + f.order->str() + " but generators give " + g.order().str());
    return g;
}

inline PermGroup build(const GroupDescriptor& d) {
    PermGroup g;
    const auto n = static_cast<std::size_t>(d.param);
    switch (d.family) {
    case Family::Alt: g = alternating_group(n); break;
    case Family::Sym: g = symmetric_group(n); break;
    case Family::PSL2: g = psl2(d.param); break;
    case Family::PSL3: g = psl3(d.param); break;
    case Family::SL2: g = sl2(d.param); break;
    case Family::Cyclic: g = cyclic_group(n); break;
    case Family::Dihedral: g = dihedral_group(n); break;
    case Family::Quaternion: g = quaternion_group(); break;
    case Family::FileBacked: {
        bool known = false;
        for (const auto& fb : file_backed_groups()) known = known || fb.second == d.file_id;
        if (!known) throw InvalidInput("unknown group file id '" + d.file_id + "'");
        g = load_group_file(data_dir() + "/" + d.file_id + ".gens");
        break;
    }
    }
    if (d.expected_order && *d.expected_order != g.order())
        throw Error(d.name + ": expected order " + d.expected_order->str() + ", built " + g.order().str());
    return g;
}

inline PermGroup build(const std::string& name) {
    auto d = parse_group_name(name);
    if (!d) throw InvalidInput("unknown group '" + name + "'");
    return build(*d);
}

// --------------------------------------------------------- catalogue list

/// One way of recognising a simple group inside the classification tables.
struct Identification {
    enum class Kind { Alternating, Classical, Exceptional, Sporadic };
    Kind kind;
    std::uint64_t n = 0;    ///< alternating degree, or classical dimension
    std::string family;     ///< classical: L, U, Sp, O; exceptional: 2B2, ...; sporadic: name
    std::uint64_t q = 0;    ///< classical and exceptional field size

    static Identification alt(std::uint64_t n) { return {Kind::Alternating, n, "", 0}; }
    static Identification classical(std::string fam, std::uint64_t dim, std::uint64_t q) {
        return {Kind::Classical, dim, std::move(fam), q};
    }
    static Identification exceptional(std::string fam, std::uint64_t q) { return {Kind::Exceptional, 0, std::move(fam), q}; }
    static Identification sporadic(std::string name) { return {Kind::Sporadic, 0, std::move(name), 0}; }

    std::string to_string() const {
        switch (kind) {
        case Kind::Alternating: return "A" + std::to_string(n);
        case Kind::Classical: return family + std::to_string(n) + "(" + std::to_string(q) + ")";
        case Kind::Exceptional: return family + "(" + std::to_string(q) + ")";
        case Kind::Sporadic: return family;
        }
        return {};
    }
};

struct CatalogueEntry {
    std::string name;
    bool simple = false;
    std::vector<Identification> identifications; ///< empty for non-simple groups
};

/// The shipped catalogue. Simple groups carry every identification used
/// when matching them against the classification tables.
inline const std::vector<CatalogueEntry>& catalogue() {
    using I = Identification;
    static const std::vector<CatalogueEntry> kEntries = [] {
        std::vector<CatalogueEntry> e = {
            {"A5", true, {I::alt(5), I::classical("L", 2, 4), I::classical("L", 2, 5)}},
            {"A6", true, {I::alt(6), I::classical("L", 2, 9)}},
            {"A7", true, {I::alt(7)}},
            {"A8", true, {I::alt(8), I::classical("L", 4, 2)}},
            {"A9", true, {I::alt(9)}},
            {"L2(7)", true, {I::classical("L", 2, 7), I::classical("L", 3, 2)}},
        };
        for (std::uint64_t q : {8, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32})
            e.push_back({"L2(" + std::to_string(q) + ")", true, {I::classical("L", 2, q)}});
        e.push_back({"L3(3)", true, {I::classical("L", 3, 3)}});
        e.push_back({"L3(4)", true, {I::classical("L", 3, 4)}});
        e.push_back({"U3(3)", true, {I::classical("U", 3, 3)}});
        e.push_back({"PSp4(3)", true, {I::classical("Sp", 4, 3), I::classical("U", 4, 2)}});
        e.push_back({"Sz(8)", true, {I::exceptional("2B2", 8)}});
        for (const char* s : {"M11", "M12", "M22"}) e.push_back({s, true, {I::sporadic(s)}});
        for (const char* s : {"S3", "S4", "S5", "C2", "C6", "D8", "D10", "Q8", "SL2(3)", "SL2(5)"}) e.push_back({s, false, {}});
        return e;
    }();
    return kEntries;
}

// ------------------------------------------------- deleted permutation module

/// Basis bookkeeping of the deleted permutation module of S_m over F:
/// the sum-zero subspace with basis e_i - e_m (i < m) when char F does not
/// divide m, else that subspace modulo the all-ones vector, with basis the
/// images of e_i - e_m (i < m-1).
struct DeletedModuleShape {
    std::size_t degree = 0;     ///< m
    std::size_t dimension = 0;  ///< m-1 or m-2
    bool quotient = false;
};

inline DeletedModuleShape deleted_module_shape(std::size_t m, std::uint32_t characteristic) {
    if (m < 2) throw InvalidInput("deleted module needs at least two points");
    const bool quotient = m % characteristic == 0;
    return {m, quotient ? m - 2 : m - 1, quotient};
}

/// Matrix of a permutation on the deleted module (rows are images of the
/// basis vectors, written in that basis).
inline Matrix deleted_module_matrix(const FieldPtr& f, const Permutation& g) {
    const std::size_t m = g.degree();
    const auto shape = deleted_module_shape(m, f->characteristic());
    Matrix a(f, shape.dimension, shape.dimension);
    for (std::size_t i = 0; i < shape.dimension; ++i) {
        // e_{g(i)} - e_{g(m-1)} in coordinates of e_j - e_{m-1}
        Vec c(m, 0);
        c[g(i)] = f->add(c[g(i)], 1);
        c[g(m - 1)] = f->sub(c[g(m - 1)], 1);
        const auto shift = shape.quotient ? c[m - 2] : 0u;
        for (std::size_t j = 0; j < shape.dimension; ++j) a(i, j) = f->sub(c[j], shift);
    }
    return a;
}

/// A_{n+1} acting on its deleted permutation module over GF(q).
struct DeletedEmbedding {
    FieldPtr field;
    DeletedModuleShape shape;
    PermGroup group;                 ///< A_{n+1}
    std::vector<Matrix> matrices;    ///< one per group generator
};

inline DeletedEmbedding deleted_perm_embedding(std::size_t n, std::uint64_t q) {
    if (n < 4) throw InvalidInput("deleted embedding needs n >= 4");
    check_field_order(q);
    DeletedEmbedding e;
    e.field = FiniteField::make_order(q);
    e.group = alternating_group(n + 1);
    e.shape = deleted_module_shape(n + 1, e.field->characteristic());
    for (const auto& g : e.group.generators()) e.matrices.push_back(deleted_module_matrix(e.field, g));
    return e;
}

// ------------------------------------------------------ shipped presentations

/// A presentation together with permutations satisfying it.
struct ShippedPresentation {
    std::string name;
    Presentation presentation;
    PermGroup group; ///< generated by the presentation's generator images, in order
};

inline const std::vector<std::pair<std::string, std::string>>& shipped_presentation_names() {
    static const std::vector<std::pair<std::string, std::string>> kNames = {
        {"A5", "A5"}, {"A6", "A6"}, {"A7", "A7"}, {"L2(7)", "L2_7"}, {"L2(8)", "L2_8"}, {"L3(3)", "L3_3"},
    };
    return kNames;
}

/// Throws unless every relator evaluates to the identity on `gens`.
inline void verify_relators(const Presentation& p, const std::vector<Permutation>& gens) {
    if (gens.size() != p.generator_count)
        throw InvalidInput("presentation has " + std::to_string(p.generator_count) + " generators, permutations " +
                           std::to_string(gens.size()));
    const auto one = Permutation::identity(gens.front().degree());
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        auto v = Presentation::evaluate(p.relators[i], gens, one, std::multiplies<>(), [](const Permutation& x) { return x.inverse(); });
        if (!v.is_identity()) throw InvalidInput("relator " + std::to_string(i + 1) + " does not hold on the generators");
    }
}

inline ShippedPresentation shipped_presentation(const std::string& name) {
    for (const auto& [display, stem] : shipped_presentation_names()) {
        std::string bare;
        for (char c : display)
            if (c != '(' && c != ')') bare += c;
        if (name != display && name != stem && name != bare) continue;
        const std::string base = data_dir() + "/presentations/" + stem;
        ShippedPresentation s;
        s.name = display;
        s.presentation = Presentation::load(base + ".pres");
        auto gf = GeneratorFile::load(base + ".gens");
        verify_relators(s.presentation, gf.generators);
        s.group = PermGroup::generate(gf.degree, gf.generators);
        if (gf.order && *gf.order != s.group.order()) throw InvalidInput(base + ".gens: recorded order does not match");
        return s;
    }
    throw InvalidInput("no shipped presentation for '" + name + "'");
}

} // namespace centra
