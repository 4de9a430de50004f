/**************************************************************************
 * include/centra/modrep.hpp
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
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "centra/catalogue.hpp"
#include "centra/errors.hpp"
#include "centra/ffield.hpp"
#include "centra/grpstruct.hpp"
#include "centra/linalg.hpp"
#include "centra/matrix_action.hpp"
#include "centra/perm_group.hpp"
#include "centra/presentation.hpp"

namespace centra {

inline constexpr std::uint64_t kDefaultVectorCap = 1'000'000;

/// Module for a permutation group over GF(p): one invertible matrix per
/// group generator, acting on row vectors.
class GModule {
public:
    GModule() = default;

    /// Checks shapes, invertibility and, unless told otherwise, that the
    /// matrices define a homomorphism from the group.
    GModule(PermGroup group, std::vector<Matrix> mats, bool verify = true) : group_(std::move(group)), mats_(std::move(mats)) {
        if (mats_.size() != group_.generators().size())
            throw InvalidInput("module has " + std::to_string(mats_.size()) + " matrices for " +
                               std::to_string(group_.generators().size()) + " group generators");
        if (mats_.empty()) throw InvalidInput("module for a group without generators");
        field_ = mats_.front().field();
        if (!field_->is_prime_field()) throw InvalidInput("modules are over prime fields only");
        dim_ = mats_.front().rows();
        for (const auto& m : mats_) {
            if (m.rows() != dim_ || m.cols() != dim_) throw InvalidInput("module matrices must be square of one size");
            if (m.field() != field_ && m.field()->spec().to_line() != field_->spec().to_line())
                throw InvalidInput("module matrices over different fields");
            inverses_.push_back(m.inverse());
        }
        if (verify) verify_homomorphism();
    }

    const PermGroup& group() const { return group_; }
    const FieldPtr& field() const { return field_; }
    std::uint32_t p() const { return field_->characteristic(); }
    std::size_t dimension() const { return dim_; }
    const std::vector<Matrix>& matrices() const { return mats_; }
    const std::vector<Matrix>& inverse_matrices() const { return inverses_; }

    /// Degree when this is a permutation module, else 0.
    std::size_t permutation_degree() const { return perm_degree_; }

    /// Matrix of an arbitrary group element, through the group's
    /// factorisation into recorded transversal elements.
    Matrix element_matrix(const Permutation& x) const {
        const auto& nodes = node_matrices();
        auto path = group_.factorise(x);
        Matrix m = Matrix::identity(field_, dim_);
        for (auto it = path.rbegin(); it != path.rend(); ++it) m = m * nodes[group_.transversal_node(it->first, it->second)];
        return m;
    }

    /// Throws unless g -> matrix extends to a homomorphism: every Schreier
    /// relation of the stabiliser chain must hold for the matrices.
    void verify_homomorphism() const {
        const auto& nodes = node_matrices();
        const auto lengths = group_.basic_orbit_lengths();
        for (std::size_t i = 0; i < lengths.size(); ++i) {
            for (std::size_t j = 0; j < lengths[i]; ++j) {
                const auto& u = group_.transversal(i, j);
                const Matrix& mu = nodes[group_.transversal_node(i, j)];
                for (std::size_t s = 0; s < group_.strong_generators().size(); ++s) {
                    const auto& g = group_.strong_generators()[s];
                    if (!fixes_prefix(g, i)) continue;
                    const Matrix lhs = mu * nodes[group_.strong_generator_node(s)];
                    if (!(lhs == element_matrix(u * g))) throw InvalidInput("module matrices do not define a homomorphism");
                }
            }
        }
        for (std::size_t k = 0; k < mats_.size(); ++k)
            if (!(element_matrix(group_.generators()[k]) == mats_[k]))
                throw InvalidInput("module matrices do not define a homomorphism");
    }

    static GModule permutation_module(const PermGroup& g, std::uint32_t p) {
        auto f = FiniteField::make(p);
        std::vector<Matrix> mats;
        for (const auto& x : g.generators()) {
            Matrix m(f, g.degree(), g.degree());
            for (std::size_t i = 0; i < g.degree(); ++i) m(i, x(i)) = 1;
            mats.push_back(std::move(m));
        }
        GModule mod(g, std::move(mats), false);
        mod.perm_degree_ = g.degree();
        return mod;
    }

    static GModule trivial_module(const PermGroup& g, std::uint32_t p, std::size_t dim = 1) {
        auto f = FiniteField::make(p);
        std::vector<Matrix> mats(g.generators().size(), Matrix::identity(f, dim));
        return GModule(g, std::move(mats), false);
    }

    /// The deleted submodule of a permutation module.
    GModule deleted_submodule() const {
        if (!perm_degree_) throw InvalidInput("deleted submodule of a module that is not a permutation module");
        std::vector<Matrix> mats;
        for (const auto& x : group_.generators()) mats.push_back(deleted_module_matrix(field_, x));
        GModule mod(group_, std::move(mats), false);
        mod.deleted_shape_ = deleted_module_shape(perm_degree_, p());
        return mod;
    }

    std::optional<DeletedModuleShape> deleted_shape() const { return deleted_shape_; }

    /// Module file: `dim d`, `p <prime>`, then the d x d matrices of the
    /// generators, row-major, in generator order.
    static GModule load(const std::string& path, const PermGroup& g) {
        std::ifstream in(path);
        if (!in) throw InvalidInput("cannot read module file " + path);
        std::size_t d = 0;
        std::uint32_t p = 0;
        std::vector<long long> nums;
        std::string line;
        while (std::getline(in, line)) {
            if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
            std::istringstream ls(line);
            std::string first;
            if (!(ls >> first)) continue;
            if (first == "dim") {
                if (!(ls >> d) || d == 0) throw InvalidInput(path + ": bad dim line");
            } else if (first == "p") {
                if (!(ls >> p) || !nt::is_prime(p)) throw InvalidInput(path + ": bad p line");
            } else {
                std::istringstream ns(line);
                long long v;
                while (ns >> v) nums.push_back(v);
                if (!ns.eof()) throw InvalidInput(path + ": non-numeric matrix entry");
            }
        }
        if (!d || !p) throw InvalidInput(path + ": missing dim or p line");
        if (nums.size() % (d * d)) throw InvalidInput(path + ": entry count is not a multiple of d^2");
        auto f = FiniteField::make(p);
        std::vector<Matrix> mats;
        for (std::size_t k = 0; k < nums.size() / (d * d); ++k) {
            Matrix m(f, d, d);
            for (std::size_t i = 0; i < d * d; ++i) {
                const auto v = nums[k * d * d + i];
                if (v < 0 || v >= static_cast<long long>(p)) throw InvalidInput(path + ": entry outside 0..p-1");
                m(i / d, i % d) = static_cast<std::uint32_t>(v);
            }
            mats.push_back(std::move(m));
        }
        return GModule(g, std::move(mats), true);
    }

    std::string to_text() const {
        std::string s = "dim " + std::to_string(dim_) + "\np " + std::to_string(p()) + "\n";
        for (const auto& m : mats_) {
            for (std::size_t i = 0; i < dim_; ++i) {
                for (std::size_t j = 0; j < dim_; ++j) s += (j ? " " : "") + std::to_string(m(i, j));
                s += "\n";
            }
        }
        return s;
    }

private:
    static bool fixes_prefix(const Permutation& g, std::size_t len, const std::vector<Point>& base) {
        for (std::size_t i = 0; i < len; ++i)
            if (g(base[i]) != base[i]) return false;
        return true;
    }
    bool fixes_prefix(const Permutation& g, std::size_t len) const { return fixes_prefix(g, len, base_cache()); }

    const std::vector<Point>& base_cache() const {
        if (!base_) base_ = std::make_shared<std::vector<Point>>(group_.base());
        return *base_;
    }

    const std::vector<Matrix>& node_matrices() const {
        if (!nodes_) {
            auto one = Matrix::identity(field_, dim_);
            nodes_ = std::make_shared<std::vector<Matrix>>(group_.program().evaluate(
                mats_, one, [](const Matrix& a, const Matrix& b) { return a * b; },
                [](const Matrix& a) { return a.inverse(); }));
        }
        return *nodes_;
    }

    PermGroup group_;
    FieldPtr field_;
    std::size_t dim_ = 0;
    std::vector<Matrix> mats_, inverses_;
    std::size_t perm_degree_ = 0;
    std::optional<DeletedModuleShape> deleted_shape_;
    mutable std::shared_ptr<std::vector<Matrix>> nodes_;
    mutable std::shared_ptr<std::vector<Point>> base_;
};

inline GModule permutation_module(const PermGroup& g, std::uint32_t p) { return GModule::permutation_module(g, p); }
inline GModule deleted_submodule(const GModule& m) { return m.deleted_submodule(); }

/// Basis of the vectors fixed by every given matrix.
inline std::vector<Vec> fixed_subspace(const FieldPtr& f, std::size_t dim, const std::vector<Matrix>& acting) {
    std::vector<Vec> cols; // columns of [A_1 - I | A_2 - I | ...] as rows of the transpose
    for (const auto& a : acting) {
        Matrix diff = a - Matrix::identity(f, dim);
        for (std::size_t j = 0; j < dim; ++j) {
            Vec c(dim);
            for (std::size_t i = 0; i < dim; ++i) c[i] = diff(i, j);
            cols.push_back(std::move(c));
        }
    }
    if (cols.empty()) {
        std::vector<Vec> all;
        for (std::size_t i = 0; i < dim; ++i) {
            Vec e(dim, 0);
            e[i] = 1;
            all.push_back(std::move(e));
        }
        return all;
    }
    return right_kernel(*f, std::move(cols), dim);
}

/// C_V(G) over all module generators.
inline std::vector<Vec> fixed_subspace(const GModule& m) { return fixed_subspace(m.field(), m.dimension(), m.matrices()); }

/// C_V(H) for the given module generator indices (0-based).
inline std::vector<Vec> fixed_subspace(const GModule& m, const std::vector<std::size_t>& generator_indices) {
    std::vector<Matrix> acting;
    for (auto i : generator_indices) acting.push_back(m.matrices().at(i));
    return fixed_subspace(m.field(), m.dimension(), acting);
}

/// C_V(H) for a subgroup of the module's group.
inline std::vector<Vec> fixed_subspace(const GModule& m, const Subgroup& h) {
    std::vector<Matrix> acting;
    for (const auto& x : h.generators) {
        if (!m.group().contains(x)) throw InvalidInput("subgroup generator is not in the module's group");
        acting.push_back(m.element_matrix(x));
    }
    return fixed_subspace(m.field(), m.dimension(), acting);
}

/// Echelon basis of the submodule generated by v.
inline std::vector<Vec> spin(const GModule& m, const Vec& v) {
    const auto& f = *m.field();
    std::vector<Vec> basis{v};
    std::vector<Vec> ech = span_basis(f, basis);
    for (std::size_t i = 0; i < basis.size() && ech.size() < m.dimension(); ++i) {
        for (const auto& a : m.matrices()) {
            Vec w = vec_mul(f, basis[i], a);
            auto trial = ech;
            trial.push_back(w);
            trial = span_basis(f, std::move(trial));
            if (trial.size() > ech.size()) {
                ech = std::move(trial);
                basis.push_back(std::move(w));
            }
        }
    }
    return ech;
}

struct IrreducibilityResult {
    bool irreducible = true;
    std::vector<Vec> witness; ///< basis of a proper non-zero submodule when reducible
};

/// Spins one representative of every 1-dimensional subspace.
inline IrreducibilityResult is_irreducible(const GModule& m, std::uint64_t cap = kDefaultVectorCap) {
    const auto& f = *m.field();
    const std::size_t d = m.dimension();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) {
        total *= f.order();
        if (total > cap) throw CapExceeded("irreducibility spin", total, cap);
    }
    IrreducibilityResult r;
    for (std::uint64_t c = 1; c < total; ++c) {
        Vec v = decode_vector(f, c, d);
        if (normalise_projective(f, v) != v) continue;
        auto sub = spin(m, v);
        if (sub.size() < d) {
            r.irreducible = false;
            r.witness = std::move(sub);
            return r;
        }
    }
    return r;
}

struct VectorStabiliser {
    Subgroup stabiliser;
    std::uint64_t orbit_size = 0;
};

/// Orbit of v under the module action with a Schreier tree; the
/// stabiliser is grown from Schreier generators until |orbit|*|Stab| = |G|.
inline VectorStabiliser vector_stabiliser(const GModule& m, const Vec& v, std::uint64_t cap = kDefaultOrbitCap,
                                          std::vector<std::uint64_t>* orbit_codes = nullptr) {
    const auto& f = *m.field();
    const auto& g = m.group();
    if (v.size() != m.dimension()) throw InvalidInput("vector length does not match module dimension");
    if (is_zero(v)) throw InvalidInput("vector stabiliser of the zero vector");
    std::vector<Vec> pts{v};
    std::vector<Permutation> trans{Permutation::identity(g.degree())};
    std::unordered_map<std::uint64_t, std::uint32_t> index{{encode_vector(f, v), 0}};
    std::vector<std::uint32_t> image; // image[k * ngens + s]
    const auto& gens = g.generators();
    for (std::size_t k = 0; k < pts.size(); ++k) {
        for (std::size_t s = 0; s < gens.size(); ++s) {
            Vec w = vec_mul(f, pts[k], m.matrices()[s]);
            const auto code = encode_vector(f, w);
            auto it = index.find(code);
            if (it == index.end()) {
                if (pts.size() >= cap) throw CapExceeded("vector orbit", pts.size() + 1, cap);
                it = index.emplace(code, static_cast<std::uint32_t>(pts.size())).first;
                pts.push_back(std::move(w));
                trans.push_back(trans[k] * gens[s]);
            }
            image.push_back(it->second);
        }
    }
    VectorStabiliser r;
    r.orbit_size = pts.size();
    detail::SubgroupGrower grow(g.degree(), g.order() / pts.size());
    for (std::size_t k = 0; k < pts.size() && !grow.done(); ++k)
        for (std::size_t s = 0; s < gens.size() && !grow.done(); ++s)
            grow.offer(trans[k] * gens[s] * trans[image[k * gens.size() + s]].inverse());
    r.stabiliser = std::move(grow).take();
    if (orbit_codes) {
        orbit_codes->clear();
        for (const auto& p : pts) orbit_codes->push_back(encode_vector(f, p));
    }
    return r;
}

struct ModuleScanResult {
    bool all_soluble = true;
    std::optional<Vec> witness;
    std::uint64_t witness_orbit = 0;
    Order witness_stabiliser_order = 0;
    SeriesReport witness_series;
    std::uint64_t orbits_examined = 0;
};

/// True iff every non-zero vector has a soluble stabiliser. Orbit
/// representatives are the smallest vectors in code order.
inline ModuleScanResult module_scan_soluble_stabilisers(const GModule& m, std::uint64_t cap = kDefaultVectorCap) {
    const auto& f = *m.field();
    const std::size_t d = m.dimension();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) {
        total *= f.order();
        if (total > cap) throw CapExceeded("module scan", total, cap);
    }
    std::vector<bool> seen(total, false);
    ModuleScanResult r;
    std::vector<std::uint64_t> orbit;
    for (std::uint64_t c = 1; c < total; ++c) {
        if (seen[c]) continue;
        Vec v = decode_vector(f, c, d);
        auto st = vector_stabiliser(m, v, cap, &orbit);
        for (auto o : orbit) seen[o] = true;
        ++r.orbits_examined;
        auto series = derived_series(st.stabiliser.group);
        if (!series.soluble) {
            r.all_soluble = false;
            r.witness = std::move(v);
            r.witness_orbit = st.orbit_size;
            r.witness_stabiliser_order = st.stabiliser.order();
            r.witness_series = std::move(series);
            return r;
        }
    }
    return r;
}

// ------------------------------------------------------------ derivations

struct DerivationSpace {
    std::uint32_t p = 0;
    std::size_t module_dimension = 0;
    std::size_t generator_count = 0;
    std::size_t dim_z1 = 0;
    std::size_t dim_b1 = 0;
    std::size_t dim_h1 = 0;
    std::vector<Vec> z1_basis; ///< (delta(g_1), ..., delta(g_r)) concatenated
};

namespace detail {

/// Derivation constraint of one relator: delta(w) = sum_i delta(g_i) F_i.
/// Returns the blocks F_1..F_r stacked vertically (r*d rows, d columns).
inline Matrix relator_jacobian(const Word& w, const GModule& m) {
    const auto& f = m.field();
    const std::size_t d = m.dimension(), r = m.matrices().size();
    Matrix jac(f, r * d, d);
    Matrix prefix_inv = Matrix::identity(f, d); // rho(y_1 ... y_{k-1})^-1
    for (int s : w) {
        const std::size_t i = static_cast<std::size_t>(std::abs(s)) - 1;
        if (i >= r) throw InvalidInput("relator refers to generator " + std::to_string(i + 1) + " beyond the module's");
        // delta(g^-1) = -delta(g) rho(g)
        const Matrix term = s > 0 ? prefix_inv : m.matrices()[i] * prefix_inv;
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) {
                auto& e = jac(i * d + a, b);
                e = s > 0 ? f->add(e, term(a, b)) : f->sub(e, term(a, b));
            }
        const Matrix& step_inv = s > 0 ? m.inverse_matrices()[i] : m.matrices()[i];
        prefix_inv = step_inv * prefix_inv;
    }
    return jac;
}

} // namespace detail

/// Z^1, B^1 and H^1 for derivations delta(gh) = delta(g) + delta(h) rho(g^-1),
/// with the module generators matched to the presentation's generators.
inline DerivationSpace derivation_space(const Presentation& pres, const GModule& m) {
    if (pres.generator_count != m.matrices().size())
        throw InvalidInput("presentation has " + std::to_string(pres.generator_count) + " generators, module " +
                           std::to_string(m.matrices().size()));
    pres.validate();
    const auto& f = m.field();
    const std::size_t d = m.dimension(), r = pres.generator_count;
    // Columns of the constraint matrix, one per (relator, coordinate).
    std::vector<Vec> constraints;
    for (const auto& w : pres.relators) {
        Matrix jac = detail::relator_jacobian(w, m);
        for (std::size_t b = 0; b < d; ++b) {
            Vec c(r * d);
            for (std::size_t a = 0; a < r * d; ++a) c[a] = jac(a, b);
            constraints.push_back(std::move(c));
        }
    }
    DerivationSpace ds;
    ds.p = m.p();
    ds.module_dimension = d;
    ds.generator_count = r;
    if (constraints.empty()) {
        for (std::size_t i = 0; i < r * d; ++i) {
            Vec e(r * d, 0);
            e[i] = 1;
            ds.z1_basis.push_back(std::move(e));
        }
    } else {
        ds.z1_basis = right_kernel(*f, std::move(constraints), r * d);
    }
    ds.dim_z1 = ds.z1_basis.size();
    // Inner derivations: v -> (v (rho(g_i)^-1 - 1))_i
    std::vector<Vec> inner;
    for (std::size_t a = 0; a < d; ++a) {
        Vec row(r * d, 0);
        for (std::size_t i = 0; i < r; ++i) {
            const auto& inv = m.inverse_matrices()[i];
            for (std::size_t b = 0; b < d; ++b) row[i * d + b] = f->sub(inv(a, b), a == b ? 1u : 0u);
        }
        inner.push_back(std::move(row));
    }
    ds.dim_b1 = rank(*f, std::move(inner));
    ds.dim_h1 = ds.dim_z1 - ds.dim_b1;
    return ds;
}

/// Number of tuples (t_1..t_r) in V^r for which g_i -> (rho(g_i), t_i)
/// satisfies every relator in the affine group V : GL(V), by exhaustive
/// enumeration. Equals p^dim Z^1.
inline std::uint64_t complement_count_oracle(const Presentation& pres, const GModule& m, std::uint64_t cap = kDefaultVectorCap) {
    if (pres.generator_count != m.matrices().size()) throw InvalidInput("presentation and module generator counts differ");
    const auto& f = *m.field();
    const std::size_t d = m.dimension(), r = pres.generator_count;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d * r; ++i) {
        total *= f.order();
        if (total > cap) throw CapExceeded("complement enumeration", total, cap);
    }
    std::vector<Word> rels = pres.relators;
    std::stable_sort(rels.begin(), rels.end(), [](const Word& a, const Word& b) { return a.size() < b.size(); });
    const auto& mats = m.matrices();
    const auto& invs = m.inverse_matrices();
    std::vector<Vec> t(r), tinv(r);
    std::uint64_t count = 0;
    Vec x(d), y(d);
    for (std::uint64_t code = 0; code < total; ++code) {
        Vec flat = decode_vector(f, code, d * r);
        for (std::size_t i = 0; i < r; ++i) {
            t[i].assign(flat.begin() + static_cast<long>(i * d), flat.begin() + static_cast<long>((i + 1) * d));
            // (A, t)^-1 = (A^-1, -t A^-1)
            tinv[i] = vec_mul(f, t[i], invs[i]);
            for (auto& e : tinv[i]) e = f.neg(e);
        }
        bool ok = true;
        for (const auto& w : rels) {
            // translation part of the product; (A,v)(B,w) = (AB, vB + w)
            std::fill(x.begin(), x.end(), 0u);
            for (int s : w) {
                const std::size_t i = static_cast<std::size_t>(std::abs(s)) - 1;
                y = vec_mul(f, x, s > 0 ? mats[i] : invs[i]);
                const Vec& add = s > 0 ? t[i] : tinv[i];
                for (std::size_t k = 0; k < d; ++k) x[k] = f.add(y[k], add[k]);
            }
            if (!is_zero(x)) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    }
    return count;
}

} // namespace centra
