/**************************************************************************
 * include/centra/linalg.hpp
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
#include <string>
#include <utility>
#include <vector>

#include "centra/errors.hpp"
#include "centra/ffield.hpp"

namespace centra {

using Vec = std::vector<std::uint32_t>;

/// Dense matrix over a finite field. Vectors are rows and act on the
/// right: v -> v * A, so (v * A) * B = v * (A * B).
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr f, std::size_t rows, std::size_t cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Matrix identity(FieldPtr f, std::size_t n) {
        Matrix m(std::move(f), n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(FieldPtr f, const std::vector<Vec>& rows) {
        const std::size_t c = rows.empty() ? 0 : rows.front().size();
        Matrix m(std::move(f), rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw InvalidInput("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) {
                if (rows[i][j] >= m.f_->order()) throw InvalidInput("matrix entry outside the field");
                m(i, j) = rows[i][j];
            }
        }
        return m;
    }

    const FieldPtr& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    std::uint32_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const { return Vec(a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_)); }

    std::vector<Vec> row_list() const {
        std::vector<Vec> out;
        for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
        return out;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
        return true;
    }

    Matrix operator*(const Matrix& b) const {
        if (cols_ != b.rows_) throw InvalidInput("matrix shape mismatch");
        Matrix r(f_, rows_, b.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const auto x = (*this)(i, k);
                if (!x) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = f_->add(r(i, j), f_->mul(x, b(k, j)));
            }
        return r;
    }

    Matrix operator-(const Matrix& b) const {
        Matrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->sub(a_[i], b.a_[i]);
        return r;
    }

    Matrix transpose() const {
        Matrix r(f_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Matrix inverse() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    FieldPtr f_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::uint32_t> a_;
};

/// v * A
inline Vec vec_mul(const FiniteField& f, const Vec& v, const Matrix& a) {
    Vec r(a.cols(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i]) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) r[j] = f.add(r[j], f.mul(v[i], a(i, j)));
    }
    return r;
}

inline bool is_zero(const Vec& v) {
    for (auto x : v)
        if (x) return false;
    return true;
}

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> row_reduce(const FiniteField& f, std::vector<Vec>& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t ncols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && !rows[piv][c]) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const auto inv = f.inv(rows[r][c]);
        for (auto& x : rows[r]) x = f.mul(x, inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || !rows[i][c]) continue;
            const auto m = rows[i][c];
            for (std::size_t j = c; j < ncols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(m, rows[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

inline std::size_t rank(const FiniteField& f, std::vector<Vec> rows) { return row_reduce(f, rows).size(); }

/// Basis of {x : A x = 0} for A given by its rows (column-vector kernel).
inline std::vector<Vec> right_kernel(const FiniteField& f, std::vector<Vec> rows, std::size_t ncols) {
    auto pivots = row_reduce(f, rows);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        Vec x(ncols, 0);
        x[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = f.neg(rows[i][free]);
        basis.push_back(std::move(x));
    }
    return basis;
}

/// Basis of {v : v A = 0} (row-vector kernel).
inline std::vector<Vec> left_kernel(const Matrix& a) {
    return right_kernel(*a.field(), a.transpose().row_list(), a.rows());
}

/// Canonical basis (reduced echelon rows) of the span of `vs`.
inline std::vector<Vec> span_basis(const FiniteField& f, std::vector<Vec> vs) {
    row_reduce(f, vs);
    return vs;
}

inline Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw InvalidInput("inverse of a non-square matrix");
    const auto& f = *f_;
    std::vector<Vec> aug;
    for (std::size_t i = 0; i < rows_; ++i) {
        Vec r = row(i);
        r.resize(2 * cols_, 0);
        r[cols_ + i] = 1;
        aug.push_back(std::move(r));
    }
    auto piv = row_reduce(f, aug);
    if (piv.size() != rows_ || piv.back() >= cols_) throw InvalidInput("matrix is singular");
    Matrix r(f_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = aug[i][cols_ + j];
    return r;
}

} // namespace centra
