/*
   Copyright 2026 The twistgab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TWISTGAB_MATRIX_HPP
#define TWISTGAB_MATRIX_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twistgab {

/**
 * Dense row-major matrix of field codes. The field itself is passed to every
 * algorithm, so the same type serves F_q (BaseField) and F_{q^m} (FieldTower).
 * A field type must provide add, sub, mul, neg and inv on std::uint32_t codes,
 * with 0 and 1 as the additive and multiplicative identities.
 */
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<std::uint32_t> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != rows * cols) throw std::invalid_argument("matrix entry count does not match shape");
    }

    static Matrix identity(std::size_t n) {
        Matrix I(n, n);
        for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
        return I;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const std::vector<std::uint32_t>& entries() const noexcept { return a_; }

    std::uint32_t& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    std::uint32_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<std::uint32_t> row(std::size_t i) const {
        return {a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
    }

    void set_row(std::size_t i, const std::vector<std::uint32_t>& r) {
        if (r.size() != cols_) throw std::invalid_argument("row length does not match matrix width");
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix select_columns(const std::vector<std::size_t>& idx) const {
        Matrix s(rows_, idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = (*this)(i, idx[j]);
        return s;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint32_t> a_;
};

template <class Field>
Matrix mat_mul(const Field& F, const Matrix& A, const Matrix& B) {
    if (A.cols() != B.rows()) throw std::invalid_argument("matrix product shape mismatch");
    Matrix C(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t l = 0; l < A.cols(); ++l) {
            const std::uint32_t a = A(i, l);
            if (a == 0) continue;
            for (std::size_t j = 0; j < B.cols(); ++j) C(i, j) = F.add(C(i, j), F.mul(a, B(l, j)));
        }
    return C;
}

/// Reduced row-echelon form in place; returns pivot columns in order.
template <class Field>
std::vector<std::size_t> rref_in_place(const Field& F, Matrix& M) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
        std::size_t piv = r;
        while (piv < M.rows() && M(piv, c) == 0) ++piv;
        if (piv == M.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < M.cols(); ++j) std::swap(M(r, j), M(piv, j));
        const std::uint32_t inv = F.inv(M(r, c));
        for (std::size_t j = c; j < M.cols(); ++j) M(r, j) = F.mul(M(r, j), inv);
        for (std::size_t i = 0; i < M.rows(); ++i) {
            if (i == r || M(i, c) == 0) continue;
            const std::uint32_t f = M(i, c);
            for (std::size_t j = c; j < M.cols(); ++j) M(i, j) = F.sub(M(i, j), F.mul(f, M(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class Field>
Matrix rref(const Field& F, Matrix M) {
    rref_in_place(F, M);
    return M;
}

template <class Field>
std::size_t rank(const Field& F, Matrix M) {
    // forward elimination only
    std::size_t r = 0;
    for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
        std::size_t piv = r;
        while (piv < M.rows() && M(piv, c) == 0) ++piv;
        if (piv == M.rows()) continue;
        if (piv != r)
            for (std::size_t j = c; j < M.cols(); ++j) std::swap(M(r, j), M(piv, j));
        const std::uint32_t inv = F.inv(M(r, c));
        for (std::size_t i = r + 1; i < M.rows(); ++i) {
            if (M(i, c) == 0) continue;
            const std::uint32_t f = F.mul(M(i, c), inv);
            for (std::size_t j = c; j < M.cols(); ++j) M(i, j) = F.sub(M(i, j), F.mul(f, M(r, j)));
        }
        ++r;
    }
    return r;
}

template <class Field>
std::uint32_t determinant(const Field& F, Matrix M) {
    if (M.rows() != M.cols())
        throw std::invalid_argument("determinant of a non-square " + std::to_string(M.rows()) + "x" +
                                    std::to_string(M.cols()) + " matrix");
    const std::size_t n = M.rows();
    std::uint32_t det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && M(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t j = c; j < n; ++j) std::swap(M(c, j), M(piv, j));
            det = F.neg(det);
        }
        det = F.mul(det, M(c, c));
        const std::uint32_t inv = F.inv(M(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (M(i, c) == 0) continue;
            const std::uint32_t f = F.mul(M(i, c), inv);
            for (std::size_t j = c; j < n; ++j) M(i, j) = F.sub(M(i, j), F.mul(f, M(c, j)));
        }
    }
    return det;
}

/// Basis of {x : M x = 0}, one vector per free column, in column order.
template <class Field>
std::vector<std::vector<std::uint32_t>> null_space(const Field& F, Matrix M) {
    const auto pivots = rref_in_place(F, M);
    std::vector<bool> is_pivot(M.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t f = 0; f < M.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<std::uint32_t> v(M.cols(), 0);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(M(r, f));
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace twistgab

#endif  // TWISTGAB_MATRIX_HPP
