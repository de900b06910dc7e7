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

#ifndef TWISTGAB_SUBSPACES_HPP
#define TWISTGAB_SUBSPACES_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace twistgab {

/// [n choose k]_q, saturating at 2^64 - 1.
inline std::uint64_t gaussian_binomial(unsigned n, unsigned k, std::uint64_t q) {
    if (k > n) return 0;
    // [n,k] = [n-1,k-1] + q^k [n-1,k]
    std::vector<std::uint64_t> row(k + 1, 0);
    row[0] = 1;
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = std::min(i, k); j >= 1; --j)
            row[j] = detail::sat_add(row[j - 1], detail::sat_mul(detail::sat_pow(q, j), row[j]));
    return row[k];
}

/// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    while (true) {
        out.push_back(c);
        std::size_t i = k;
        while (i > 0 && c[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

/**
 * Random access to the k-dimensional subspaces of F_q^n, each given by its
 * unique k x n reduced row-echelon basis. Pivot sets come in lexicographic
 * order; inside a pivot set the free entries, read row by row, form the
 * base-q digits of the inner index (last free entry most significant).
 */
class SubspaceEnumerator {
   public:
    SubspaceEnumerator(std::uint32_t q, unsigned n, unsigned k, std::uint64_t cap) : q_(q), n_(n), k_(k) {
        if (k < 1 || k > n) throw std::invalid_argument("subspace dimension must satisfy 1 <= k <= n");
        detail::check_budget("subspace enumeration", gaussian_binomial(n, k, q), cap);
        std::vector<unsigned> piv(k);
        for (unsigned i = 0; i < k; ++i) piv[i] = i;
        while (true) {
            unsigned free = 0;
            for (unsigned i = 0; i < k; ++i) free += (n - piv[i] - 1) - (k - i - 1);
            pivots_.push_back(piv);
            offsets_.push_back(total_);
            total_ += detail::sat_pow(q, free);
            // next combination
            int i = static_cast<int>(k) - 1;
            while (i >= 0 && piv[static_cast<unsigned>(i)] == n - k + static_cast<unsigned>(i)) --i;
            if (i < 0) break;
            ++piv[static_cast<unsigned>(i)];
            for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
        }
        if (total_ != gaussian_binomial(n, k, q)) throw ConsistencyError("RREF count differs from the Gaussian binomial");
    }

    std::uint64_t size() const noexcept { return total_; }
    unsigned n() const noexcept { return n_; }
    unsigned k() const noexcept { return k_; }

    Matrix at(std::uint64_t index) const {
        if (index >= total_) throw std::out_of_range("subspace index out of range");
        const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
        const auto c = static_cast<std::size_t>(it - offsets_.begin()) - 1;
        const auto& piv = pivots_[c];
        std::uint64_t inner = index - offsets_[c];
        Matrix V(k_, n_);
        std::vector<bool> is_pivot(n_, false);
        for (auto p : piv) is_pivot[p] = true;
        for (unsigned i = 0; i < k_; ++i) {
            V(i, piv[i]) = 1;
            for (unsigned j = piv[i] + 1; j < n_; ++j) {
                if (is_pivot[j]) continue;
                V(i, j) = static_cast<std::uint32_t>(inner % q_);
                inner /= q_;
            }
        }
        return V;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::uint64_t i = 0; i < total_; ++i) fn(i, at(i));
    }

   private:
    std::uint32_t q_;
    unsigned n_, k_;
    std::uint64_t total_ = 0;
    std::vector<std::vector<unsigned>> pivots_;
    std::vector<std::uint64_t> offsets_;
};

}  // namespace twistgab

#endif  // TWISTGAB_SUBSPACES_HPP
