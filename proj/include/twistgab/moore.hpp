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

#ifndef TWISTGAB_MOORE_HPP
#define TWISTGAB_MOORE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "field_tower.hpp"
#include "matrix.hpp"

// Row and column indices are 0-based in code. Reports print them 1-based so
// that column j matches alpha_{j+1}.

namespace twistgab {

using MatrixFqm = Matrix;

/// alpha^[i] componentwise.
inline std::vector<Element> frobenius_vector(const FieldTower& T, const std::vector<Element>& alpha, long long i) {
    std::vector<Element> out(alpha.size());
    for (std::size_t j = 0; j < alpha.size(); ++j) out[j] = T.frobenius(alpha[j], i);
    return out;
}

inline MatrixFqm moore_matrix(const FieldTower& T, const std::vector<Element>& alpha, std::size_t k) {
    if (k < 1) throw std::invalid_argument("Moore matrix needs k >= 1");
    if (alpha.empty()) throw std::invalid_argument("Moore matrix needs at least one evaluation point");
    MatrixFqm M(k, alpha.size());
    for (std::size_t i = 0; i < k; ++i) M.set_row(i, frobenius_vector(T, alpha, static_cast<long long>(i)));
    return M;
}

/// Moore matrix with row h replaced by alpha^[t].
inline MatrixFqm modified_moore_matrix(const FieldTower& T, const std::vector<Element>& alpha, std::size_t k,
                                       std::size_t h, std::size_t t) {
    if (h >= k)
        throw std::invalid_argument("row index h = " + std::to_string(h) + " out of range [0, " + std::to_string(k) +
                                    ")");
    MatrixFqm M = moore_matrix(T, alpha, k);
    M.set_row(h, frobenius_vector(T, alpha, static_cast<long long>(t)));
    return M;
}

inline Element det_fqm(const FieldTower& T, const MatrixFqm& M) { return determinant(T, M); }

inline std::size_t rank_fqm(const FieldTower& T, const MatrixFqm& M) { return rank(T, M); }

/// alpha_1 * prod_{j=1}^{k-1} prod_{b in F_q^j} (alpha_{j+1} - sum_i b_i alpha_i), enumerated literally.
inline Element moore_det_product(const FieldTower& T, const std::vector<Element>& alpha) {
    if (alpha.empty()) throw std::invalid_argument("Moore determinant needs at least one point");
    Element result = alpha[0];
    // combos holds every sum_i b_i alpha_i over the first j points
    std::vector<Element> combos{0};
    for (std::size_t j = 1; j < alpha.size(); ++j) {
        const std::size_t sz = combos.size();
        for (std::uint32_t c = 1; c < T.q(); ++c) {
            const Element ca = T.mul(c, alpha[j - 1]);
            for (std::size_t i = 0; i < sz; ++i) combos.push_back(T.add(combos[i], ca));
        }
        for (Element s : combos) result = T.mul(result, T.sub(alpha[j], s));
    }
    return result;
}

}  // namespace twistgab

#endif  // TWISTGAB_MOORE_HPP
