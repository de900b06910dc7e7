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

#ifndef TWISTGAB_GCOEFF_HPP
#define TWISTGAB_GCOEFF_HPP

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "field_tower.hpp"
#include "linpoly.hpp"
#include "moore.hpp"

namespace twistgab {

/**
 * Coefficients c_0..c_k of prod_{u in U}(x - u) = sum_j c_j x^[k-j], so c_0 = 1.
 * at(j) pads with zero for j > k.
 */
struct AnnihilatorCoeffs {
    std::vector<Element> c;

    std::size_t k() const noexcept { return c.empty() ? 0 : c.size() - 1; }
    Element at(std::size_t j) const noexcept { return j < c.size() ? c[j] : 0; }

    static AnnihilatorCoeffs from_poly(const LinearizedPoly& P) {
        AnnihilatorCoeffs a;
        a.c.assign(P.coeffs.rbegin(), P.coeffs.rend());
        return a;
    }
};

inline AnnihilatorCoeffs annihilator_coeffs(const FieldTower& T, const std::vector<Element>& gens) {
    return AnnihilatorCoeffs::from_poly(annihilator(T, gens));
}

/// Lower-triangular A_t with A_t[i][j] = c_{i-j}^[i] for j <= i.
inline MatrixFqm triangular_matrix(const FieldTower& T, const AnnihilatorCoeffs& c, std::size_t t) {
    MatrixFqm A(t + 1, t + 1);
    for (std::size_t i = 0; i <= t; ++i)
        for (std::size_t j = 0; j <= i; ++j) A(i, j) = T.frobenius(c.at(i - j), static_cast<long long>(i));
    return A;
}

/// E = A_t^{-1} by the recursion e_{i,i} = 1, e_{i,j} = -sum_s e_{j+s,j} c_{i-j-s}^[i].
inline MatrixFqm triangular_inverse(const FieldTower& T, const AnnihilatorCoeffs& c, std::size_t t) {
    if (c.c.empty() || c.c[0] != 1) throw std::invalid_argument("triangular inverse needs c_0 = 1");
    MatrixFqm E(t + 1, t + 1);
    for (std::size_t i = 0; i <= t; ++i) {
        E(i, i) = 1;
        for (std::size_t j = 0; j < i; ++j) {
            Element acc = 0;
            for (std::size_t s = 0; s + j < i; ++s)
                acc = T.add(acc, T.mul(E(j + s, j), T.frobenius(c.at(i - j - s), static_cast<long long>(i))));
            E(i, j) = T.neg(acc);
        }
    }
    if (mat_mul(T, triangular_matrix(T, c, t), E) != MatrixFqm::identity(t + 1))
        throw ConsistencyError("A_t * E is not the identity");
    return E;
}

/// g_h^(t) = -sum_{i=0}^{min(t,h)} e_{t,i} c_{k-h+i}^[i].
inline Element g_coefficient(const FieldTower& T, const AnnihilatorCoeffs& c, std::size_t h, std::size_t t) {
    const std::size_t k = c.k();
    if (h >= k)
        throw std::invalid_argument("row index h = " + std::to_string(h) + " out of range [0, " + std::to_string(k) +
                                    ")");
    const MatrixFqm E = triangular_inverse(T, c, t);
    Element acc = 0;
    for (std::size_t i = 0; i <= std::min(t, h); ++i)
        acc = T.add(acc, T.mul(E(t, i), T.frobenius(c.at(k - h + i), static_cast<long long>(i))));
    return T.neg(acc);
}

namespace detail {

inline std::string subset_to_string(const std::vector<std::size_t>& I) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < I.size(); ++i) os << (i ? "," : "") << I[i] + 1;
    os << '}';
    return os.str();
}

inline std::vector<Element> pick(const std::vector<Element>& v, const std::vector<std::size_t>& I) {
    std::vector<Element> out;
    out.reserve(I.size());
    for (auto i : I) {
        if (i >= v.size()) throw std::invalid_argument("subset index out of range");
        out.push_back(v[i]);
    }
    return out;
}

}  // namespace detail

/// g_h^(t)(I) for the span of {alpha_i : i in I}.
inline Element g_of_subset(const FieldTower& T, const std::vector<Element>& alpha, const std::vector<std::size_t>& I,
                           std::size_t h, std::size_t t) {
    const auto sub = detail::pick(alpha, I);
    if (T.fq_rank(sub) != I.size())
        throw std::invalid_argument("evaluation points indexed by " + detail::subset_to_string(I) +
                                    " are F_q-dependent");
    return g_coefficient(T, annihilator_coeffs(T, sub), h, t);
}

/// det M_k^(h,k+t)(alpha) == g_h^(t) det M_k(alpha) for independent alpha of length k.
inline bool verify_modified_moore_identity(const FieldTower& T, const std::vector<Element>& alpha_k, std::size_t h,
                                           std::size_t t) {
    const std::size_t k = alpha_k.size();
    if (T.fq_rank(alpha_k) != k) throw std::invalid_argument("evaluation points are F_q-dependent");
    const Element lhs = det_fqm(T, modified_moore_matrix(T, alpha_k, k, h, k + t));
    const Element g = g_coefficient(T, annihilator_coeffs(T, alpha_k), h, t);
    return lhs == T.mul(g, det_fqm(T, moore_matrix(T, alpha_k, k)));
}

}  // namespace twistgab

#endif  // TWISTGAB_GCOEFF_HPP
