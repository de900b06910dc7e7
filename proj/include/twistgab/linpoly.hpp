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

#ifndef TWISTGAB_LINPOLY_HPP
#define TWISTGAB_LINPOLY_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "field_tower.hpp"
#include "matrix.hpp"

namespace twistgab {

/**
 * q-polynomial f(x) = sum_i coeffs[i] x^[i] with x^[i] = x^(q^i).
 * Trailing zero coefficients are stripped, so the zero polynomial has no coefficients.
 */
struct LinearizedPoly {
    std::vector<Element> coeffs;

    LinearizedPoly() = default;
    explicit LinearizedPoly(std::vector<Element> c) : coeffs(std::move(c)) { normalize(); }

    /// a x^[i]
    static LinearizedPoly monomial(Element a, std::size_t i) {
        std::vector<Element> c(i + 1, 0);
        c[i] = a;
        return LinearizedPoly(std::move(c));
    }
    static LinearizedPoly identity() { return monomial(1, 0); }

    void normalize() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    bool is_zero() const noexcept { return coeffs.empty(); }
    /// q-degree; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs.size()) - 1; }
    Element coeff(std::size_t i) const noexcept { return i < coeffs.size() ? coeffs[i] : 0; }
    Element lead() const noexcept { return coeffs.empty() ? 0 : coeffs.back(); }

    friend bool operator==(const LinearizedPoly&, const LinearizedPoly&) = default;
};

inline Element lp_eval(const FieldTower& T, const LinearizedPoly& f, Element x) {
    Element acc = 0;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
        if (f.coeffs[i] != 0) acc = T.add(acc, T.mul(f.coeffs[i], T.frobenius(x, static_cast<long long>(i))));
    return acc;
}

inline LinearizedPoly lp_add(const FieldTower& T, const LinearizedPoly& f, const LinearizedPoly& g) {
    std::vector<Element> c(std::max(f.coeffs.size(), g.coeffs.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = T.add(f.coeff(i), g.coeff(i));
    return LinearizedPoly(std::move(c));
}

inline LinearizedPoly lp_sub(const FieldTower& T, const LinearizedPoly& f, const LinearizedPoly& g) {
    std::vector<Element> c(std::max(f.coeffs.size(), g.coeffs.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = T.sub(f.coeff(i), g.coeff(i));
    return LinearizedPoly(std::move(c));
}

inline LinearizedPoly lp_scale(const FieldTower& T, Element a, const LinearizedPoly& f) {
    std::vector<Element> c(f.coeffs);
    for (auto& v : c) v = T.mul(a, v);
    return LinearizedPoly(std::move(c));
}

/// Composition f o g: coefficient k is sum_i f_i sigma^i(g_{k-i}).
inline LinearizedPoly lp_skew_mul(const FieldTower& T, const LinearizedPoly& f, const LinearizedPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<Element> c(f.coeffs.size() + g.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (f.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < g.coeffs.size(); ++j)
            c[i + j] = T.add(c[i + j], T.mul(f.coeffs[i], T.frobenius(g.coeffs[j], static_cast<long long>(i))));
    }
    return LinearizedPoly(std::move(c));
}

/// m x m matrix over F_q of x -> f(x).
inline Matrix lp_matrix(const FieldTower& T, const LinearizedPoly& f) {
    return T.linear_map_matrix([&](Element x) { return lp_eval(T, f, x); });
}

inline std::vector<Element> lp_kernel(const FieldTower& T, const LinearizedPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("kernel of the zero polynomial is the whole field");
    std::vector<Element> basis;
    for (const auto& v : null_space(T.base(), lp_matrix(T, f))) basis.push_back(T.from_coords(v));
    return basis;
}

/// Echelonized F_q-basis of the span of gens.
inline std::vector<Element> fq_span_basis(const FieldTower& T, const std::vector<Element>& gens) {
    Matrix M = T.coordinate_matrix(gens);
    const auto piv = rref_in_place(T.base(), M);
    std::vector<Element> basis;
    for (std::size_t r = 0; r < piv.size(); ++r) basis.push_back(T.from_coords(M.row(r)));
    return basis;
}

/// Every element of the F_q-span of an independent basis, in coefficient order.
inline std::vector<Element> fq_span_elements(const FieldTower& T, const std::vector<Element>& basis) {
    std::vector<Element> out{0};
    for (Element b : basis) {
        const std::size_t sz = out.size();
        for (std::uint32_t c = 1; c < T.q(); ++c) {
            const Element cb = T.mul(c, b);
            for (std::size_t i = 0; i < sz; ++i) out.push_back(T.add(out[i], cb));
        }
    }
    return out;
}

namespace detail {

inline constexpr std::size_t literal_annihilator_limit = 4096;

// prod_{u in U} (x - u) as an ordinary polynomial, then read off the q-power coefficients.
inline LinearizedPoly annihilator_literal(const FieldTower& T, const std::vector<Element>& elements) {
    std::vector<Element> poly{1};
    for (Element u : elements) {
        std::vector<Element> next(poly.size() + 1, 0);
        const Element nu = T.neg(u);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = T.add(next[i + 1], poly[i]);
            next[i] = T.add(next[i], T.mul(nu, poly[i]));
        }
        poly = std::move(next);
    }
    std::vector<Element> lin;
    std::uint64_t qi = 1;
    for (std::size_t d = 1; d < poly.size(); ++d) {
        if (d == qi) {
            lin.push_back(poly[d]);
            qi *= T.q();
        } else if (poly[d] != 0) {
            throw ConsistencyError("subspace polynomial has a non q-power term");
        }
    }
    if (poly[0] != 0) throw ConsistencyError("subspace polynomial has a constant term");
    return LinearizedPoly(std::move(lin));
}

}  // namespace detail

/// Annihilator built by composing (x^[1] - P(b)^(q-1) x) o P over the basis of U.
inline LinearizedPoly annihilator_composition(const FieldTower& T, const std::vector<Element>& gens) {
    LinearizedPoly P = LinearizedPoly::identity();
    for (Element b : fq_span_basis(T, gens)) {
        const Element v = lp_eval(T, P, b);
        if (v == 0) throw ConsistencyError("basis vector already in the kernel");
        LinearizedPoly step({T.neg(T.pow(v, T.q() - 1)), 1});
        P = lp_skew_mul(T, step, P);
    }
    return P;
}

/**
 * Monic q-polynomial whose roots are exactly the F_q-span U of gens. Small U
 * expands the literal product over its elements; larger U uses composition.
 * When both are cheap they are compared.
 */
inline LinearizedPoly annihilator(const FieldTower& T, const std::vector<Element>& gens) {
    const auto basis = fq_span_basis(T, gens);
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) size = detail::sat_mul(size, T.q());
    auto fast = annihilator_composition(T, basis);
    if (size > detail::literal_annihilator_limit) return fast;
    auto literal = detail::annihilator_literal(T, fq_span_elements(T, basis));
    if (literal != fast) throw ConsistencyError("literal and composed annihilators differ");
    return literal;
}

/// f = quotient o d + remainder with deg remainder < deg d.
inline std::pair<LinearizedPoly, LinearizedPoly> lp_right_divide(const FieldTower& T, const LinearizedPoly& f,
                                                                 const LinearizedPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    LinearizedPoly r = f;
    std::vector<Element> quot(f.degree() >= d.degree() ? static_cast<std::size_t>(f.degree() - d.degree() + 1) : 0, 0);
    while (r.degree() >= d.degree()) {
        const auto s = static_cast<std::size_t>(r.degree() - d.degree());
        const Element a = T.div(r.lead(), T.frobenius(d.lead(), static_cast<long long>(s)));
        quot[s] = a;
        r = lp_sub(T, r, lp_skew_mul(T, LinearizedPoly::monomial(a, s), d));
    }
    return {LinearizedPoly(std::move(quot)), r};
}

}  // namespace twistgab

#endif  // TWISTGAB_LINPOLY_HPP
