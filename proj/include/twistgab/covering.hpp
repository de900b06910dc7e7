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

#ifndef TWISTGAB_COVERING_HPP
#define TWISTGAB_COVERING_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "codes.hpp"
#include "errors.hpp"
#include "field_tower.hpp"
#include "linpoly.hpp"
#include "parallel.hpp"

namespace twistgab {

struct DeepHole {
    Codeword u;
    std::size_t distance = 0;
};

struct CoveringReport {
    std::size_t n = 0, k = 0;
    bool exhaustive = false;
    std::optional<std::size_t> rho;
    std::size_t lower_bound = 0, upper_bound = 0;
    std::string lower_provenance, upper_provenance;
    std::vector<DeepHole> deep_holes;  // first cosets (by index) attaining rho
    std::uint64_t cosets = 0;
};

struct CoveringBounds {
    std::size_t lower = 0, upper = 0;
    std::string lower_provenance = "trivial", upper_provenance = "redundancy bound";
};

/// Theorem bounds: exact n-k for one twist at t = 0, [n-k-l+1, n-k] for twists t = 0..l-1, else [0, n-k].
inline CoveringBounds covering_bounds(const FieldTower& T, const CodeSpec& s) {
    validate(T, s);
    CoveringBounds b;
    const std::size_t r = s.n() - s.k;
    b.upper = r;
    bool contiguous = !s.twists.empty();
    for (std::size_t j = 0; j < s.twists.size(); ++j) contiguous = contiguous && s.twists[j].t == j;
    if (contiguous) {
        const std::size_t l = s.twists.size();
        b.lower = r + 1 >= l ? r + 1 - l : 0;
        b.lower_provenance = "supercode bound";
    }
    return b;
}

namespace detail {

// every codeword of the row space of R, indexed by message in base Q (last entry most significant)
inline std::vector<Codeword> codebook(const FieldTower& T, const MatrixFqm& R, const Budget& budget) {
    const std::uint64_t count = sat_pow(T.order(), static_cast<unsigned>(R.rows()));
    check_budget("codeword enumeration", count, budget.codewords);
    std::vector<Codeword> out;
    out.reserve(count);
    std::vector<Element> msg(R.rows(), 0);
    for (std::uint64_t i = 0; i < count; ++i) {
        std::uint64_t v = i;
        for (auto& x : msg) {
            x = static_cast<Element>(v % T.order());
            v /= T.order();
        }
        out.push_back(encode_with(T, R, msg));
    }
    return out;
}

inline std::size_t distance_with_codebook(const FieldTower& T, const Codeword& u, const std::vector<Codeword>& book,
                                          std::size_t stop_below = 0) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    Codeword diff(u.size());
    for (const auto& c : book) {
        for (std::size_t j = 0; j < u.size(); ++j) diff[j] = T.sub(u[j], c[j]);
        best = std::min(best, T.fq_rank(diff));
        if (best < stop_below || best == 0) break;
    }
    return best;
}

}  // namespace detail

inline std::size_t distance_to_code_generator(const FieldTower& T, const Codeword& u, const MatrixFqm& G,
                                              const Budget& budget) {
    if (u.size() != G.cols()) throw std::invalid_argument("vector length does not match the code length");
    const auto book = detail::codebook(T, G, budget);
    return detail::distance_with_codebook(T, u, book);
}

inline std::size_t distance_to_code(const FieldTower& T, const Codeword& u, const CodeSpec& s, const Budget& budget) {
    return distance_to_code_generator(T, u, generator_matrix(T, s), budget);
}

/**
 * Covering radius of the row space of G by scanning cosets. Coset
 * representatives vanish on the pivot columns of rref(G); a coset's minimum is
 * abandoned as soon as it drops below the best value its worker has seen.
 */
inline CoveringReport covering_radius_generator(const FieldTower& T, const MatrixFqm& G, const Budget& budget,
                                                std::size_t max_deep_holes = 16) {
    CoveringReport rep;
    rep.n = G.cols();
    rep.k = G.rows();
    rep.upper_bound = rep.n - std::min(rep.n, rep.k);
    rep.upper_provenance = "redundancy bound";
    rep.lower_provenance = "trivial";
    MatrixFqm R = G;
    const auto pivots = rref_in_place(T, R);
    if (pivots.size() != G.rows()) throw std::invalid_argument("generator matrix is rank deficient");
    detail::check_budget("ambient space enumeration", detail::sat_pow(T.order(), static_cast<unsigned>(rep.n)),
                         budget.ambient);
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0, p = 0; j < rep.n; ++j) {
        if (p < pivots.size() && pivots[p] == j) {
            ++p;
            continue;
        }
        free_cols.push_back(j);
    }
    const auto book = detail::codebook(T, R, budget);
    rep.cosets = detail::sat_pow(T.order(), static_cast<unsigned>(free_cols.size()));
    auto coset_rep = [&](std::uint64_t index) {
        Codeword u(rep.n, 0);
        for (std::size_t f = 0; f < free_cols.size(); ++f) {
            u[free_cols[f]] = static_cast<Element>(index % T.order());
            index /= T.order();
        }
        return u;
    };
    struct Part {
        std::size_t best = 0;
        std::vector<std::uint64_t> deep;  // cosets attaining best, earliest first
    };
    const auto parts = parallel_ranges(rep.cosets, budget.workers, [&](std::uint64_t b, std::uint64_t e) {
        Part p;
        for (std::uint64_t i = b; i < e; ++i) {
            const std::size_t d = detail::distance_with_codebook(T, coset_rep(i), book, p.best);
            if (d > p.best) {
                p.best = d;
                p.deep.clear();
            }
            if (d == p.best && p.deep.size() < max_deep_holes) p.deep.push_back(i);
        }
        return p;
    });
    std::size_t rho = 0;
    for (const auto& p : parts) rho = std::max(rho, p.best);
    for (const auto& p : parts) {
        if (p.best != rho) continue;
        for (auto i : p.deep) {
            if (rep.deep_holes.size() >= max_deep_holes) break;
            rep.deep_holes.push_back({coset_rep(i), rho});
        }
    }
    rep.exhaustive = true;
    rep.rho = rho;
    if (rho > rep.upper_bound) throw ConsistencyError("covering radius exceeds n-k");
    return rep;
}

/// Exhaustive covering radius when the ambient space fits the budget, theorem bounds otherwise.
inline CoveringReport covering_radius_exhaustive(const FieldTower& T, const CodeSpec& s, const Budget& budget) {
    const auto bounds = covering_bounds(T, s);
    CoveringReport rep;
    try {
        rep = covering_radius_generator(T, generator_matrix(T, s), budget);
    } catch (const BudgetExceeded&) {
        rep.n = s.n();
        rep.k = s.k;
        rep.exhaustive = false;
    }
    rep.lower_bound = bounds.lower;
    rep.upper_bound = bounds.upper;
    rep.lower_provenance = bounds.lower_provenance;
    rep.upper_provenance = bounds.upper_provenance;
    if (rep.rho && (*rep.rho < rep.lower_bound || *rep.rho > rep.upper_bound))
        throw ConsistencyError("exhaustive covering radius " + std::to_string(*rep.rho) + " outside theorem bounds [" +
                               std::to_string(rep.lower_bound) + ", " + std::to_string(rep.upper_bound) + "]");
    return rep;
}

inline bool is_deep_hole(const FieldTower& T, const Codeword& u, const CodeSpec& s, std::size_t rho,
                         const Budget& budget) {
    return distance_to_code(T, u, s, budget) == rho;
}

inline bool is_deep_hole(const FieldTower& T, const Codeword& u, const CodeSpec& s, const Budget& budget) {
    const auto rep = covering_radius_exhaustive(T, s, budget);
    if (!rep.rho) throw BudgetExceeded("covering radius", detail::sat_pow(T.order(), static_cast<unsigned>(s.n())),
                                       budget.ambient);
    return is_deep_hole(T, u, s, *rep.rho, budget);
}

namespace detail {

inline void require_one_twist_t0(const CodeSpec& s) {
    if (s.twists.size() != 1 || s.twists[0].t != 0)
        throw std::invalid_argument("deep-hole results need a code with exactly one twist at t = 0");
}

}  // namespace detail

/// u is a deep hole of C_1 (t = 0) iff [G_1; u] generates an [n, k+1] MRD code.
inline bool deep_hole_via_extension(const FieldTower& T, const Codeword& u, const CodeSpec& s, const Budget& budget) {
    detail::require_one_twist_t0(s);
    const MatrixFqm G = generator_matrix(T, s);
    if (u.size() != s.n()) throw std::invalid_argument("vector length does not match the code length");
    MatrixFqm E(G.rows() + 1, G.cols());
    for (std::size_t i = 0; i < G.rows(); ++i) E.set_row(i, G.row(i));
    E.set_row(G.rows(), u);
    if (rank_fqm(T, E) != G.rows() + 1) throw std::invalid_argument("vector lies in the code");
    return mrd_by_subspaces(T, E, budget).holds;
}

enum class DeepHoleFlavor { XK, XH };

/// u_g = (g(alpha_1), ..., g(alpha_n)) with g(x) = g x^[k] + f(x) or g x^[h] + f(x), f in P_1.
inline Codeword deep_hole_family(const FieldTower& T, const CodeSpec& s, Element g, DeepHoleFlavor flavor,
                                 const std::vector<Element>& f_message) {
    detail::require_one_twist_t0(s);
    validate(T, s);
    if (g == 0) throw std::invalid_argument("g must be non-zero (the vector would lie in the code)");
    const std::size_t pos = flavor == DeepHoleFlavor::XK ? s.k : s.h;
    const auto poly = lp_add(T, LinearizedPoly::monomial(g, pos), message_poly(T, s, f_message));
    Codeword u(s.n());
    for (std::size_t j = 0; j < s.n(); ++j) u[j] = lp_eval(T, poly, s.alpha[j]);
    return u;
}

}  // namespace twistgab

#endif  // TWISTGAB_COVERING_HPP
