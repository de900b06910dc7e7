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

#ifndef TWISTGAB_CODES_HPP
#define TWISTGAB_CODES_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "field_tower.hpp"
#include "gcoeff.hpp"
#include "linpoly.hpp"
#include "moore.hpp"
#include "parallel.hpp"
#include "subspaces.hpp"

namespace twistgab {

struct Twist {
    std::size_t t = 0;
    Element eta = 1;

    friend bool operator==(const Twist&, const Twist&) = default;
};

/**
 * Gabidulin code (no twists) or twisted Gabidulin code: message polynomials
 * f = sum_{i<k} f_i x^[i] + f_h sum_j eta_j x^[k+t_j], evaluated at alpha.
 * One twist gives C_1, two give C_2, more give C_3.
 */
struct CodeSpec {
    std::vector<Element> alpha;
    std::size_t k = 1;
    std::size_t h = 0;
    std::vector<Twist> twists;

    std::size_t n() const noexcept { return alpha.size(); }
    bool is_gabidulin() const noexcept { return twists.empty(); }

    friend bool operator==(const CodeSpec&, const CodeSpec&) = default;
};

using Codeword = std::vector<Element>;

inline void validate(const FieldTower& T, const CodeSpec& s) {
    const std::size_t n = s.n();
    if (s.k < 1) throw std::invalid_argument("code dimension k must be >= 1");
    if (s.k >= n) throw std::invalid_argument("need k < n (k = " + std::to_string(s.k) + ", n = " + std::to_string(n) + ")");
    if (n > T.m()) throw std::invalid_argument("need n <= m (n = " + std::to_string(n) + ", m = " + std::to_string(T.m()) + ")");
    for (Element a : s.alpha)
        if (!T.contains(a)) throw std::invalid_argument("evaluation point outside the field");
    if (T.fq_rank(s.alpha) != n) throw std::invalid_argument("evaluation points are not F_q-linearly independent");
    if (s.is_gabidulin()) return;
    if (s.h >= s.k) throw std::invalid_argument("twist row h = " + std::to_string(s.h) + " must satisfy 0 <= h <= k-1");
    if (s.twists.size() > n - s.k) throw std::invalid_argument("at most n-k twists are allowed");
    for (std::size_t j = 0; j < s.twists.size(); ++j) {
        const auto& tw = s.twists[j];
        if (tw.t > n - s.k - 1)
            throw std::invalid_argument("twist exponent t = " + std::to_string(tw.t) + " must satisfy 0 <= t <= n-k-1");
        if (j > 0 && tw.t <= s.twists[j - 1].t) throw std::invalid_argument("twist exponents must be strictly increasing");
        if (tw.eta == 0) throw std::invalid_argument("twist coefficient eta must be non-zero");
        if (!T.contains(tw.eta)) throw std::invalid_argument("twist coefficient outside the field");
    }
}

/// Moore rows alpha^[i], with row h carrying alpha^[h] + sum_j eta_j alpha^[k+t_j].
inline MatrixFqm generator_matrix(const FieldTower& T, const CodeSpec& s) {
    validate(T, s);
    MatrixFqm G = moore_matrix(T, s.alpha, s.k);
    for (const auto& tw : s.twists) {
        const auto extra = frobenius_vector(T, s.alpha, static_cast<long long>(s.k + tw.t));
        for (std::size_t j = 0; j < s.n(); ++j) G(s.h, j) = T.add(G(s.h, j), T.mul(tw.eta, extra[j]));
    }
    return G;
}

/// The message polynomial in P_1 / P_2 / P_3.
inline LinearizedPoly message_poly(const FieldTower& T, const CodeSpec& s, const std::vector<Element>& msg) {
    if (msg.size() != s.k)
        throw std::invalid_argument("message has length " + std::to_string(msg.size()) + ", expected k = " +
                                    std::to_string(s.k));
    std::size_t top = s.k;
    for (const auto& tw : s.twists) top = std::max(top, s.k + tw.t + 1);
    std::vector<Element> c(top, 0);
    for (std::size_t i = 0; i < s.k; ++i) c[i] = msg[i];
    for (const auto& tw : s.twists) c[s.k + tw.t] = T.add(c[s.k + tw.t], T.mul(tw.eta, msg[s.h]));
    return LinearizedPoly(std::move(c));
}

inline Codeword encode(const FieldTower& T, const CodeSpec& s, const std::vector<Element>& msg) {
    validate(T, s);
    const auto f = message_poly(T, s, msg);
    Codeword c(s.n());
    for (std::size_t j = 0; j < s.n(); ++j) c[j] = lp_eval(T, f, s.alpha[j]);
    return c;
}

/// msg * G
inline Codeword encode_with(const FieldTower& T, const MatrixFqm& G, const std::vector<Element>& msg) {
    if (msg.size() != G.rows()) throw std::invalid_argument("message length does not match generator rows");
    Codeword c(G.cols(), 0);
    for (std::size_t i = 0; i < G.rows(); ++i) {
        if (msg[i] == 0) continue;
        for (std::size_t j = 0; j < G.cols(); ++j) c[j] = T.add(c[j], T.mul(msg[i], G(i, j)));
    }
    return c;
}

inline std::size_t hamming_weight(const std::vector<Element>& v) noexcept {
    std::size_t w = 0;
    for (Element x : v) w += x != 0;
    return w;
}

/**
 * Non-zero messages up to F_{q^m}^* scaling: the first non-zero entry is 1.
 * Index order is the lexicographic order of the message vectors.
 */
class ProjectiveMessages {
   public:
    ProjectiveMessages(std::uint32_t Q, std::size_t k) : Q_(Q), k_(k) {
        block_.resize(k);
        std::uint64_t total = 0;
        for (std::size_t lead = k; lead-- > 0;) {
            block_[lead] = total;
            total = detail::sat_add(total, detail::sat_pow(Q, static_cast<unsigned>(k - 1 - lead)));
        }
        total_ = total;
    }

    std::uint64_t size() const noexcept { return total_; }

    std::vector<Element> at(std::uint64_t index) const {
        std::size_t lead = k_ - 1;
        while (lead > 0 && index >= block_[lead - 1]) --lead;
        std::uint64_t tail = index - block_[lead];
        std::vector<Element> msg(k_, 0);
        msg[lead] = 1;
        for (std::size_t j = k_; j-- > lead + 1;) {
            msg[j] = static_cast<Element>(tail % Q_);
            tail /= Q_;
        }
        return msg;
    }

   private:
    std::uint32_t Q_;
    std::size_t k_;
    std::uint64_t total_ = 0;
    std::vector<std::uint64_t> block_;  // first index of each leading position
};

struct MinDistances {
    std::size_t d_rank = 0;
    std::size_t d_hamming = 0;
    std::vector<Element> rank_witness;     // message
    std::vector<Element> hamming_witness;  // message
    std::uint64_t enumerated = 0;
};

/// Exact minimum rank and Hamming weights of the row space of G by projective enumeration.
inline MinDistances min_distances(const FieldTower& T, const MatrixFqm& G, const Budget& budget) {
    const ProjectiveMessages msgs(T.order(), G.rows());
    detail::check_budget("codeword enumeration", msgs.size(), budget.codewords);
    struct Part {
        std::size_t dr = std::numeric_limits<std::size_t>::max(), dh = dr;
        std::uint64_t ir = 0, ih = 0;
    };
    const auto parts = parallel_ranges(msgs.size(), budget.workers, [&](std::uint64_t b, std::uint64_t e) {
        Part p;
        for (std::uint64_t i = b; i < e; ++i) {
            const auto c = encode_with(T, G, msgs.at(i));
            const std::size_t wh = hamming_weight(c);
            if (wh < p.dh) {
                p.dh = wh;
                p.ih = i;
            }
            if (p.dr > 1) {  // nothing beats rank 1
                const std::size_t wr = T.fq_rank(c);
                if (wr < p.dr) {
                    p.dr = wr;
                    p.ir = i;
                }
            }
        }
        return p;
    });
    Part best;
    for (const auto& p : parts) {
        if (p.dr < best.dr) {
            best.dr = p.dr;
            best.ir = p.ir;
        }
        if (p.dh < best.dh) {
            best.dh = p.dh;
            best.ih = p.ih;
        }
    }
    MinDistances out;
    out.d_rank = best.dr;
    out.d_hamming = best.dh;
    out.rank_witness = msgs.at(best.ir);
    out.hamming_witness = msgs.at(best.ih);
    out.enumerated = msgs.size();
    return out;
}

/// Rows span the dual code {x : G x^T = 0}.
inline MatrixFqm parity_check_matrix(const FieldTower& T, const MatrixFqm& G) {
    const auto basis = null_space(T, G);
    MatrixFqm H(basis.size(), G.cols());
    for (std::size_t i = 0; i < basis.size(); ++i) H.set_row(i, basis[i]);
    return H;
}

inline std::size_t dual_min_hamming_distance(const FieldTower& T, const MatrixFqm& G, const Budget& budget) {
    const MatrixFqm H = parity_check_matrix(T, G);
    if (H.rows() == 0) throw std::invalid_argument("dual code is zero");
    return min_distances(T, H, budget).d_hamming;
}

struct NmdsConditions {
    bool cond_i = false;    // every k-1 columns independent
    bool cond_ii = false;   // some k columns dependent
    bool cond_iii = false;  // every k+1 columns have rank k
    std::optional<std::vector<std::size_t>> dependent_k_subset;
};

inline NmdsConditions nmds_conditions(const FieldTower& T, const MatrixFqm& G) {
    const std::size_t k = G.rows(), n = G.cols();
    if (rank_fqm(T, G) != k) throw std::invalid_argument("generator matrix is rank deficient");
    NmdsConditions c;
    c.cond_i = true;
    if (k >= 2)
        for (const auto& S : combinations(n, k - 1))
            if (rank_fqm(T, G.select_columns(S)) != k - 1) {
                c.cond_i = false;
                break;
            }
    for (const auto& S : combinations(n, k))
        if (det_fqm(T, G.select_columns(S)) == 0) {
            c.cond_ii = true;
            c.dependent_k_subset = S;
            break;
        }
    c.cond_iii = true;
    for (const auto& S : combinations(n, k + 1))
        if (rank_fqm(T, G.select_columns(S)) != k) {
            c.cond_iii = false;
            break;
        }
    return c;
}

/// det(V G^T) for a k x n matrix V over F_q.
inline Element subspace_minor(const FieldTower& T, const Matrix& V, const MatrixFqm& G) {
    return det_fqm(T, mat_mul(T, V, G.transpose()));
}

struct SubspaceVerdict {
    bool holds = true;
    std::optional<Matrix> witness;  // first V with a vanishing minor
    std::uint64_t enumerated = 0;
};

/// rank(V G^T) = k for every RREF representative V of V_q(k, n).
inline SubspaceVerdict mrd_by_subspaces(const FieldTower& T, const MatrixFqm& G, const Budget& budget) {
    const SubspaceEnumerator en(T.q(), static_cast<unsigned>(G.cols()), static_cast<unsigned>(G.rows()),
                                budget.subspaces);
    const auto parts = parallel_ranges(en.size(), budget.workers, [&](std::uint64_t b, std::uint64_t e) {
        std::optional<std::uint64_t> hit;
        for (std::uint64_t i = b; i < e && !hit; ++i)
            if (subspace_minor(T, en.at(i), G) == 0) hit = i;
        return hit;
    });
    SubspaceVerdict v;
    v.enumerated = en.size();
    for (const auto& p : parts)
        if (p) {
            v.holds = false;
            v.witness = en.at(*p);
            break;
        }
    return v;
}

enum class HammingClass { MDS, NMDS, AMDS, None };

inline const char* to_string(HammingClass c) noexcept {
    switch (c) {
        case HammingClass::MDS: return "MDS";
        case HammingClass::NMDS: return "NMDS";
        case HammingClass::AMDS: return "AMDS";
        default: return "none";
    }
}

struct DistanceReport {
    std::size_t n = 0, k = 0;
    std::size_t d_rank = 0;
    std::size_t d_hamming = 0;
    std::size_t dual_d_hamming = 0;
    bool is_mrd = false, is_mds = false, is_amds = false, is_nmds = false;
    HammingClass label = HammingClass::None;
    std::vector<Element> rank_witness_message, hamming_witness_message;
    Codeword rank_witness, hamming_witness;
    // structural route
    NmdsConditions conditions;
    SubspaceVerdict subspace;
    std::uint64_t codewords_enumerated = 0;
};

inline HammingClass hamming_label(bool mds, bool amds, bool nmds) noexcept {
    if (mds) return HammingClass::MDS;
    if (nmds) return HammingClass::NMDS;
    if (amds) return HammingClass::AMDS;
    return HammingClass::None;
}

/// Rank and Hamming distances by enumeration, cross-checked against the column and subspace criteria.
inline DistanceReport classify_generator(const FieldTower& T, const MatrixFqm& G, const Budget& budget) {
    DistanceReport r;
    r.n = G.cols();
    r.k = G.rows();
    const auto md = min_distances(T, G, budget);
    r.d_rank = md.d_rank;
    r.d_hamming = md.d_hamming;
    r.rank_witness_message = md.rank_witness;
    r.hamming_witness_message = md.hamming_witness;
    r.rank_witness = encode_with(T, G, md.rank_witness);
    r.hamming_witness = encode_with(T, G, md.hamming_witness);
    r.codewords_enumerated = md.enumerated;
    r.dual_d_hamming = dual_min_hamming_distance(T, G, budget);
    const std::size_t sb = r.n - r.k + 1;
    if (!(r.d_rank <= r.d_hamming && r.d_hamming <= sb))
        throw ConsistencyError("distance bounds violated: d_R = " + std::to_string(r.d_rank) +
                               ", d_H = " + std::to_string(r.d_hamming));
    r.is_mrd = r.d_rank == sb;
    r.is_mds = r.d_hamming == sb;
    r.is_amds = r.d_hamming == sb - 1;
    r.is_nmds = r.is_amds && r.dual_d_hamming == r.k;
    r.label = hamming_label(r.is_mds, r.is_amds, r.is_nmds);

    r.conditions = nmds_conditions(T, G);
    const auto& c = r.conditions;
    const bool s_mds = !c.cond_ii, s_amds = c.cond_ii && c.cond_iii, s_nmds = c.cond_i && c.cond_ii && c.cond_iii;
    if (s_mds != r.is_mds || s_amds != r.is_amds || s_nmds != r.is_nmds)
        throw ConsistencyError(std::string("column-rank classification ") + to_string(hamming_label(s_mds, s_amds, s_nmds)) +
                               " disagrees with enumeration " + to_string(r.label));
    r.subspace = mrd_by_subspaces(T, G, budget);
    if (r.subspace.holds != r.is_mrd)
        throw ConsistencyError(std::string("subspace criterion says ") + (r.subspace.holds ? "MRD" : "not MRD") +
                               " but minimum rank distance is " + std::to_string(r.d_rank));
    if (r.is_mrd && !r.is_mds) throw ConsistencyError("MRD code that is not MDS");
    return r;
}

inline DistanceReport classify(const FieldTower& T, const CodeSpec& s, const Budget& budget) {
    return classify_generator(T, generator_matrix(T, s), budget);
}

inline DistanceReport min_rank_distance(const FieldTower& T, const CodeSpec& s, const Budget& budget) {
    const MatrixFqm G = generator_matrix(T, s);
    const auto md = min_distances(T, G, budget);
    DistanceReport r;
    r.n = s.n();
    r.k = s.k;
    r.d_rank = md.d_rank;
    r.d_hamming = md.d_hamming;
    r.rank_witness_message = md.rank_witness;
    r.hamming_witness_message = md.hamming_witness;
    r.rank_witness = encode_with(T, G, md.rank_witness);
    r.hamming_witness = encode_with(T, G, md.hamming_witness);
    r.codewords_enumerated = md.enumerated;
    r.is_mrd = r.d_rank == r.n - r.k + 1;
    r.is_mds = r.d_hamming == r.n - r.k + 1;
    r.is_amds = r.d_hamming == r.n - r.k;
    return r;
}

inline std::size_t min_hamming_distance(const FieldTower& T, const CodeSpec& s, const Budget& budget) {
    return min_distances(T, generator_matrix(T, s), budget).d_hamming;
}

}  // namespace twistgab

#endif  // TWISTGAB_CODES_HPP
