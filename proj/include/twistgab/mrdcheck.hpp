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

#ifndef TWISTGAB_MRDCHECK_HPP
#define TWISTGAB_MRDCHECK_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "codes.hpp"
#include "errors.hpp"
#include "field_tower.hpp"
#include "gcoeff.hpp"
#include "moore.hpp"
#include "parallel.hpp"
#include "subspaces.hpp"

namespace twistgab {

inline SubspaceEnumerator enumerate_subspaces(const FieldTower& T, unsigned n, unsigned k, const Budget& budget) {
    return SubspaceEnumerator(T.q(), n, k, budget.subspaces);
}

inline SubspaceVerdict is_mrd_subspace_criterion(const FieldTower& T, const CodeSpec& s, const Budget& budget) {
    return mrd_by_subspaces(T, generator_matrix(T, s), budget);
}

/**
 * A set of parameter values that certify a vanishing maximal minor. Each value
 * keeps the first witness found: a subspace basis V or a column subset I.
 * For one twist the values are forbidden values of 1/eta.
 */
struct ForbiddenSet {
    struct Entry {
        std::vector<Element> value;
        std::optional<Matrix> V;
        std::optional<std::vector<std::size_t>> I;
    };
    std::size_t arity = 1;
    std::string provenance;
    std::vector<Entry> entries;  // sorted by value, deduplicated
    std::uint64_t enumerated = 0;

    bool contains(const std::vector<Element>& v) const {
        return std::binary_search(entries.begin(), entries.end(), v,
                                  [](const auto& a, const auto& b) { return key(a) < key(b); });
    }
    bool contains(Element v) const { return contains(std::vector<Element>{v}); }
    const Entry* find(Element v) const {
        for (const auto& e : entries)
            if (e.value.size() == 1 && e.value[0] == v) return &e;
        return nullptr;
    }
    std::set<Element> values() const {
        std::set<Element> out;
        for (const auto& e : entries) out.insert(e.value.at(0));
        return out;
    }

    // merge keeps the witness of the earliest insertion
    void insert(Entry e) { pending_.push_back(std::move(e)); }
    void finalize() {
        std::map<std::vector<Element>, Entry> m;
        for (auto& e : pending_) m.try_emplace(e.value, std::move(e));
        pending_.clear();
        for (auto& [k, e] : m) entries.push_back(std::move(e));
    }

   private:
    static const std::vector<Element>& key(const Entry& e) { return e.value; }
    static const std::vector<Element>& key(const std::vector<Element>& v) { return v; }
    std::vector<Entry> pending_;
};

namespace detail {

inline void require_full_rank(const FieldTower& T, const std::vector<Element>& alpha) {
    if (T.fq_rank(alpha) != alpha.size()) throw std::invalid_argument("evaluation points are not F_q-linearly independent");
}

// (|V M_k^T|, |V M_k^(h,k+t_j)^T| for each j) for one subspace V
struct MinorSet {
    Element base = 0;
    std::vector<Element> twisted;
};

inline MinorSet minors_for(const FieldTower& T, const Matrix& V, const MatrixFqm& Mk,
                           const std::vector<MatrixFqm>& Mt) {
    MinorSet m;
    m.base = subspace_minor(T, V, Mk);
    if (m.base == 0) throw ConsistencyError("a Gabidulin maximal minor |V M_k^T| vanished");
    for (const auto& M : Mt) m.twisted.push_back(subspace_minor(T, V, M));
    return m;
}

}  // namespace detail

/**
 * {-|V M_k^(h,k+t)^T| / |V M_k^T| : V} minus zero. C_1 with parameter eta is
 * MRD exactly when 1/eta is not in this set.
 */
inline ForbiddenSet forbidden_eta_set_one_twist(const FieldTower& T, const std::vector<Element>& alpha, std::size_t k,
                                                std::size_t h, std::size_t t, const Budget& budget) {
    detail::require_full_rank(T, alpha);
    if (h >= k || k >= alpha.size()) throw std::invalid_argument("need 0 <= h < k < n");
    const MatrixFqm Mk = moore_matrix(T, alpha, k);
    const std::vector<MatrixFqm> Mt{modified_moore_matrix(T, alpha, k, h, k + t)};
    const auto en = enumerate_subspaces(T, static_cast<unsigned>(alpha.size()), static_cast<unsigned>(k), budget);
    using Part = std::vector<std::pair<Element, std::uint64_t>>;
    const auto parts = parallel_ranges(en.size(), budget.workers, [&](std::uint64_t b, std::uint64_t e) {
        Part p;
        for (std::uint64_t i = b; i < e; ++i) {
            const auto m = detail::minors_for(T, en.at(i), Mk, Mt);
            if (m.twisted[0] != 0) p.emplace_back(T.neg(T.div(m.twisted[0], m.base)), i);
        }
        return p;
    });
    ForbiddenSet fs;
    fs.arity = 1;
    fs.provenance = "ratio set over subspaces (values of 1/eta)";
    fs.enumerated = en.size();
    for (const auto& p : parts)
        for (const auto& [v, i] : p) fs.insert({{v}, en.at(i), std::nullopt});
    fs.finalize();
    return fs;
}

/// Omega_1 = {-g_h^(t)(I) : I a k-subset}.
inline ForbiddenSet omega_one(const FieldTower& T, const std::vector<Element>& alpha, std::size_t k, std::size_t h,
                              std::size_t t) {
    detail::require_full_rank(T, alpha);
    ForbiddenSet fs;
    fs.arity = 1;
    fs.provenance = "Omega_1";
    for (const auto& I : combinations(alpha.size(), k)) {
        fs.insert({{T.neg(g_of_subset(T, alpha, I, h, t))}, std::nullopt, I});
        ++fs.enumerated;
    }
    fs.finalize();
    return fs;
}

/// Omega_1' = {c_{k-h}(I)}; checked against Omega_1 at t = 0 subset by subset.
inline ForbiddenSet omega_one_prime(const FieldTower& T, const std::vector<Element>& alpha, std::size_t k,
                                    std::size_t h) {
    detail::require_full_rank(T, alpha);
    if (h >= k) throw std::invalid_argument("need 0 <= h < k");
    ForbiddenSet fs;
    fs.arity = 1;
    fs.provenance = "Omega_1'";
    for (const auto& I : combinations(alpha.size(), k)) {
        const Element c = annihilator_coeffs(T, detail::pick(alpha, I)).at(k - h);
        if (c != T.neg(g_of_subset(T, alpha, I, h, 0)))
            throw ConsistencyError("Omega_1' and Omega_1(t=0) differ on " + detail::subset_to_string(I));
        fs.insert({{c}, std::nullopt, I});
        ++fs.enumerated;
    }
    fs.finalize();
    return fs;
}

/// First k-subset I (lexicographic) with 1 + sum_j eta_j g_h^(t_j)(I) = 0.
inline std::optional<std::vector<std::size_t>> omega_ell_witness(const FieldTower& T, const std::vector<Element>& alpha,
                                                                 std::size_t k, std::size_t h,
                                                                 const std::vector<std::size_t>& ts,
                                                                 const std::vector<Element>& etas) {
    if (ts.size() != etas.size()) throw std::invalid_argument("need one eta per twist exponent");
    detail::require_full_rank(T, alpha);
    for (const auto& I : combinations(alpha.size(), k)) {
        Element acc = 1;
        for (std::size_t j = 0; j < ts.size(); ++j) acc = T.add(acc, T.mul(etas[j], g_of_subset(T, alpha, I, h, ts[j])));
        if (acc == 0) return I;
    }
    return std::nullopt;
}

inline std::optional<std::vector<std::size_t>> omega_two_witness(const FieldTower& T, const std::vector<Element>& alpha,
                                                                 std::size_t k, std::size_t h, std::size_t t1,
                                                                 std::size_t t2, Element eta1, Element eta2) {
    return omega_ell_witness(T, alpha, k, h, {t1, t2}, {eta1, eta2});
}

/// t = (0, 1): first I with (eta1 - eta2 c_1^[1]) c_{k-h} + eta2 c_{k-h+1}^[1] = 1.
inline std::optional<std::vector<std::size_t>> omega_two_closed_form_witness(const FieldTower& T,
                                                                             const std::vector<Element>& alpha,
                                                                             std::size_t k, std::size_t h, Element eta1,
                                                                             Element eta2) {
    detail::require_full_rank(T, alpha);
    for (const auto& I : combinations(alpha.size(), k)) {
        const auto c = annihilator_coeffs(T, detail::pick(alpha, I));
        const Element lhs = T.add(T.mul(T.sub(eta1, T.mul(eta2, T.frobenius(c.at(1), 1))), c.at(k - h)),
                                  T.mul(eta2, T.frobenius(c.at(k - h + 1), 1)));
        if (lhs == 1) return I;
    }
    return std::nullopt;
}

/// |V M_k^T| + sum_j eta_j |V M_k^(h,k+t_j)^T| != 0 for every V.
inline SubspaceVerdict mrd_membership_multi(const FieldTower& T, const CodeSpec& s, const Budget& budget) {
    validate(T, s);
    const MatrixFqm Mk = moore_matrix(T, s.alpha, s.k);
    std::vector<MatrixFqm> Mt;
    for (const auto& tw : s.twists) Mt.push_back(modified_moore_matrix(T, s.alpha, s.k, s.h, s.k + tw.t));
    const auto en = enumerate_subspaces(T, static_cast<unsigned>(s.n()), static_cast<unsigned>(s.k), budget);
    const auto parts = parallel_ranges(en.size(), budget.workers, [&](std::uint64_t b, std::uint64_t e) {
        std::optional<std::uint64_t> hit;
        for (std::uint64_t i = b; i < e && !hit; ++i) {
            const auto m = detail::minors_for(T, en.at(i), Mk, Mt);
            Element acc = m.base;
            for (std::size_t j = 0; j < Mt.size(); ++j) acc = T.add(acc, T.mul(s.twists[j].eta, m.twisted[j]));
            if (acc == 0) hit = i;
        }
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

/// Sum of a_S prod_{i in S} eta_i over 0 < |S| <= t never lands in F_{q^s}^*, checked over every coefficient tuple.
inline bool sum_product_free_test(const FieldTower& T, const std::vector<Element>& etas, unsigned s, unsigned t,
                                  const Budget& budget) {
    if (t < 1) throw std::invalid_argument("sum-product order t must be >= 1");
    const auto sub = T.subfield_elements(s);  // validates s | m
    std::vector<Element> products;
    for (std::size_t size = 1; size <= std::min<std::size_t>(t, etas.size()); ++size)
        for (const auto& S : combinations(etas.size(), size)) {
            Element p = 1;
            for (auto i : S) p = T.mul(p, etas[i]);
            products.push_back(p);
        }
    const std::uint64_t total = detail::sat_pow(sub.size(), static_cast<unsigned>(products.size()));
    detail::check_budget("sum-product coefficient enumeration", total, budget.ambient);
    std::vector<bool> in_sub(T.order(), false);
    for (Element x : sub) in_sub[x] = true;
    const auto parts = parallel_ranges(total, budget.workers, [&](std::uint64_t b, std::uint64_t e) {
        for (std::uint64_t idx = b; idx < e; ++idx) {
            std::uint64_t v = idx;
            Element acc = 0;
            for (Element p : products) {
                acc = T.add(acc, T.mul(sub[v % sub.size()], p));
                v /= sub.size();
            }
            if (acc != 0 && in_sub[acc]) return 0;
        }
        return 1;
    });
    return std::all_of(parts.begin(), parts.end(), [](int ok) { return ok == 1; });
}

/// Same property via linear algebra: the F_{q^s}-span of the products must avoid 1.
inline bool sum_product_free_span(const FieldTower& T, const std::vector<Element>& etas, unsigned s, unsigned t) {
    const auto sub = T.subfield_elements(s);
    std::vector<bool> in_span(T.order(), false);
    std::vector<Element> span{0};
    in_span[0] = true;
    for (std::size_t size = 1; size <= std::min<std::size_t>(t, etas.size()); ++size)
        for (const auto& S : combinations(etas.size(), size)) {
            Element p = 1;
            for (auto i : S) p = T.mul(p, etas[i]);
            if (in_span[p]) continue;
            const std::size_t sz = span.size();
            for (Element a : sub) {
                if (a == 0) continue;
                const Element ap = T.mul(a, p);
                for (std::size_t i = 0; i < sz; ++i) {
                    const Element x = T.add(span[i], ap);
                    if (!in_span[x]) {
                        in_span[x] = true;
                        span.push_back(x);
                    }
                }
            }
        }
    return !in_span[1];
}

enum class ConstructionKind { Chain, ScalarMultiple, SumProductFree };

inline const char* to_string(ConstructionKind k) noexcept {
    switch (k) {
        case ConstructionKind::Chain: return "chain";
        case ConstructionKind::ScalarMultiple: return "scalar";
        default: return "sum-product-free";
    }
}

struct Construction {
    CodeSpec spec;
    ConstructionKind kind = ConstructionKind::Chain;
    std::vector<unsigned> degrees;      // s_1 < ... < s_l (< m)
    std::optional<bool> verified_mrd;   // empty when the subspace budget is exceeded
    std::uint64_t subspaces = 0;
};

/// Degrees s_1 < ... < s_l with s_i | s_{i+1} and s_l | m, all strictly between 1 and m.
struct SubfieldChain {
    std::vector<unsigned> degrees;
};

namespace detail {

inline void check_chain(const FieldTower& T, const std::vector<unsigned>& s, std::size_t n) {
    if (s.empty()) throw std::invalid_argument("subfield chain is empty");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] <= 1 && i == 0) throw std::invalid_argument("chain level 1: F_q must be a proper subfield (s_1 > 1)");
        const unsigned next = i + 1 < s.size() ? s[i + 1] : T.m();
        if (next <= s[i] || next % s[i] != 0)
            throw std::invalid_argument("chain level " + std::to_string(i + 1) + ": need s_" + std::to_string(i + 1) +
                                        " to properly divide the next degree");
    }
    if (n > s[0]) throw std::invalid_argument("need n <= s_1");
}

inline void check_alpha_in(const FieldTower& T, const std::vector<Element>& alpha, unsigned s) {
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (!T.subfield_membership(alpha[i], s))
            throw std::invalid_argument("alpha_" + std::to_string(i + 1) + " is not in F_{q^" + std::to_string(s) + "}");
}

inline Construction finish(const FieldTower& T, Construction c, const Budget& budget) {
    validate(T, c.spec);
    try {
        const auto v = mrd_membership_multi(T, c.spec, budget);
        c.verified_mrd = v.holds;
        c.subspaces = v.enumerated;
    } catch (const BudgetExceeded&) {
        c.verified_mrd.reset();
    }
    return c;
}

inline CodeSpec make_spec(const std::vector<Element>& alpha, std::size_t k, std::size_t h,
                          const std::vector<std::size_t>& ts, const std::vector<Element>& etas) {
    if (ts.size() != etas.size()) throw std::invalid_argument("need one eta per twist exponent");
    CodeSpec s{alpha, k, h, {}};
    for (std::size_t j = 0; j < ts.size(); ++j) s.twists.push_back({ts[j], etas[j]});
    return s;
}

}  // namespace detail

/// alpha in F_{q^{s_1}}, eta_i in F_{q^{s_{i+1}}} \ F_{q^{s_i}} with s_{l+1} = m.
inline Construction construct_chain_mrd(const FieldTower& T, const SubfieldChain& chain, const std::vector<Element>& alpha,
                                        std::size_t k, std::size_t h, const std::vector<std::size_t>& ts,
                                        const std::vector<Element>& etas, const Budget& budget) {
    const auto& s = chain.degrees;
    if (s.size() != ts.size()) throw std::invalid_argument("a chain of length l needs l twists");
    detail::check_chain(T, s, alpha.size());
    detail::check_alpha_in(T, alpha, s[0]);
    for (std::size_t i = 0; i < etas.size(); ++i) {
        const unsigned upper = i + 1 < s.size() ? s[i + 1] : T.m();
        if (!T.subfield_membership(etas[i], upper) || T.subfield_membership(etas[i], s[i]))
            throw std::invalid_argument("chain level " + std::to_string(i + 1) + ": eta_" + std::to_string(i + 1) +
                                        " must lie in F_{q^" + std::to_string(upper) + "} but not in F_{q^" +
                                        std::to_string(s[i]) + "}");
    }
    Construction c{detail::make_spec(alpha, k, h, ts, etas), ConstructionKind::Chain, s, std::nullopt, 0};
    return detail::finish(T, std::move(c), budget);
}

/// alpha in F_{q^s}, eta_1 outside F_{q^s}, eta_i = b_i eta_1 with b_i in F_{q^s}^*.
inline Construction construct_scalar_mrd(const FieldTower& T, unsigned s, const std::vector<Element>& alpha,
                                         std::size_t k, std::size_t h, const std::vector<std::size_t>& ts, Element eta1,
                                         const std::vector<Element>& bs, const Budget& budget) {
    if (bs.size() + 1 != ts.size()) throw std::invalid_argument("need one multiplier b_i per twist after the first");
    detail::check_chain(T, {s}, alpha.size());
    detail::check_alpha_in(T, alpha, s);
    if (eta1 == 0 || T.subfield_membership(eta1, s))
        throw std::invalid_argument("eta_1 must lie outside F_{q^" + std::to_string(s) + "}");
    std::vector<Element> etas{eta1};
    for (std::size_t i = 0; i < bs.size(); ++i) {
        if (bs[i] == 0 || !T.subfield_membership(bs[i], s))
            throw std::invalid_argument("b_" + std::to_string(i + 2) + " must be a non-zero element of F_{q^" +
                                        std::to_string(s) + "}");
        etas.push_back(T.mul(bs[i], eta1));
    }
    Construction c{detail::make_spec(alpha, k, h, ts, etas), ConstructionKind::ScalarMultiple, {s}, std::nullopt, 0};
    return detail::finish(T, std::move(c), budget);
}

/// alpha in F_{q^s} and eta 1-F_{q^s}-sum-product free.
inline Construction construct_sum_product_free_mrd(const FieldTower& T, unsigned s, const std::vector<Element>& alpha,
                                                   std::size_t k, std::size_t h, const std::vector<std::size_t>& ts,
                                                   const std::vector<Element>& etas, const Budget& budget) {
    detail::check_chain(T, {s}, alpha.size());
    detail::check_alpha_in(T, alpha, s);
    if (!sum_product_free_test(T, etas, s, 1, budget))
        throw std::invalid_argument("eta is not 1-F_{q^" + std::to_string(s) + "}-sum-product free");
    Construction c{detail::make_spec(alpha, k, h, ts, etas), ConstructionKind::SumProductFree, {s}, std::nullopt, 0};
    return detail::finish(T, std::move(c), budget);
}

struct NormCondition {
    bool holds = false;
    Element norm_eta = 0;
    Element sign = 1;  // (-1)^{mk}
    // a violating pair (N(f_0), N(f_h)) when the condition fails for h > 0
    std::optional<std::pair<Element, Element>> witness;
};

/**
 * Sufficient MRD condition for one twist at t = 0. For h = 0 it reads
 * N(eta) != (-1)^{mk}; otherwise N(f_0) != (-1)^{mk} N(eta) N(f_h) must hold
 * for all non-zero f_0, f_h, scanned over the image of the norm.
 */
inline NormCondition norm_mrd_condition(const FieldTower& T, const CodeSpec& s) {
    validate(T, s);
    if (s.twists.size() != 1) throw std::invalid_argument("norm condition needs exactly one twist");
    if (s.twists[0].t != 0) throw std::invalid_argument("norm condition is stated for t = 0 only");
    NormCondition nc;
    nc.norm_eta = T.norm(s.twists[0].eta);
    nc.sign = ((T.m() * s.k) % 2 == 0) ? 1 : T.neg(1);
    if (s.h == 0) {
        nc.holds = nc.norm_eta != nc.sign;
        return nc;
    }
    std::vector<bool> image(T.q(), false);
    for (Element x = 1; x < T.order(); ++x) image[T.norm(x)] = true;
    const Element factor = T.mul(nc.sign, nc.norm_eta);
    nc.holds = true;
    for (Element a = 1; a < T.q() && nc.holds; ++a)
        for (Element b = 1; b < T.q() && nc.holds; ++b)
            if (image[a] && image[b] && a == T.mul(factor, b)) {
                nc.holds = false;
                nc.witness = std::make_pair(a, b);
            }
    return nc;
}

struct HammingCertificate {
    HammingClass label = HammingClass::None;
    std::vector<std::vector<std::size_t>> vanishing;          // k-subsets with a zero minor
    std::optional<std::vector<std::size_t>> uncovered;        // (k+1)-subset with every k-subset vanishing
    bool nmds_by_theorem = false;                             // h in {0, k-1}
    std::optional<bool> cond_i_checked;                       // column check used otherwise
};

/**
 * Hamming class from the Omega conditions: a k-subset I has a zero minor iff
 * 1 + sum_j eta_j g_h^(t_j)(I) = 0. MDS when no subset vanishes; AMDS when
 * every (k+1)-subset contains a non-vanishing k-subset; NMDS additionally
 * when h is 0 or k-1, or when every k-1 columns are independent.
 */
inline HammingCertificate hamming_class_via_omega(const FieldTower& T, const CodeSpec& s) {
    validate(T, s);
    HammingCertificate hc;
    const auto subsets = combinations(s.n(), s.k);
    std::set<std::vector<std::size_t>> zero;
    for (const auto& I : subsets) {
        Element acc = 1;
        for (const auto& tw : s.twists) acc = T.add(acc, T.mul(tw.eta, g_of_subset(T, s.alpha, I, s.h, tw.t)));
        if (acc == 0) {
            zero.insert(I);
            hc.vanishing.push_back(I);
        }
    }
    if (zero.empty()) {
        hc.label = HammingClass::MDS;
        return hc;
    }
    for (const auto& J : combinations(s.n(), s.k + 1)) {
        bool covered = false;
        for (std::size_t drop = 0; drop < J.size() && !covered; ++drop) {
            std::vector<std::size_t> I;
            for (std::size_t i = 0; i < J.size(); ++i)
                if (i != drop) I.push_back(J[i]);
            covered = !zero.count(I);
        }
        if (!covered) {
            hc.uncovered = J;
            break;
        }
    }
    if (hc.uncovered) return hc;
    if (s.h == 0 || s.h + 1 == s.k) {
        hc.nmds_by_theorem = true;
        hc.label = HammingClass::NMDS;
        return hc;
    }
    const MatrixFqm G = generator_matrix(T, s);
    bool cond_i = true;
    for (const auto& S : combinations(s.n(), s.k - 1))
        if (rank_fqm(T, G.select_columns(S)) != s.k - 1) cond_i = false;
    hc.cond_i_checked = cond_i;
    hc.label = cond_i ? HammingClass::NMDS : HammingClass::AMDS;
    return hc;
}

}  // namespace twistgab

#endif  // TWISTGAB_MRDCHECK_HPP
