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

#ifndef TWISTGAB_FIELD_TOWER_HPP
#define TWISTGAB_FIELD_TOWER_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "base_field.hpp"
#include "errors.hpp"
#include "matrix.hpp"

namespace twistgab {

/**
 * An element of F_{q^m}, packed as code = sum_i c_i q^i where c_i in [0, q) is
 * the F_q code of the coefficient of y^i. F_q is therefore the set of codes
 * below q, and 0 and 1 are the usual identities.
 */
using Element = std::uint32_t;

struct TowerParams {
    std::uint32_t p = 2;
    unsigned e = 1;
    unsigned m = 1;
    std::vector<std::uint32_t> base_modulus;  // over F_p, little-endian, empty = default
    std::vector<std::uint32_t> top_modulus;   // over F_q (codes), little-endian, empty = default
};

/// Images of the basis y^0..y^{m-1} under sigma^i, for each 0 <= i < m.
struct FrobeniusTable {
    std::vector<std::vector<Element>> powers;

    const std::vector<Element>& sigma() const { return powers.at(1 % powers.size()); }
};

class FieldTower {
   public:
    static constexpr std::uint32_t max_order = std::uint32_t{1} << 20;

    explicit FieldTower(TowerParams params) : params_(std::move(params)), base_(make_base(params_)) {
        const std::uint32_t q = base_.q();
        const unsigned m = params_.m;
        if (m < 1) throw std::invalid_argument("extension degree m must be >= 1");
        std::uint64_t Q = 1;
        for (unsigned i = 0; i < m; ++i) {
            Q *= q;
            if (Q > max_order) throw std::invalid_argument("q^m exceeds the supported field size 2^20");
        }
        Q_ = static_cast<std::uint32_t>(Q);
        if (params_.top_modulus.empty()) params_.top_modulus = default_top_modulus(base_, m);
        set_top_modulus();
        build_log_tables();
        build_frobenius();
    }

    // --- parameters ---
    const TowerParams& params() const noexcept { return params_; }
    const BaseField& base() const noexcept { return base_; }
    std::uint32_t p() const noexcept { return base_.p(); }
    unsigned e() const noexcept { return base_.e(); }
    std::uint32_t q() const noexcept { return base_.q(); }
    unsigned m() const noexcept { return params_.m; }
    std::uint32_t order() const noexcept { return Q_; }
    Element primitive() const noexcept { return exp_[1]; }
    const FrobeniusTable& frobenius_table() const noexcept { return frob_; }

    // --- arithmetic ---
    Element add(Element a, Element b) const noexcept {
        if (p() == 2) return a ^ b;
        if (a == 0) return b;
        if (b == 0) return a;
        // a + b = a (1 + b/a)
        const std::uint32_t d = log_[b] + (Q_ - 1) - log_[a];
        const Element s = one_plus_[exp_[d]];
        return s == 0 ? 0 : exp_[log_[a] + log_[s]];
    }
    Element neg(Element a) const noexcept { return p() == 2 ? a : neg_[a]; }
    Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
    Element mul(Element a, Element b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Element inv(Element a) const {
        if (a == 0) throw std::domain_error("inverse of zero in F_{q^m}");
        return exp_[(Q_ - 1) - log_[a]];
    }
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    Element pow(Element a, std::uint64_t n) const noexcept {
        if (n == 0) return 1;
        if (a == 0) return 0;
        return exp_[static_cast<std::uint32_t>((std::uint64_t{log_[a]} * (n % (Q_ - 1))) % (Q_ - 1))];
    }
    /// Discrete log base primitive(); a must be non-zero.
    std::uint32_t log(Element a) const {
        if (a == 0) throw std::domain_error("log of zero");
        return log_[a];
    }

    /// Product by schoolbook multiplication mod top_modulus; kept as an oracle for the tables.
    Element mul_reference(Element a, Element b) const {
        const auto ca = coords(a), cb = coords(b);
        const unsigned m = params_.m;
        std::vector<std::uint32_t> prod(2 * m - 1, 0);
        for (unsigned i = 0; i < m; ++i)
            for (unsigned j = 0; j < m; ++j) prod[i + j] = base_.add(prod[i + j], base_.mul(ca[i], cb[j]));
        const auto& f = params_.top_modulus;
        for (std::size_t d = prod.size(); d-- > m;) {
            const std::uint32_t c = prod[d];
            if (c == 0) continue;
            for (unsigned i = 0; i <= m; ++i) prod[d - m + i] = base_.sub(prod[d - m + i], base_.mul(c, f[i]));
        }
        prod.resize(m);
        return from_coords(prod);
    }

    // --- representation ---
    std::vector<std::uint32_t> coords(Element a) const {
        std::vector<std::uint32_t> c(params_.m);
        for (unsigned i = 0; i < params_.m; ++i) {
            c[i] = a % q();
            a /= q();
        }
        return c;
    }
    Element from_coords(const std::vector<std::uint32_t>& c) const {
        if (c.size() != params_.m) throw std::invalid_argument("element needs exactly m coordinates");
        Element a = 0;
        for (unsigned i = params_.m; i-- > 0;) {
            if (c[i] >= q()) throw std::invalid_argument("F_q coordinate out of range");
            a = a * q() + c[i];
        }
        return a;
    }
    bool contains(Element a) const noexcept { return a < Q_; }
    bool in_base(Element a) const noexcept { return a < q(); }

    /// The class of y (code q when m > 1).
    Element generator() const noexcept { return params_.m > 1 ? q() : 0; }

    // --- Frobenius ---
    Element frobenius(Element x, long long i) const {
        const long long mm = params_.m;
        const auto r = static_cast<std::size_t>(((i % mm) + mm) % mm);
        if (r == 0 || x < q()) return x;
        const auto& img = frob_.powers[r];
        Element acc = 0;
        for (unsigned j = 0; j < params_.m && x != 0; ++j) {
            const std::uint32_t c = x % q();
            x /= q();
            if (c != 0) acc = add(acc, mul(c, img[j]));
        }
        return acc;
    }

    Element norm(Element x) const {
        Element r = 1;
        for (unsigned i = 0; i < params_.m; ++i) r = mul(r, frobenius(x, i));
        if (!in_base(r)) throw ConsistencyError("norm left the base field");
        return r;
    }

    bool subfield_membership(Element x, unsigned s) const {
        if (s == 0 || params_.m % s != 0)
            throw std::invalid_argument("F_{q^" + std::to_string(s) + "} is not a subfield of F_{q^" +
                                        std::to_string(params_.m) + "}: s must divide m");
        return frobenius(x, s) == x;
    }

    /// All elements of F_{q^s} in increasing code order.
    std::vector<Element> subfield_elements(unsigned s) const {
        subfield_membership(0, s);  // validates s
        std::vector<Element> out;
        // F_{q^s}^* is generated by primitive^((Q-1)/(q^s-1))
        std::uint64_t qs = 1;
        for (unsigned i = 0; i < s; ++i) qs *= q();
        const std::uint32_t step = static_cast<std::uint32_t>((Q_ - 1) / (qs - 1));
        out.push_back(0);
        for (std::uint64_t j = 0; j < qs - 1; ++j) out.push_back(exp_[static_cast<std::uint32_t>(j * step)]);
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Rank over F_q of the span of the components.
    std::size_t fq_rank(const std::vector<Element>& v) const {
        if (q() == 2) {
            // XOR basis indexed by leading bit
            std::vector<Element> basis(params_.m, 0);
            std::size_t r = 0;
            for (Element x : v) {
                for (unsigned b = params_.m; b-- > 0 && x != 0;) {
                    if (!((x >> b) & 1u)) continue;
                    if (basis[b] == 0) {
                        basis[b] = x;
                        ++r;
                        x = 0;
                    } else {
                        x ^= basis[b];
                    }
                }
            }
            return r;
        }
        return twistgab::rank(base_, coordinate_matrix(v));
    }

    /// Rows are the coordinates of the components.
    Matrix coordinate_matrix(const std::vector<Element>& v) const {
        Matrix M(v.size(), params_.m);
        for (std::size_t i = 0; i < v.size(); ++i) M.set_row(i, coords(v[i]));
        return M;
    }

    /// m x m matrix over F_q of an F_q-linear map, column j = coords(f(y^j)).
    template <class Map>
    Matrix linear_map_matrix(Map&& f) const {
        Matrix M(params_.m, params_.m);
        Element basis = 1;
        for (unsigned j = 0; j < params_.m; ++j) {
            const auto c = coords(f(basis));
            for (unsigned i = 0; i < params_.m; ++i) M(i, j) = c[i];
            basis = mul(basis, generator_or_one());
        }
        return M;
    }

    template <class Rng>
    Element random(Rng& rng) const {
        return std::uniform_int_distribution<Element>(0, Q_ - 1)(rng);
    }
    template <class Rng>
    Element random_nonzero(Rng& rng) const {
        return std::uniform_int_distribution<Element>(1, Q_ - 1)(rng);
    }

    // --- default moduli ---
    static std::vector<std::uint32_t> default_top_modulus(const BaseField& F, unsigned m) {
        if (m == 1) return {0, 1};
        detail::PolyArith<BaseField> arith{F};
        std::uint64_t count = 1;
        for (unsigned i = 0; i < m; ++i) count = detail::sat_mul(count, F.q());
        for (std::uint64_t c = 0; c < count; ++c) {
            std::vector<std::uint32_t> poly(m + 1);
            std::uint64_t v = c;
            for (unsigned i = 0; i < m; ++i) {
                poly[i] = static_cast<std::uint32_t>(v % F.q());
                v /= F.q();
            }
            poly[m] = 1;
            if (poly[0] != 0 && !arith.find_factor(poly, F.q())) return poly;
        }
        throw std::logic_error("no irreducible polynomial found");
    }

   private:
    static BaseField make_base(TowerParams& params) {
        if (!detail::is_prime(params.p))
            throw std::invalid_argument("p = " + std::to_string(params.p) + " is not prime");
        if (params.e < 1) throw std::invalid_argument("extension degree e must be >= 1");
        if (params.base_modulus.empty()) params.base_modulus = BaseField::default_modulus(params.p, params.e);
        BaseField F(params.p, params.e, params.base_modulus);
        params.base_modulus = F.modulus();
        return F;
    }

    Element generator_or_one() const noexcept { return params_.m > 1 ? q() : 1; }

    void set_top_modulus() {
        auto& f = params_.top_modulus;
        detail::PolyArith<BaseField>::trim(f);
        if (f.size() != params_.m + 1)
            throw std::invalid_argument("top_modulus must have degree m = " + std::to_string(params_.m));
        for (auto c : f)
            if (c >= q()) throw std::invalid_argument("top_modulus coefficient out of range [0, q)");
        const std::uint32_t li = base_.inv(f.back());
        for (auto& c : f) c = base_.mul(c, li);
        detail::PolyArith<BaseField> arith{base_};
        if (auto factor = arith.find_factor(f, q()))
            throw std::invalid_argument("top_modulus " + detail::poly_to_string(f, 'y') + " is reducible over F_" +
                                        std::to_string(q()) + ": divisible by " +
                                        detail::poly_to_string(*factor, 'y'));
    }

    // multiply a by y and reduce; O(m)
    Element times_y(Element a) const {
        auto c = coords(a);
        const unsigned m = params_.m;
        const std::uint32_t top = c[m - 1];
        for (unsigned i = m - 1; i > 0; --i) c[i] = c[i - 1];
        c[0] = 0;
        if (top != 0)
            for (unsigned i = 0; i < m; ++i)
                c[i] = base_.sub(c[i], base_.mul(top, params_.top_modulus[i]));
        return from_coords(c);
    }

    Element ref_pow(Element a, std::uint64_t n) const {
        Element r = 1;
        while (n) {
            if (n & 1) r = mul_reference(r, a);
            a = mul_reference(a, a);
            n >>= 1;
        }
        return r;
    }

    void build_log_tables() {
        const std::uint32_t order = Q_ - 1;
        exp_.assign(2 * std::size_t{order} + 1, 0);
        log_.assign(Q_, 0);
        if (Q_ == 2) {
            exp_[0] = exp_[1] = exp_[2] = 1;
            build_additive_tables();
            return;
        }
        const auto factors = detail::prime_factors(order);
        auto is_primitive = [&](Element g) {
            for (auto r : factors)
                if (ref_pow(g, order / r) == 1) return false;
            return true;
        };
        Element g = 0;
        // y first, then increasing codes
        if (params_.m > 1 && is_primitive(q())) g = q();
        for (Element c = 2; g == 0 && c < Q_; ++c)
            if (is_primitive(c)) g = c;
        if (g == 0) throw std::logic_error("no primitive element found");
        Element x = 1;
        for (std::uint32_t i = 0; i < order; ++i) {
            exp_[i] = x;
            log_[x] = i;
            x = (g == q() && params_.m > 1) ? times_y(x) : mul_reference(x, g);
        }
        if (x != 1) throw ConsistencyError("primitive element has wrong order");
        for (std::uint32_t i = order; i < exp_.size(); ++i) exp_[i] = exp_[i - order];
        build_additive_tables();
    }

    void build_additive_tables() {
        if (p() == 2) return;
        one_plus_.assign(Q_, 0);
        neg_.assign(Q_, 0);
        for (Element a = 0; a < Q_; ++a) {
            auto c = coords(a);
            auto n = c;
            for (auto& v : n) v = base_.neg(v);
            neg_[a] = from_coords(n);
            c[0] = base_.add(c[0], 1);
            one_plus_[a] = from_coords(c);
        }
    }

    void build_frobenius() {
        const unsigned m = params_.m;
        frob_.powers.assign(m, std::vector<Element>(m, 0));
        Element basis = 1;
        for (unsigned j = 0; j < m; ++j) {
            Element img = basis;
            for (unsigned i = 0; i < m; ++i) {
                frob_.powers[i][j] = img;
                img = pow(img, q());
            }
            if (img != basis) throw ConsistencyError("sigma^m is not the identity");
            basis = mul(basis, generator_or_one());
        }
    }

    TowerParams params_;
    BaseField base_;
    std::uint32_t Q_ = 0;
    std::vector<Element> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<Element> one_plus_;
    std::vector<Element> neg_;
    FrobeniusTable frob_;
};

}  // namespace twistgab

#endif  // TWISTGAB_FIELD_TOWER_HPP
