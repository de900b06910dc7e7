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

#ifndef TWISTGAB_BASE_FIELD_HPP
#define TWISTGAB_BASE_FIELD_HPP

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"

namespace twistgab {

namespace detail {

inline bool is_prime(std::uint32_t p) noexcept {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Dense univariate polynomials over a small field whose elements are integer
// codes. Coefficients are little-endian (constant first). `Ops` supplies
// add/sub/mul/inv on codes.
template <class Ops>
struct PolyArith {
    const Ops& f;

    static void trim(std::vector<std::uint32_t>& a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }

    std::vector<std::uint32_t> mod(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b) const {
        trim(a);
        const std::size_t db = b.size() - 1;
        const std::uint32_t lead_inv = f.inv(b.back());
        while (a.size() >= b.size()) {
            const std::uint32_t factor = f.mul(a.back(), lead_inv);
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i <= db; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(factor, b[i]));
            trim(a);
        }
        return a;
    }

    // Smallest-degree monic factor of `poly` with degree <= deg/2, if any.
    std::optional<std::vector<std::uint32_t>> find_factor(const std::vector<std::uint32_t>& poly,
                                                          std::uint32_t field_size) const {
        const std::size_t deg = poly.size() - 1;
        for (std::size_t d = 1; 2 * d <= deg; ++d) {
            std::uint64_t count = 1;
            for (std::size_t i = 0; i < d; ++i) count *= field_size;
            for (std::uint64_t c = 0; c < count; ++c) {
                std::vector<std::uint32_t> cand(d + 1);
                std::uint64_t v = c;
                for (std::size_t i = 0; i < d; ++i) {
                    cand[i] = static_cast<std::uint32_t>(v % field_size);
                    v /= field_size;
                }
                cand[d] = 1;
                if (mod(poly, cand).empty()) return cand;
            }
        }
        return std::nullopt;
    }
};

struct PrimeOps {
    std::uint32_t p;
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p - b) % p; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("inverse of zero in F_p");
        std::uint64_t r = 1, b = a, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(r);
    }
};

inline std::string poly_to_string(const std::vector<std::uint32_t>& c, char var) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c[i] != 1) os << c[i];
        if (i >= 1) os << var;
        if (i >= 2) os << '^' << i;
    }
    if (first) os << '0';
    return os.str();
}

}  // namespace detail

/**
 * The base field F_q = F_p[x]/(base_modulus) with q = p^e.
 *
 * Elements are integer codes in [0, q): the code of a_0 + a_1 x + ... is
 * a_0 + a_1 p + a_2 p^2 + ..., so F_p sits inside as the codes below p.
 * Addition and multiplication are full q*q lookup tables.
 */
class BaseField {
   public:
    static constexpr std::uint32_t max_size = 1024;

    BaseField(std::uint32_t p, unsigned e, std::vector<std::uint32_t> modulus)
        : p_(p), e_(e), modulus_(std::move(modulus)) {
        if (!detail::is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
        if (e < 1) throw std::invalid_argument("extension degree e must be >= 1");
        q_ = 1;
        for (unsigned i = 0; i < e; ++i) {
            q_ *= p;
            if (q_ > max_size) throw std::invalid_argument("q = p^e exceeds the supported base field size");
        }
        detail::PolyArith<detail::PrimeOps>::trim(modulus_);
        if (modulus_.size() != e + 1)
            throw std::invalid_argument("base_modulus must have degree e = " + std::to_string(e));
        for (auto c : modulus_)
            if (c >= p) throw std::invalid_argument("base_modulus coefficient out of range [0, p)");
        detail::PrimeOps ops{p};
        // normalize to monic
        const std::uint32_t li = ops.inv(modulus_.back());
        for (auto& c : modulus_) c = ops.mul(c, li);
        detail::PolyArith<detail::PrimeOps> arith{ops};
        if (auto factor = arith.find_factor(modulus_, p))
            throw std::invalid_argument("base_modulus " + detail::poly_to_string(modulus_, 'x') +
                                        " is reducible over F_" + std::to_string(p) + ": divisible by " +
                                        detail::poly_to_string(*factor, 'x'));
        build_tables();
    }

    std::uint32_t p() const noexcept { return p_; }
    unsigned e() const noexcept { return e_; }
    std::uint32_t q() const noexcept { return q_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return add_[a * q_ + b]; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return add_[a * q_ + neg_[b]]; }
    std::uint32_t neg(std::uint32_t a) const noexcept { return neg_[a]; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return mul_[a * q_ + b]; }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("inverse of zero in F_q");
        return inv_[a];
    }

    /// F_p residues of a code, little-endian.
    std::vector<std::uint32_t> digits(std::uint32_t a) const {
        std::vector<std::uint32_t> d(e_);
        for (unsigned i = 0; i < e_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    }

    std::uint32_t from_digits(const std::vector<std::uint32_t>& d) const {
        if (d.size() != e_) throw std::invalid_argument("F_q element needs exactly e residues");
        std::uint32_t code = 0;
        for (unsigned i = e_; i-- > 0;) {
            if (d[i] >= p_) throw std::invalid_argument("F_p residue out of range [0, p)");
            code = code * p_ + d[i];
        }
        return code;
    }

    /// First monic irreducible polynomial of degree e over F_p, ordered by the
    /// integer value of its lower coefficients.
    static std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned e) {
        if (!detail::is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
        if (e == 1) return {0, 1};
        detail::PrimeOps ops{p};
        detail::PolyArith<detail::PrimeOps> arith{ops};
        std::uint64_t count = 1;
        for (unsigned i = 0; i < e; ++i) count *= p;
        for (std::uint64_t c = 0; c < count; ++c) {
            std::vector<std::uint32_t> poly(e + 1);
            std::uint64_t v = c;
            for (unsigned i = 0; i < e; ++i) {
                poly[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            poly[e] = 1;
            if (poly[0] != 0 && !arith.find_factor(poly, p)) return poly;
        }
        throw std::logic_error("no irreducible polynomial found");
    }

   private:
    void build_tables() {
        add_.assign(std::size_t{q_} * q_, 0);
        mul_.assign(std::size_t{q_} * q_, 0);
        neg_.assign(q_, 0);
        inv_.assign(q_, 0);
        detail::PrimeOps ops{p_};
        for (std::uint32_t a = 0; a < q_; ++a) {
            const auto da = digits(a);
            std::vector<std::uint32_t> dn(e_);
            for (unsigned i = 0; i < e_; ++i) dn[i] = ops.sub(0, da[i]);
            neg_[a] = from_digits(dn);
            for (std::uint32_t b = 0; b < q_; ++b) {
                const auto db = digits(b);
                std::vector<std::uint32_t> s(e_);
                for (unsigned i = 0; i < e_; ++i) s[i] = ops.add(da[i], db[i]);
                add_[a * q_ + b] = from_digits(s);
                // schoolbook product then reduction by the monic modulus
                std::vector<std::uint32_t> prod(2 * e_ - 1, 0);
                for (unsigned i = 0; i < e_; ++i)
                    for (unsigned j = 0; j < e_; ++j) prod[i + j] = ops.add(prod[i + j], ops.mul(da[i], db[j]));
                for (std::size_t d = prod.size(); d-- > e_;) {
                    const std::uint32_t c = prod[d];
                    if (c == 0) continue;
                    for (unsigned i = 0; i <= e_; ++i)
                        prod[d - e_ + i] = ops.sub(prod[d - e_ + i], ops.mul(c, modulus_[i]));
                }
                prod.resize(e_);
                mul_[a * q_ + b] = from_digits(prod);
            }
        }
        for (std::uint32_t a = 1; a < q_; ++a)
            for (std::uint32_t b = 1; b < q_; ++b)
                if (mul_[a * q_ + b] == 1) {
                    inv_[a] = b;
                    break;
                }
    }

    std::uint32_t p_;
    unsigned e_;
    std::uint32_t q_ = 1;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> add_, mul_, neg_, inv_;
};

}  // namespace twistgab

#endif  // TWISTGAB_BASE_FIELD_HPP
