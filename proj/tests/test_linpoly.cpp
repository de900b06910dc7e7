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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "test_support.hpp"
#include "twistgab/linpoly.hpp"

using namespace twistgab;
using namespace tgtest;

namespace {

LinearizedPoly random_poly(const FieldTower& T, std::mt19937_64& rng, std::size_t max_deg) {
    std::vector<Element> c(1 + rng() % (max_deg + 1));
    for (auto& x : c) x = T.random(rng);
    c.back() = T.random_nonzero(rng);
    return LinearizedPoly(c);
}

// roots of f found by evaluating at every field element
std::set<Element> roots(const FieldTower& T, const LinearizedPoly& f) {
    std::set<Element> r;
    for (Element x = 0; x < T.order(); ++x)
        if (lp_eval(T, f, x) == 0) r.insert(x);
    return r;
}

}  // namespace

TEST(LpEval, Examples) {
    const FieldTower& T = f16();
    const Element w = 2;
    for (Element a = 0; a < 16; ++a) EXPECT_EQ(lp_eval(T, LinearizedPoly::identity(), a), a);
    EXPECT_EQ(lp_eval(T, LinearizedPoly({5, 7, 9}), 0), 0u);
    EXPECT_EQ(lp_eval(T, LinearizedPoly({w, 1}), w), 0u);
}

TEST(LpEval, IsFqLinear) {
    std::mt19937_64 rng(3);
    for (const FieldTower* T : {&f9(), &f4_16(), &f16()}) {
        for (int trial = 0; trial < 50; ++trial) {
            const auto f = random_poly(*T, rng, 3);
            for (Element x = 0; x < T->order(); ++x) {
                const Element y = T->random(rng);
                const Element lam = static_cast<Element>(rng() % T->q());
                ASSERT_EQ(lp_eval(*T, f, T->add(T->mul(lam, x), y)),
                          T->add(T->mul(lam, lp_eval(*T, f, x)), lp_eval(*T, f, y)));
            }
        }
    }
}

TEST(LpSkewMul, IdentityAndMonomials) {
    const FieldTower& T = f16();
    std::mt19937_64 rng(5);
    const auto f = random_poly(T, rng, 3);
    EXPECT_EQ(lp_skew_mul(T, f, LinearizedPoly::identity()), f);
    EXPECT_EQ(lp_skew_mul(T, LinearizedPoly::identity(), f), f);
    for (Element a = 1; a < 16; ++a)
        for (Element b = 1; b < 16; ++b)
            EXPECT_EQ(lp_skew_mul(T, LinearizedPoly::monomial(a, 1), LinearizedPoly::monomial(b, 1)),
                      LinearizedPoly::monomial(T.mul(a, T.pow(b, 2)), 2));
}

TEST(LpSkewMul, EvaluationHomomorphism) {
    std::mt19937_64 rng(9);
    for (const FieldTower* T : {&f16(), &f9(), &f4_16()}) {
        for (int trial = 0; trial < 100; ++trial) {
            const auto f = random_poly(*T, rng, 2);
            const auto g = random_poly(*T, rng, 2);
            const auto fg = lp_skew_mul(*T, f, g);
            EXPECT_EQ(fg.degree(), f.degree() + g.degree());
            for (Element x = 0; x < T->order(); ++x)
                ASSERT_EQ(lp_eval(*T, fg, x), lp_eval(*T, f, lp_eval(*T, g, x)));
        }
    }
}

TEST(LpSkewMul, AssociativeAndDistributive) {
    std::mt19937_64 rng(13);
    for (const FieldTower* T : {&f16(), &f81(), &f256()}) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto f = random_poly(*T, rng, 3);
            const auto g = random_poly(*T, rng, 3);
            const auto h = random_poly(*T, rng, 3);
            ASSERT_EQ(lp_skew_mul(*T, lp_skew_mul(*T, f, g), h), lp_skew_mul(*T, f, lp_skew_mul(*T, g, h)));
            ASSERT_EQ(lp_skew_mul(*T, f, lp_add(*T, g, h)), lp_add(*T, lp_skew_mul(*T, f, g), lp_skew_mul(*T, f, h)));
            ASSERT_EQ(lp_skew_mul(*T, lp_add(*T, f, g), h), lp_add(*T, lp_skew_mul(*T, f, h), lp_skew_mul(*T, g, h)));
        }
    }
}

TEST(LpKernel, Examples) {
    for (const FieldTower* T : {&f16(), &f9(), &f4_16(), &f81()}) {
        EXPECT_TRUE(lp_kernel(*T, LinearizedPoly::identity()).empty());
        // x^q - x vanishes exactly on F_q
        const auto K = lp_kernel(*T, LinearizedPoly({T->neg(1), 1}));
        ASSERT_EQ(K.size(), 1u);
        EXPECT_TRUE(T->in_base(K[0]));
        EXPECT_NE(K[0], 0u);
    }
    EXPECT_THROW(lp_kernel(f16(), LinearizedPoly()), std::invalid_argument);
}

TEST(LpKernel, MatchesRootsAndDegreeBound) {
    std::mt19937_64 rng(17);
    for (const FieldTower* T : {&f16(), &f9(), &f4_16(), &f81()}) {
        for (int trial = 0; trial < 60; ++trial) {
            const auto f = random_poly(*T, rng, 3);
            const auto K = lp_kernel(*T, f);
            EXPECT_LE(static_cast<long>(K.size()), f.degree());
            EXPECT_EQ(T->fq_rank(K), K.size());
            const auto span = fq_span_elements(*T, K);
            EXPECT_EQ(std::set<Element>(span.begin(), span.end()), roots(*T, f));
        }
    }
}

TEST(Annihilator, Examples) {
    const FieldTower& T = f16();
    EXPECT_EQ(annihilator(T, {}), LinearizedPoly::identity());
    EXPECT_EQ(annihilator(T, {1}), LinearizedPoly({1, 1}));
    // (x)(x-1)(x-w)(x-w-1) multiplied out as an ordinary polynomial
    std::vector<Element> poly{1};
    for (Element u : {0u, 1u, 2u, 3u}) {
        std::vector<Element> next(poly.size() + 1, 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] ^= poly[i];
            next[i] ^= T.mul(u, poly[i]);
        }
        poly = next;
    }
    ASSERT_EQ(poly.size(), 5u);
    EXPECT_EQ(poly[0], 0u);
    EXPECT_EQ(poly[3], 0u);
    EXPECT_EQ(annihilator(T, {1, 2}), LinearizedPoly({poly[1], poly[2], poly[4]}));
}

TEST(Annihilator, KernelIsSpan) {
    std::mt19937_64 rng(19);
    for (const FieldTower* T : {&f16(), &f16_alt(), &f9(), &f4_16(), &f81(), &f256()}) {
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<Element> gens(rng() % 4);
            for (auto& g : gens) g = T->random(rng);
            const auto P = annihilator(*T, gens);
            EXPECT_EQ(static_cast<std::size_t>(P.degree()), T->fq_rank(gens));
            EXPECT_EQ(P.lead(), 1u);
            const auto span = fq_span_elements(*T, fq_span_basis(*T, gens));
            EXPECT_EQ(std::set<Element>(span.begin(), span.end()), roots(*T, P));
            EXPECT_EQ(P, annihilator_composition(*T, gens));
        }
    }
}

TEST(Annihilator, LargeSubspaceUsesComposition) {
    const FieldTower T(f2_m_params(16));
    std::vector<Element> gens;
    for (unsigned i = 0; i < 13; ++i) gens.push_back(T.pow(T.primitive(), 3 * i + 1));
    const auto P = annihilator(T, gens);
    ASSERT_EQ(P.degree(), static_cast<long>(T.fq_rank(gens)));
    for (Element g : gens) EXPECT_EQ(lp_eval(T, P, g), 0u);
    EXPECT_EQ(lp_kernel(T, P).size(), static_cast<std::size_t>(P.degree()));
}

TEST(RightDivide, Examples) {
    std::mt19937_64 rng(23);
    for (const FieldTower* T : {&f16(), &f9(), &f81()}) {
        const auto d = random_poly(*T, rng, 3);
        auto [q1, r1] = lp_right_divide(*T, d, d);
        EXPECT_EQ(q1, LinearizedPoly::identity());
        EXPECT_TRUE(r1.is_zero());
        const auto big = LinearizedPoly::monomial(1, 4);
        auto [q2, r2] = lp_right_divide(*T, d, big);
        EXPECT_TRUE(q2.is_zero());
        EXPECT_EQ(r2, d);
        EXPECT_THROW(lp_right_divide(*T, d, LinearizedPoly()), std::invalid_argument);
    }
}

TEST(RightDivide, RecoversQuotientAndIdentity) {
    std::mt19937_64 rng(29);
    for (const FieldTower* T : {&f16(), &f9(), &f4_16(), &f256()}) {
        for (int trial = 0; trial < 100; ++trial) {
            const auto h = random_poly(*T, rng, 3);
            const auto d = random_poly(*T, rng, 3);
            auto [q, r] = lp_right_divide(*T, lp_skew_mul(*T, h, d), d);
            ASSERT_EQ(q, h);
            ASSERT_TRUE(r.is_zero());
            const auto f = random_poly(*T, rng, 6);
            auto [q2, r2] = lp_right_divide(*T, f, d);
            ASSERT_LT(r2.degree(), d.degree());
            ASSERT_EQ(lp_add(*T, lp_skew_mul(*T, q2, d), r2), f);
        }
    }
}

TEST(RightDivide, VanishingOnKernelDividesExactly) {
    std::mt19937_64 rng(31);
    const FieldTower& T = f256();
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Element> gens{T.random_nonzero(rng), T.random_nonzero(rng)};
        const auto P = annihilator(T, gens);
        // f = h o P vanishes on U; the division must be exact
        const auto f = lp_skew_mul(T, random_poly(T, rng, 2), P);
        for (Element u : fq_span_elements(T, fq_span_basis(T, gens))) ASSERT_EQ(lp_eval(T, f, u), 0u);
        EXPECT_TRUE(lp_right_divide(T, f, P).second.is_zero());
    }
}
