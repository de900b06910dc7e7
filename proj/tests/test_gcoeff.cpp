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

#include "test_support.hpp"
#include "twistgab/gcoeff.hpp"

using namespace twistgab;
using namespace tgtest;

namespace {

AnnihilatorCoeffs random_coeffs(const FieldTower& T, std::mt19937_64& rng, std::size_t k) {
    AnnihilatorCoeffs c;
    c.c.push_back(1);
    for (std::size_t j = 1; j <= k; ++j) c.c.push_back(T.random(rng));
    return c;
}

std::vector<Element> independent_tuple(const FieldTower& T, std::mt19937_64& rng, std::size_t k) {
    std::vector<Element> a;
    do {
        a.clear();
        for (std::size_t i = 0; i < k; ++i) a.push_back(T.random_nonzero(rng));
    } while (T.fq_rank(a) != k);
    return a;
}

}  // namespace

TEST(AnnihilatorCoeffs, ReversedIndexingAndPadding) {
    const FieldTower& T = f16();
    const auto P = annihilator(T, {1, 2});
    const auto c = AnnihilatorCoeffs::from_poly(P);
    ASSERT_EQ(c.k(), 2u);
    EXPECT_EQ(c.at(0), 1u);
    EXPECT_EQ(c.at(1), P.coeff(1));
    EXPECT_EQ(c.at(2), P.coeff(0));
    EXPECT_EQ(c.at(3), 0u);
    EXPECT_EQ(c.at(10), 0u);
}

TEST(TriangularInverse, SmallCases) {
    const FieldTower& T = f9();
    std::mt19937_64 rng(1);
    const auto c = random_coeffs(T, rng, 3);
    EXPECT_EQ(triangular_inverse(T, c, 0), MatrixFqm::identity(1));
    const auto E = triangular_inverse(T, c, 1);
    EXPECT_EQ(E(0, 0), 1u);
    EXPECT_EQ(E(1, 1), 1u);
    EXPECT_EQ(E(0, 1), 0u);
    EXPECT_EQ(E(1, 0), T.neg(T.frobenius(c.at(1), 1)));
    AnnihilatorCoeffs bad{{2, 1}};
    EXPECT_THROW(triangular_inverse(T, bad, 1), std::invalid_argument);
    EXPECT_THROW(triangular_inverse(T, AnnihilatorCoeffs{}, 1), std::invalid_argument);
}

TEST(TriangularInverse, MatchesAdjugateInverse) {
    std::mt19937_64 rng(2);
    for (const FieldTower* T : {&f9(), &f16(), &f81()}) {
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t k = 1 + trial % 4;
            const std::size_t t = trial % 5;
            const auto c = random_coeffs(*T, rng, k);
            const auto E = triangular_inverse(*T, c, t);
            ASSERT_EQ(E, adjugate_inverse(*T, triangular_matrix(*T, c, t)));
            for (std::size_t i = 0; i <= t; ++i) ASSERT_EQ(E(i, i), 1u);
        }
    }
}

TEST(GCoefficient, ClosedFormsForSmallT) {
    std::mt19937_64 rng(3);
    for (const FieldTower* T : {&f9(), &f16(), &f81()}) {
        for (int trial = 0; trial < 50; ++trial) {
            const std::size_t k = 1 + trial % 4;
            const auto c = random_coeffs(*T, rng, k);
            for (std::size_t h = 0; h < k; ++h) {
                EXPECT_EQ(g_coefficient(*T, c, h, 0), T->neg(c.at(k - h)));
                const Element g1 = T->sub(T->mul(T->frobenius(c.at(1), 1), c.at(k - h)),
                                          T->frobenius(c.at(k - h + 1), 1));
                EXPECT_EQ(g_coefficient(*T, c, h, 1), g1);
            }
            EXPECT_THROW(g_coefficient(*T, c, k, 0), std::invalid_argument);
        }
    }
}

TEST(GOfSubset, Examples) {
    const FieldTower& T = f16();
    const std::vector<Element> alpha{1, 2, 4, 8};
    for (std::size_t h = 0; h < 2; ++h)
        for (std::size_t t = 0; t < 3; ++t)
            EXPECT_EQ(g_of_subset(T, alpha, {0, 1}, h, t), g_coefficient(T, annihilator_coeffs(T, {1, 2}), h, t));
    // k = 1: (x)(x - a) = x^q - a^{q-1} x, so c_1 = -a^{q-1} and g = a^{q-1}
    const FieldTower& F = f9();
    std::vector<Element> beta{1, 3, 4, 7};
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const auto c = annihilator_coeffs(F, {beta[i]});
        EXPECT_EQ(c.at(1), F.neg(F.pow(beta[i], 2)));
        EXPECT_EQ(g_of_subset(F, beta, {i}, 0, 0), F.pow(beta[i], 2));
    }
    try {
        g_of_subset(T, {1, 2, 3, 8}, {0, 1, 2}, 0, 0);
        FAIL() << "dependent subset accepted";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("{1,2,3}"), std::string::npos) << e.what();
    }
}

TEST(GOfSubset, ZeroTIsNegatedLowCoefficient) {
    const FieldTower& T = f81();
    std::mt19937_64 rng(5);
    const auto alpha = independent_tuple(T, rng, 4);
    for (const auto& I : k_subsets(4, 2))
        for (std::size_t h = 0; h < 2; ++h) {
            const auto c = annihilator_coeffs(T, {alpha[I[0]], alpha[I[1]]});
            EXPECT_EQ(T.neg(g_of_subset(T, alpha, I, h, 0)), c.at(2 - h));
        }
}

TEST(ModifiedMooreIdentity, Examples) {
    const FieldTower& T = f16();
    const std::vector<Element> alpha{1, 2, 4, 8};
    for (const auto& I : k_subsets(4, 2))
        for (std::size_t h = 0; h < 2; ++h)
            for (std::size_t t = 0; t < 2; ++t)
                EXPECT_TRUE(verify_modified_moore_identity(T, {alpha[I[0]], alpha[I[1]]}, h, t));
    // k = 1: a^{q^{1+t}} = g_0^(t) a
    for (Element a = 1; a < 16; ++a)
        for (std::size_t t = 0; t < 5; ++t) {
            const Element g = g_coefficient(T, annihilator_coeffs(T, {a}), 0, t);
            EXPECT_EQ(T.pow(a, ipow(2, static_cast<unsigned>(1 + t))), T.mul(g, a));
        }
    EXPECT_THROW(verify_modified_moore_identity(T, {1, 2, 3}, 0, 0), std::invalid_argument);
}

TEST(ModifiedMooreIdentity, RandomAcrossFields) {
    std::mt19937_64 rng(6);
    for (const FieldTower* T : {&f9(), &f16(), &f81(), &f256(), &f4_16()}) {
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t k = 1 + trial % std::min<std::size_t>(4, T->m());
            const auto alpha = independent_tuple(*T, rng, k);
            for (std::size_t h = 0; h < k; ++h)
                for (std::size_t t = 0; t <= 5; ++t) {
                    ASSERT_TRUE(verify_modified_moore_identity(*T, alpha, h, t));
                    const Element g = g_coefficient(*T, annihilator_coeffs(*T, alpha), h, t);
                    ASSERT_EQ(det_fqm(*T, modified_moore_matrix(*T, alpha, k, h, k + t)) != 0, g != 0);
                }
        }
    }
}
