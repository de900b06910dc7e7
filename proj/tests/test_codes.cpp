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

#include <map>
#include <random>
#include <set>

#include "test_support.hpp"
#include "twistgab/codes.hpp"

using namespace twistgab;
using namespace tgtest;

namespace {

const std::vector<Element> kBasis16{1, 2, 4, 8};

CodeSpec c1(std::size_t k, std::size_t h, std::size_t t, Element eta) { return {kBasis16, k, h, {{t, eta}}}; }

// min weights over every non-zero message, no projective reduction
std::pair<std::size_t, std::size_t> naive_min(const FieldTower& T, const MatrixFqm& G) {
    std::size_t dr = 99, dh = 99;
    const std::uint64_t total = ipow(T.order(), static_cast<unsigned>(G.rows()));
    for (std::uint64_t i = 1; i < total; ++i) {
        std::vector<Element> msg(G.rows());
        std::uint64_t v = i;
        for (auto& x : msg) {
            x = static_cast<Element>(v % T.order());
            v /= T.order();
        }
        Codeword c(G.cols(), 0);
        for (std::size_t r = 0; r < G.rows(); ++r)
            for (std::size_t j = 0; j < G.cols(); ++j) c[j] = T.add(c[j], T.mul_reference(msg[r], G(r, j)));
        dr = std::min(dr, T.fq_rank(c));
        std::size_t w = 0;
        for (auto x : c) w += x != 0;
        dh = std::min(dh, w);
    }
    return {dr, dh};
}

}  // namespace

TEST(CodeSpecValidation, RejectsBadSpecs) {
    const FieldTower& T = f16();
    EXPECT_NO_THROW(validate(T, c1(2, 0, 0, 3)));
    EXPECT_NO_THROW(validate(T, CodeSpec{kBasis16, 2, 0, {}}));
    EXPECT_THROW(validate(T, CodeSpec{kBasis16, 0, 0, {}}), std::invalid_argument);
    EXPECT_THROW(validate(T, CodeSpec{kBasis16, 4, 0, {}}), std::invalid_argument);
    EXPECT_THROW(validate(T, CodeSpec{{1, 2, 3, 8}, 2, 0, {}}), std::invalid_argument);  // 3 = 1 + 2
    EXPECT_THROW(validate(T, CodeSpec{{1, 2, 4, 8, 3}, 2, 0, {}}), std::invalid_argument);  // n > m
    EXPECT_THROW(validate(T, c1(2, 2, 0, 3)), std::invalid_argument);                      // h = k
    EXPECT_THROW(validate(T, c1(2, 0, 2, 3)), std::invalid_argument);                      // t > n-k-1
    EXPECT_THROW(validate(T, c1(2, 0, 0, 0)), std::invalid_argument);                      // eta = 0
    EXPECT_THROW(validate(T, c1(2, 0, 0, 16)), std::invalid_argument);                     // outside field
    EXPECT_THROW(validate(T, CodeSpec{kBasis16, 3, 0, {{0, 1}, {0, 2}}}), std::invalid_argument);  // l > n-k
    EXPECT_THROW(validate(T, CodeSpec{kBasis16, 2, 0, {{1, 1}, {0, 2}}}), std::invalid_argument);  // not increasing
    try {
        validate(T, c1(2, 3, 0, 3));
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("h = 3"), std::string::npos);
    }
}

TEST(GeneratorMatrix, MooreRowsPlusTwist) {
    const FieldTower& T = f16();
    const auto G = generator_matrix(T, c1(2, 1, 1, 5));
    for (std::size_t j = 0; j < 4; ++j) {
        EXPECT_EQ(G(0, j), kBasis16[j]);
        const Element a = kBasis16[j];
        // row 1: a^2 + 5 a^(2^3)
        EXPECT_EQ(G(1, j), T.add(slow_pow(T, a, 2), T.mul(5, slow_pow(T, a, 8))));
    }
}

TEST(Encode, UnitMessagesReproduceRows) {
    const FieldTower& T = f16();
    for (const auto& s : {c1(2, 0, 0, 7), c1(2, 1, 1, 9), c1(3, 2, 0, 2), CodeSpec{kBasis16, 2, 1, {{0, 3}, {1, 6}}},
                          CodeSpec{kBasis16, 1, 0, {{0, 3}, {1, 6}, {2, 11}}}}) {
        const auto G = generator_matrix(T, s);
        for (std::size_t i = 0; i < s.k; ++i) {
            std::vector<Element> unit(s.k, 0);
            unit[i] = 1;
            EXPECT_EQ(encode(T, s, unit), G.row(i));
        }
    }
}

TEST(Encode, AgreesWithGeneratorProduct) {
    const FieldTower& T = f16();
    std::mt19937_64 rng(7);
    const CodeSpec s{kBasis16, 2, 0, {{0, 3}, {1, 6}}};
    const auto G = generator_matrix(T, s);
    for (int r = 0; r < 200; ++r) {
        std::vector<Element> msg{T.random(rng), T.random(rng)};
        EXPECT_EQ(encode(T, s, msg), encode_with(T, G, msg));
    }
    EXPECT_THROW(encode(T, s, {1}), std::invalid_argument);
}

TEST(MessagePoly, TwistTiedToRowH) {
    const FieldTower& T = f16();
    const auto f = message_poly(T, CodeSpec{kBasis16, 2, 1, {{0, 3}, {1, 6}}}, {5, 7});
    EXPECT_EQ(f.coeffs, (std::vector<Element>{5, 7, T.mul(3, 7), T.mul(6, 7)}));
}

TEST(ProjectiveMessages, OneRepresentativePerClassInLexOrder) {
    const FieldTower& T = f4_16();
    for (std::size_t k : {1u, 2u, 3u}) {
        const ProjectiveMessages pm(T.order(), k);
        const std::uint64_t Q = T.order();
        EXPECT_EQ(pm.size(), (ipow(Q, static_cast<unsigned>(k)) - 1) / (Q - 1));
        std::set<std::vector<Element>> seen;
        std::vector<Element> prev;
        for (std::uint64_t i = 0; i < pm.size(); ++i) {
            const auto m = pm.at(i);
            const auto lead = std::find_if(m.begin(), m.end(), [](Element x) { return x != 0; });
            ASSERT_NE(lead, m.end());
            EXPECT_EQ(*lead, 1u);
            if (i) {
                EXPECT_LT(prev, m);
            }
            prev = m;
            seen.insert(m);
        }
        // every non-zero message normalizes to one of them
        std::set<std::vector<Element>> normalized;
        for (std::uint64_t v = 1; v < ipow(Q, static_cast<unsigned>(k)); ++v) {
            std::vector<Element> m(k);
            std::uint64_t x = v;
            for (std::size_t j = k; j-- > 0;) {
                m[j] = static_cast<Element>(x % Q);
                x /= Q;
            }
            const Element inv = T.inv(*std::find_if(m.begin(), m.end(), [](Element y) { return y != 0; }));
            for (auto& y : m) y = T.mul(y, inv);
            normalized.insert(m);
        }
        EXPECT_EQ(normalized, seen);
    }
}

TEST(MinDistances, GabidulinIsMrdAndMds) {
    const FieldTower& T = f16();
    for (std::size_t k = 1; k < 4; ++k) {
        const auto r = classify(T, CodeSpec{kBasis16, k, 0, {}}, Budget{});
        EXPECT_EQ(r.d_rank, 4 - k + 1);
        EXPECT_TRUE(r.is_mrd);
        EXPECT_TRUE(r.is_mds);
        EXPECT_EQ(r.label, HammingClass::MDS);
        EXPECT_TRUE(r.subspace.holds);
    }
}

TEST(MinDistances, MatchesNaiveEnumeration) {
    const FieldTower& T = f16();
    for (std::size_t k : {1u, 2u})
        for (std::size_t h = 0; h < k; ++h)
            for (std::size_t t = 0; t + k < 4; ++t)
                for (Element eta = 1; eta < 16; ++eta) {
                    const auto G = generator_matrix(T, c1(k, h, t, eta));
                    const auto md = min_distances(T, G, Budget{});
                    const auto [dr, dh] = naive_min(T, G);
                    EXPECT_EQ(md.d_rank, dr) << "k=" << k << " h=" << h << " t=" << t << " eta=" << eta;
                    EXPECT_EQ(md.d_hamming, dh);
                    EXPECT_EQ(T.fq_rank(encode_with(T, G, md.rank_witness)), dr);
                    EXPECT_EQ(hamming_weight(encode_with(T, G, md.hamming_witness)), dh);
                }
}

TEST(MinDistances, RankAtMostHammingAtMostSingleton) {
    const FieldTower& T = f16();
    for (Element e1 = 1; e1 < 16; ++e1)
        for (Element e2 = 1; e2 < 16; e2 += 3) {
            const auto md = min_distances(T, generator_matrix(T, CodeSpec{kBasis16, 1, 0, {{0, e1}, {1, e2}}}), Budget{});
            EXPECT_LE(md.d_rank, md.d_hamming);
            EXPECT_LE(md.d_hamming, 4u);
        }
}

TEST(MinDistances, WorkerCountDoesNotChangeWitnesses) {
    const FieldTower& T = f16();
    for (Element eta = 1; eta < 16; ++eta) {
        const auto G = generator_matrix(T, c1(2, 0, 0, eta));
        const auto a = min_distances(T, G, Budget{.workers = 1});
        const auto b = min_distances(T, G, Budget{.workers = 4});
        EXPECT_EQ(a.rank_witness, b.rank_witness);
        EXPECT_EQ(a.hamming_witness, b.hamming_witness);
        EXPECT_EQ(a.d_rank, b.d_rank);
    }
}

TEST(MinDistances, BudgetExceeded) {
    const FieldTower& T = f16();
    Budget b;
    b.codewords = 10;
    try {
        min_distances(T, generator_matrix(T, c1(2, 0, 0, 3)), b);
        FAIL();
    } catch (const BudgetExceeded& e) {
        EXPECT_EQ(e.required(), 17u);
        EXPECT_EQ(e.cap(), 10u);
        EXPECT_NE(std::string(e.what()).find("too large for brute force"), std::string::npos);
    }
}

TEST(ParityCheck, OrthogonalAndFullRank) {
    const FieldTower& T = f16();
    for (Element eta = 1; eta < 16; ++eta) {
        const auto G = generator_matrix(T, c1(2, 1, 0, eta));
        const auto H = parity_check_matrix(T, G);
        EXPECT_EQ(H.rows(), 2u);
        EXPECT_EQ(rank_fqm(T, H), 2u);
        const auto P = mat_mul(T, G, H.transpose());
        for (std::size_t i = 0; i < P.rows(); ++i)
            for (std::size_t j = 0; j < P.cols(); ++j) EXPECT_EQ(P(i, j), 0u);
    }
}

TEST(NmdsConditions, MdsGenerator) {
    const FieldTower& T = f16();
    const auto c = nmds_conditions(T, generator_matrix(T, CodeSpec{kBasis16, 2, 0, {}}));
    EXPECT_TRUE(c.cond_i);
    EXPECT_FALSE(c.cond_ii);
    EXPECT_TRUE(c.cond_iii);
    EXPECT_FALSE(c.dependent_k_subset);
}

TEST(NmdsConditions, ZeroColumnAndRankDeficient) {
    const FieldTower& T = f16();
    MatrixFqm G(2, 4);
    G.set_row(0, {1, 0, 3, 4});
    G.set_row(1, {5, 0, 7, 9});
    const auto c = nmds_conditions(T, G);
    EXPECT_FALSE(c.cond_i);
    EXPECT_TRUE(c.cond_ii);
    ASSERT_TRUE(c.dependent_k_subset);
    EXPECT_EQ(*c.dependent_k_subset, (std::vector<std::size_t>{0, 1}));
    MatrixFqm D(2, 3);
    D.set_row(0, {1, 2, 3});
    D.set_row(1, {1, 2, 3});
    EXPECT_THROW(nmds_conditions(T, D), std::invalid_argument);
}

TEST(Classify, StructuralAndEnumeratedLabelsAgreeOnSweep) {
    // classify throws ConsistencyError on any disagreement
    const FieldTower& T = f16();
    std::map<HammingClass, int> seen;
    for (std::size_t k : {1u, 2u, 3u})
        for (std::size_t h = 0; h < k; ++h)
            for (Element eta = 1; eta < 16; ++eta) {
                DistanceReport r;
                ASSERT_NO_THROW(r = classify(T, c1(k, h, 0, eta), Budget{}));
                EXPECT_EQ(r.d_rank, min_rank_distance(T, c1(k, h, 0, eta), Budget{}).d_rank);
                EXPECT_EQ(r.d_hamming, min_hamming_distance(T, c1(k, h, 0, eta), Budget{}));
                if (r.is_mrd) {
                    EXPECT_TRUE(r.is_mds);
                }
                ++seen[r.label];
            }
    EXPECT_GT(seen[HammingClass::MDS], 0);
    EXPECT_GT(seen[HammingClass::NMDS] + seen[HammingClass::AMDS], 0);
}

TEST(Classify, InvalidSpecThrows) {
    EXPECT_THROW(classify(f16(), c1(2, 0, 0, 0), Budget{}), std::invalid_argument);
}

TEST(Classify, TernaryField) {
    const FieldTower& T = f9();
    // alpha = (1, y) spans F_9 over F_3
    for (Element eta = 1; eta < 9; ++eta) {
        const auto r = classify(T, CodeSpec{{1, 3}, 1, 0, {{0, eta}}}, Budget{});
        const auto [dr, dh] = naive_min(T, generator_matrix(T, CodeSpec{{1, 3}, 1, 0, {{0, eta}}}));
        EXPECT_EQ(r.d_rank, dr);
        EXPECT_EQ(r.d_hamming, dh);
    }
}
