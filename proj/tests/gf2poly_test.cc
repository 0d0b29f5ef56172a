// Copyright 2026 The gqcc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gqcc/gf2poly.h"

#include <map>
#include <random>

#include "gtest/gtest.h"
#include "test_support.h"

using namespace gqcc;
using gqcc::testing::P;
using gqcc::testing::random_poly;

namespace {

// Dense schoolbook product over GF(2), used as an oracle for operator*.
std::map<int, int> dense_product(const LaurentPoly &a, const LaurentPoly &b) {
    std::map<int, int> coeffs;
    for (int ea : a.exponents()) {
        for (int eb : b.exponents()) {
            coeffs[ea + eb] ^= 1;
        }
    }
    return coeffs;
}

}  // namespace

TEST(LaurentPoly, add_examples) {
    EXPECT_EQ(P("1+D") + P("D"), P("1"));
    EXPECT_EQ(LaurentPoly() + P("D^-2+D^3"), P("D^-2+D^3"));
    EXPECT_TRUE((P("1+D") + P("1+D")).is_zero());
}

TEST(LaurentPoly, mul_examples) {
    EXPECT_EQ(P("1+D") * P("1+D"), P("1+D^2"));
    EXPECT_EQ(P("D") * P("1+D"), P("D+D^2"));
    EXPECT_EQ(P("D^-1") * P("D"), LaurentPoly::one());
    EXPECT_TRUE((LaurentPoly() * P("1+D")).is_zero());
}

TEST(LaurentPoly, reciprocal_examples) {
    EXPECT_EQ(P("1+D").reciprocal(), P("1+D^-1"));
    EXPECT_TRUE(LaurentPoly().reciprocal().is_zero());
    EXPECT_EQ(P("D^-3+D^2+D^5").reciprocal().reciprocal(), P("D^-3+D^2+D^5"));
}

TEST(LaurentPoly, coefficient_examples) {
    EXPECT_TRUE(P("1+D^-1").coefficient(-1));
    EXPECT_FALSE(P("1+D^-1").coefficient(2));
    EXPECT_FALSE(LaurentPoly().coefficient(0));
}

TEST(LaurentPoly, degrees) {
    auto p = P("D^-2+1+D^7");
    EXPECT_EQ(p.min_degree(), -2);
    EXPECT_EQ(p.max_degree(), 7);
    EXPECT_EQ(p.term_count(), 3u);
    EXPECT_THROW(LaurentPoly().min_degree(), std::domain_error);
    EXPECT_THROW(LaurentPoly().max_degree(), std::domain_error);
}

TEST(LaurentPoly, constructor_cancels_repeats) {
    EXPECT_EQ(LaurentPoly({1, 1, 2}), P("D^2"));
    EXPECT_TRUE(LaurentPoly({3, 3}).is_zero());
}

TEST(LaurentPoly, text_format) {
    EXPECT_EQ(P("D + 1").str(), "1+D");
    EXPECT_EQ(P("D^-1").str(), "D^-1");
    EXPECT_EQ(P("D^2+D^-3+1").str(), "D^-3+1+D^2");
    EXPECT_EQ(LaurentPoly().str(), "0");
    EXPECT_TRUE(P("0").is_zero());
    EXPECT_TRUE(P("1+1").is_zero());
    EXPECT_EQ(P(" D ^ 3 "), LaurentPoly::monomial(3));
}

TEST(LaurentPoly, parse_rejects_garbage) {
    for (const char *bad : {"", "+", "1+", "x", "D^", "D^-", "D^1.5", "2", "D^+3", "DD", "D^99999999999"}) {
        EXPECT_THROW(LaurentPoly::parse(bad), std::invalid_argument) << bad;
    }
}

TEST(LaurentPoly, ring_axioms_on_random_triples) {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 500; trial++) {
        auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a + a).is_zero());
        EXPECT_EQ(a * LaurentPoly::one(), a);
    }
}

TEST(LaurentPoly, mul_matches_dense_oracle) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; trial++) {
        auto a = random_poly(rng, -6, 6, 0.5), b = random_poly(rng, -6, 6, 0.5);
        auto expected = dense_product(a, b);
        auto got = a * b;
        for (const auto &[e, bit] : expected) {
            EXPECT_EQ(got.coefficient(e), bit == 1);
        }
        for (int e : got.exponents()) {
            EXPECT_EQ(expected[e], 1);
        }
    }
}

TEST(LaurentPoly, reciprocal_is_ring_homomorphism) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; trial++) {
        auto a = random_poly(rng), b = random_poly(rng);
        EXPECT_EQ((a * b).reciprocal(), a.reciprocal() * b.reciprocal());
        EXPECT_EQ((a + b).reciprocal(), a.reciprocal() + b.reciprocal());
    }
}

TEST(LaurentPoly, text_round_trip) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 300; trial++) {
        auto a = random_poly(rng, -12, 12);
        EXPECT_EQ(LaurentPoly::parse(a.str()), a);
    }
}

TEST(LaurentPoly, shift_is_monomial_product) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; trial++) {
        auto a = random_poly(rng);
        int k = static_cast<int>(rng() % 9) - 4;
        EXPECT_EQ(a.shifted(k), a * LaurentPoly::monomial(k));
    }
}
