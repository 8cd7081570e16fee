// Copyright 2026 The qutrit Authors
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

#include "qutrit/exact.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "qutrit/error.hpp"
#include "support/test_support.hpp"

using namespace qutrit;
using qutrit::testing::random_nonzero_scalar;
using qutrit::testing::random_scalar;

TEST(exact, sqrt2_times_sqrt3_is_sqrt6) {
    EXPECT_EQ(ExactScalar::sqrt2() * ExactScalar::sqrt3(), ExactScalar::sqrt6());
    EXPECT_EQ(ExactScalar::sqrt2() * ExactScalar::sqrt6(), ExactScalar(2) * ExactScalar::sqrt3());
    EXPECT_EQ(ExactScalar::sqrt3() * ExactScalar::sqrt6(), ExactScalar(3) * ExactScalar::sqrt2());
    EXPECT_EQ(ExactScalar::sqrt6() * ExactScalar::sqrt6(), ExactScalar(6));
}

TEST(exact, rationalized_inverse_sqrt2_squares_to_half) {
    ExactScalar inv_sqrt2(0, Rational(1, 2), 0, 0);
    EXPECT_EQ(inv_sqrt2 * inv_sqrt2, ExactScalar::rational(1, 2));
}

TEST(exact, difference_of_squares) {
    ExactScalar one_plus = ExactScalar(1) + ExactScalar::sqrt2();
    ExactScalar one_minus = ExactScalar(1) - ExactScalar::sqrt2();
    EXPECT_EQ(one_plus * one_minus, ExactScalar(-1));
}

TEST(exact, invert_known_values) {
    EXPECT_EQ(invert(ExactScalar::sqrt2()), ExactScalar(0, Rational(1, 2), 0, 0));
    EXPECT_EQ(invert(ExactScalar(2) * ExactScalar::sqrt2()), ExactScalar(0, Rational(1, 4), 0, 0));
}

TEST(exact, invert_multiplies_back_to_one) {
    ExactScalar x = ExactScalar(1) + ExactScalar::sqrt2() + ExactScalar::sqrt3();
    ExactScalar v = invert(x);
    EXPECT_EQ(x * v, ExactScalar(1));
    EXPECT_NEAR(to_float(v), 1.0 / (1.0 + std::sqrt(2.0) + std::sqrt(3.0)), 1e-15);
}

TEST(exact, invert_zero_throws) { EXPECT_THROW(invert(ExactScalar()), ZeroDivision); }

TEST(exact, to_float_values) {
    EXPECT_NEAR(to_float(ExactScalar(2) * ExactScalar::sqrt2()), 2.8284271247461903, 1e-15);
    EXPECT_NEAR(to_float(invert(ExactScalar::sqrt3())), 0.5773502691896258, 1e-15);
    EXPECT_EQ(to_float(ExactScalar()), 0.0);
}

TEST(exact, sign_matches_float_on_near_cancellations) {
    // 5 - 2sqrt6 ~ 0.1010, sqrt2 + sqrt3 - sqrt6 - ... ; pairs chosen so naive grouping fails.
    EXPECT_EQ((ExactScalar(5) - ExactScalar(2) * ExactScalar::sqrt6()).sign(), 1);
    EXPECT_EQ((ExactScalar::sqrt2() + ExactScalar::sqrt3() - ExactScalar::rational(314, 100)).sign(), 1);
    EXPECT_EQ((ExactScalar::sqrt2() + ExactScalar::sqrt3() - ExactScalar::rational(315, 100)).sign(), -1);
    EXPECT_EQ((ExactScalar::sqrt6() - ExactScalar::sqrt2() - ExactScalar::sqrt3() + ExactScalar(1)).sign(), 1);
    EXPECT_LT(ExactScalar::sqrt2(), ExactScalar(2) * ExactScalar::sqrt2());
    EXPECT_EQ(abs(-ExactScalar::sqrt3()), ExactScalar::sqrt3());
}

TEST(exact, sign_agrees_with_float_on_random_values) {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 2000; ++k) {
        ExactScalar x = random_scalar(rng);
        double f = to_float(x);
        if (std::abs(f) < 1e-9) continue;
        ASSERT_EQ(x.sign(), f > 0 ? 1 : -1) << to_string(x);
    }
}

TEST(exact, field_axioms_hold_on_random_inputs) {
    std::mt19937_64 rng(2026);
    for (int k = 0; k < 1000; ++k) {
        ExactScalar x = random_scalar(rng), y = random_scalar(rng), z = random_nonzero_scalar(rng);
        ASSERT_EQ((x + y) + z, x + (y + z));
        ASSERT_EQ((x * y) * z, x * (y * z));
        ASSERT_EQ(x * (y + z), x * y + x * z);
        ASSERT_EQ(x * y, y * x);
        ASSERT_EQ(z * invert(z), ExactScalar(1));
        ASSERT_EQ(x - x, ExactScalar());
    }
}

TEST(exact, complex_field_axioms_and_conjugation) {
    std::mt19937_64 rng(99);
    for (int k = 0; k < 300; ++k) {
        ExactComplex x = qutrit::testing::random_complex(rng);
        ExactComplex y = qutrit::testing::random_complex(rng);
        ASSERT_EQ(x.conj().conj(), x);
        ASSERT_EQ((x * y).conj(), x.conj() * y.conj());
        ASSERT_GE(x.norm_squared().sign(), 0);
        ASSERT_EQ(x * x.conj(), ExactComplex(x.norm_squared()));
        if (!y.is_zero()) {
            ASSERT_EQ((x / y) * y, x);
        }
    }
}

TEST(exact, zero_iff_all_components_zero) {
    EXPECT_TRUE(ExactScalar(0, 0, 0, 0).is_zero());
    EXPECT_FALSE(ExactScalar(0, 0, 0, Rational(1, 1000)).is_zero());
    EXPECT_EQ(ExactScalar(0, 0, 0, Rational(1, 1000)).sign(), 1);
}

TEST(exact, canonical_form_is_idempotent) {
    ExactScalar x(Rational(6, 4), Rational(-10, 5), 0, Rational(3, 9));
    EXPECT_EQ(x.a(), Rational(3, 2));
    EXPECT_EQ(x.a().get_den(), 2);
    ExactScalar again(x.a(), x.b(), x.c(), x.d());
    EXPECT_EQ(again, x);
}

TEST(exact, parse_rational_accepts_and_rejects) {
    EXPECT_EQ(parse_rational("4/6"), Rational(2, 3));
    EXPECT_EQ(parse_rational("-3"), Rational(-3));
    EXPECT_EQ(rational_fraction_string(parse_rational("0")), "0/1");
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("abc"), ParseError);
    EXPECT_THROW(parse_rational("1/-2"), ParseError);
    EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(exact, exact_sqrt_of_rationals) {
    EXPECT_EQ(*exact_sqrt(ExactScalar(2)), ExactScalar::sqrt2());
    EXPECT_EQ(*exact_sqrt(ExactScalar::rational(1, 3)), ExactScalar(0, 0, Rational(1, 3), 0));
    EXPECT_EQ(*exact_sqrt(ExactScalar(24)), ExactScalar(2) * ExactScalar::sqrt6());
    EXPECT_FALSE(exact_sqrt(ExactScalar(5)).has_value());
    EXPECT_FALSE(exact_sqrt(ExactScalar(-4)).has_value());
    EXPECT_FALSE(exact_sqrt(ExactScalar::sqrt2()).has_value());
}

TEST(exact, display_strings) {
    EXPECT_EQ(to_string(ExactScalar(2) * ExactScalar::sqrt2()), "2√2");
    EXPECT_EQ(to_string(-ExactScalar::sqrt6() * ExactScalar::rational(1, 12)), "-√6/12");
    EXPECT_EQ(to_string(ExactScalar::rational(1, 3) + ExactScalar::sqrt2()), "1/3 + √2");
    EXPECT_EQ(to_string(ExactComplex::i()), "i");
    EXPECT_EQ(to_string(ExactComplex(1, -1)), "1 - i");
}
