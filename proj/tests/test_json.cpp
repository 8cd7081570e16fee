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

#include "qutrit/json.hpp"

#include <random>

#include "gtest/gtest.h"
#include "qutrit/correlations.hpp"
#include "support/test_support.hpp"

using namespace qutrit;
using nlohmann::json;

TEST(json, scalar_schema) {
    json j = ExactScalar::rational(-1, 12) * ExactScalar::sqrt6();
    EXPECT_EQ(j, (json{{"a", "0/1"}, {"b", "0/1"}, {"c", "0/1"}, {"d", "-1/12"}}));
    EXPECT_EQ(j.get<ExactScalar>(), ExactScalar::rational(-1, 12) * ExactScalar::sqrt6());
}

TEST(json, scalar_accepts_integers_as_fractions) {
    json j = {{"a", "3"}, {"b", "2/4"}, {"c", "0"}, {"d", "0"}};
    EXPECT_EQ(j.get<ExactScalar>(), ExactScalar(3) + ExactScalar::rational(1, 2) * ExactScalar::sqrt2());
}

TEST(json, scalar_errors) {
    EXPECT_THROW((json{{"a", "1/0"}, {"b", "0"}, {"c", "0"}, {"d", "0"}}.get<ExactScalar>()), Error);
    EXPECT_THROW((json{{"a", "x"}, {"b", "0"}, {"c", "0"}, {"d", "0"}}.get<ExactScalar>()), ParseError);
    EXPECT_THROW((json{{"a", 1}, {"b", "0"}, {"c", "0"}, {"d", "0"}}.get<ExactScalar>()), ParseError);
    EXPECT_THROW((json{{"a", "1"}}.get<ExactScalar>()), ParseError);
}

TEST(json, random_complex_round_trip) {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 200; ++k) {
        ExactComplex z = qutrit::testing::random_complex(rng);
        json j = z;
        ASSERT_EQ(json::parse(j.dump()).get<ExactComplex>(), z);
    }
}

TEST(json, exact_matrix_round_trip) {
    ExactMatrix c = qutrit_operator().matrix();
    json j = c;
    EXPECT_EQ(j["rows"], 9);
    EXPECT_EQ(j["cols"], 9);
    EXPECT_EQ(j["mode"], "exact");
    EXPECT_EQ(json::parse(j.dump()).get<ExactMatrix>(), c);
}

TEST(json, float_matrix_round_trip_and_mode_check) {
    FloatMatrix f = to_float(chsh_operator().matrix());
    json j = f;
    EXPECT_EQ(j["mode"], "float");
    EXPECT_EQ(j.get<FloatMatrix>(), f);
    EXPECT_THROW(j.get<ExactMatrix>(), ModeMismatch);
    json e = chsh_operator().matrix();
    EXPECT_THROW(e.get<FloatMatrix>(), ModeMismatch);
}

TEST(json, matrix_shape_errors) {
    json j = ExactMatrix::identity(2);
    j["rows"] = 3;
    EXPECT_THROW(j.get<ExactMatrix>(), DimensionMismatch);
    j = ExactMatrix::identity(2);
    j["entries"][1].erase(0);
    EXPECT_THROW(j.get<ExactMatrix>(), DimensionMismatch);
}

TEST(json, amplitude_set_round_trip) {
    AmplitudeSet c = qutrit::testing::load_fixture("basis_change_e00.json").get<AmplitudeSet>();
    EXPECT_EQ(c.basis, AmplitudeBasis::Computational);
    EXPECT_EQ(c.values[0], ExactComplex(1));
    AmplitudeSet b = to_su3_basis(c);
    json j = b;
    EXPECT_EQ(j["basis"], "su3");
    EXPECT_EQ(j.get<AmplitudeSet>(), b);
    j["basis"] = "qutrit";
    EXPECT_THROW(j.get<AmplitudeSet>(), ParseError);
    j = b;
    j["values"].erase(0);
    EXPECT_THROW(j.get<AmplitudeSet>(), DimensionMismatch);
}

TEST(json, sample_result_schema) {
    SampleResult r{-2.83, 0.001, 1000000, 42};
    json j = r;
    EXPECT_EQ(j, (json{{"estimate", -2.83}, {"stderr", 0.001}, {"shots_per_term", 1000000}, {"seed", 42}}));
    EXPECT_EQ(json::parse(j.dump()).get<SampleResult>(), r);
}

TEST(json, generator_coefficients) {
    json j = coefficients_to_json(generator_decomposition(chsh_operator()));
    ASSERT_EQ(j.size(), 2u);
    EXPECT_EQ(j[0]["l"], 1);
    EXPECT_EQ(j[0]["display"], "-√2");
    EXPECT_NEAR(j[0]["float"].get<double>(), -1.4142135623730951, 1e-15);
    EXPECT_EQ(j[0]["value"].get<ExactComplex>(), ExactComplex(-ExactScalar::sqrt2()));
}

TEST(json, vectors) {
    json j = bell_state(StateLabel::PhiPlus).vector;
    ASSERT_EQ(j.size(), 4u);
    EXPECT_EQ(j[0].get<ExactComplex>(), ExactComplex(invert(ExactScalar::sqrt2())));
    json f = to_float(bell_state(StateLabel::PhiPlus).vector);
    EXPECT_NEAR(f[0]["re"].get<double>(), 0.7071067811865476, 1e-15);
}
