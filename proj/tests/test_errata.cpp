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

#include "qutrit/errata.hpp"

#include <random>

#include "gtest/gtest.h"
#include "qutrit/correlations.hpp"
#include "support/test_support.hpp"

using namespace qutrit;

TEST(errata, published_operators_match_constructions) {
    EXPECT_EQ(published_chsh_matrix(), chsh_operator().matrix());
    EXPECT_EQ(published_qutrit_matrix(), qutrit_operator().matrix());
}

TEST(errata, pauli_listing_matches) {
    Erratum e = generator_coefficient_comparison(Group::SU2);
    EXPECT_FALSE(e.rows.empty());
    EXPECT_EQ(e.mismatches(), 0u);
}

TEST(errata, gellmann_listing_mismatch_is_the_lambda03_term) {
    Erratum e = generator_coefficient_comparison(Group::SU3);
    EXPECT_EQ(e.rows.size(), 24u);
    std::vector<std::string> mismatched;
    for (const auto &r : e.rows) {
        if (!r.matches) mismatched.push_back(r.item);
    }
    EXPECT_EQ(mismatched, (std::vector<std::string>{"repeated (0,3)", "repeated (3,0)"}));
}

TEST(errata, lambda_coefficient_oracle_picks_main_text_value) {
    Erratum e = lambda_coefficient_erratum();
    ASSERT_EQ(e.rows.size(), 2u);
    EXPECT_TRUE(e.rows[0].matches);
    EXPECT_FALSE(e.rows[1].matches);
    EXPECT_EQ(e.rows[0].computed, "-√2/6");
    EXPECT_EQ(e.rows[1].published, "-√3/6");
}

TEST(errata, reduced_forms) {
    Erratum e = reduced_forms_erratum();
    ASSERT_EQ(e.rows.size(), 9u);
    // psi00 and psi22 are published as valid density matrices; the seven off-diagonal forms are not.
    EXPECT_TRUE(e.rows[0].matches);
    EXPECT_TRUE(e.rows[8].matches);
    EXPECT_EQ(e.mismatches(), 7u);
    for (StateLabel l : {StateLabel::Psi10Plus, StateLabel::Psi11, StateLabel::Psi20Minus}) {
        EXPECT_TRUE(trace(published_reduced_form(l)).is_zero());
    }
}

TEST(errata, basis_change_report_is_non_empty) {
    Erratum e = basis_change_erratum();
    ASSERT_EQ(e.rows.size(), 9u);
    // No published closed form agrees with the projection as a linear functional.
    EXPECT_EQ(e.mismatches(), 9u);
    EXPECT_EQ(e.rows[1].computed, "√2/2*c12 + √2/2*c21");
}

TEST(errata, basis_change_of_given_amplitudes) {
    AmplitudeSet c = qutrit::testing::load_fixture("basis_change_e00.json").get<AmplitudeSet>();
    Erratum e = basis_change_erratum(c);
    EXPECT_EQ(e.rows[0].computed, "√3/3");
    EXPECT_EQ(e.rows[8].computed, "-√6/3");
    EXPECT_TRUE(e.rows[0].matches);
    EXPECT_FALSE(e.rows[8].matches);
}

TEST(errata, projection_weights_are_unitary) {
    ExactMatrix w = projection_basis_change_weights();
    EXPECT_EQ(w * adjoint(w), ExactMatrix::identity(9));
    ExactMatrix p = published_basis_change_weights();
    EXPECT_NE(p * adjoint(p), ExactMatrix::identity(9));
}

TEST(errata, tier_labels) {
    Erratum e = tier_labels_erratum();
    ASSERT_EQ(e.rows.size(), 2u);
    EXPECT_FALSE(e.rows[0].matches);
    EXPECT_EQ(e.rows[0].computed, "{psi00, psi21-, psi20-, psi10-}");
    EXPECT_TRUE(e.rows[1].matches);
}

TEST(errata, core_set_and_notes) {
    auto core = core_errata();
    ASSERT_EQ(core.size(), 4u);
    EXPECT_EQ(core[0].id, "reduced-state-forms");
    EXPECT_EQ(core[1].id, "basis-change-coefficients");
    EXPECT_EQ(core[2].id, "lambda0-lambda3-coefficient");
    EXPECT_EQ(core[3].id, "inequality-tier-labels");
    for (const auto &e : core) EXPECT_GT(e.mismatches(), 0u) << e.id;
    EXPECT_EQ(convention_notes().size(), 2u);
}

TEST(errata, matrix_string) {
    EXPECT_EQ(matrix_to_string(pauli(2)), "[[0, -i], [i, 0]]");
}
