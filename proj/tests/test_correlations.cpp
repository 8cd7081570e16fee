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

#include "qutrit/correlations.hpp"

#include <algorithm>
#include <cmath>

#include "gtest/gtest.h"
#include "qutrit/json.hpp"
#include "support/test_support.hpp"

using namespace qutrit;
using L = StateLabel;

namespace {

const ExactScalar kR2 = ExactScalar::sqrt2();
const ExactScalar kR6 = ExactScalar::sqrt6();
const ExactScalar k2R2 = ExactScalar(2) * kR2;

ExactMatrix fixture_matrix(const std::string &name) { return qutrit::testing::load_fixture(name).get<ExactMatrix>(); }

}  // namespace

TEST(correlations, chsh_equals_literal) {
    ExactMatrix literal = fixture_matrix("chsh_operator_literal.json");
    EXPECT_EQ(chsh_operator().matrix(), literal);
}

TEST(correlations, chsh_setting_is_built_from_paulis) {
    DetectorSetting s = DetectorSetting::standard();
    EXPECT_EQ(s.q, pauli(3));
    EXPECT_EQ(s.r, pauli(1));
    // S and T are orthogonal unit observables.
    EXPECT_EQ(s.s * s.s, ExactMatrix::identity(2));
    EXPECT_EQ(s.t * s.t, ExactMatrix::identity(2));
    EXPECT_TRUE(trace(s.s * s.t).is_zero());
}

TEST(correlations, qutrit_operator_equals_literal) {
    ExactMatrix literal = fixture_matrix("qutrit_operator_literal.json");
    EXPECT_EQ(qutrit_operator().matrix(), literal);
    EXPECT_TRUE(qutrit_operator().is_real_symmetric());
    EXPECT_TRUE(qutrit_operator().is_traceless());
}

TEST(correlations, chsh_generator_terms) {
    auto terms = generator_decomposition(chsh_operator()).nonzero_terms();
    ASSERT_EQ(terms.size(), 2u);
    EXPECT_EQ(terms[0].l, 1u);
    EXPECT_EQ(terms[0].m, 1u);
    EXPECT_EQ(terms[1].l, 3u);
    EXPECT_EQ(terms[1].m, 3u);
    EXPECT_EQ(terms[0].coefficient, ExactComplex(-kR2));
    EXPECT_EQ(terms[1].coefficient, ExactComplex(-kR2));
}

TEST(correlations, qutrit_generator_terms) {
    GeneratorCoefficients c = generator_decomposition(qutrit_operator());
    struct Expect {
        size_t l, m;
        ExactScalar v;
    };
    const std::vector<Expect> expected = {
        {0, 3, -kR2 / ExactScalar(6)},  {0, 8, kR6 / ExactScalar(6)},
        {2, 2, -kR2},                   {3, 0, -kR2 / ExactScalar(6)},
        {3, 3, -kR2 / ExactScalar(4)},  {3, 8, -kR6 / ExactScalar(12)},
        {4, 4, kR2},                    {6, 6, kR2 / ExactScalar(2)},
        {7, 7, kR2 / ExactScalar(2)},   {8, 0, kR6 / ExactScalar(6)},
        {8, 3, -kR6 / ExactScalar(12)}, {8, 8, ExactScalar(5) * kR2 / ExactScalar(4)},
    };
    auto terms = c.nonzero_terms();
    ASSERT_EQ(terms.size(), expected.size());
    for (size_t k = 0; k < terms.size(); ++k) {
        EXPECT_EQ(terms[k].l, expected[k].l);
        EXPECT_EQ(terms[k].m, expected[k].m);
        EXPECT_EQ(terms[k].coefficient, ExactComplex(expected[k].v)) << k;
    }
    EXPECT_EQ(c(0, 3), ExactComplex(ExactScalar(-1) / (ExactScalar(3) * kR2)));
    EXPECT_EQ(reconstruct(c), qutrit_operator().matrix());
    EXPECT_EQ(reconstruct(generator_decomposition(chsh_operator())), chsh_operator().matrix());
}

TEST(correlations, bell_expectations) {
    const std::vector<std::pair<L, ExactScalar>> expected = {
        {L::PhiPlus, -k2R2}, {L::PsiPlus, 0}, {L::PsiMinus, k2R2}, {L::PhiMinus, 0}};
    for (const auto &[label, value] : expected) {
        EXPECT_EQ(expectation(chsh_operator(), bell_state(label).vector), value) << label_name(label);
        EXPECT_TRUE(is_eigenvector(chsh_operator(), bell_state(label).vector, value));
    }
}

TEST(correlations, qutrit_expectations) {
    const std::vector<std::pair<L, ExactScalar>> expected = {
        {L::Psi00, k2R2},     {L::Psi21Plus, 0},  {L::Psi21Minus, -k2R2}, {L::Psi11, kR2},   {L::Psi20Plus, 0},
        {L::Psi20Minus, -k2R2}, {L::Psi10Plus, 0}, {L::Psi10Minus, k2R2},  {L::Psi22, -kR2},
    };
    for (const auto &[label, value] : expected) {
        EXPECT_EQ(expectation(qutrit_operator(), qutrit_state(label).vector), value) << label_name(label);
        EXPECT_TRUE(is_eigenvector(qutrit_operator(), qutrit_state(label).vector, value)) << label_name(label);
    }
}

TEST(correlations, off_diagonals_vanish) {
    for (Group g : {Group::SU2, Group::SU3}) {
        CorrelationOperator c = correlation_operator(g);
        auto states = states_of(g);
        for (const auto &a : states) {
            for (const auto &b : states) {
                if (a.label == b.label) continue;
                ASSERT_TRUE(inner(a.vector, c.matrix() * b.vector).is_zero());
            }
        }
    }
}

TEST(correlations, projector_coefficients) {
    auto basis = states_of(Group::SU3);
    ProjectorDecomposition p = solve_projector_coefficients(qutrit_operator(), basis);
    EXPECT_EQ(p.at(L::Psi00), k2R2);
    EXPECT_EQ(p.at(L::Psi21Minus), -k2R2);
    EXPECT_EQ(p.at(L::Psi11), kR2);
    EXPECT_EQ(p.at(L::Psi20Minus), -k2R2);
    EXPECT_EQ(p.at(L::Psi10Minus), k2R2);
    EXPECT_EQ(p.at(L::Psi22), -kR2);
    EXPECT_TRUE(p.at(L::Psi21Plus).is_zero());
    EXPECT_TRUE(p.at(L::Psi20Plus).is_zero());
    EXPECT_TRUE(p.at(L::Psi10Plus).is_zero());
    EXPECT_EQ(p.reconstruct(), qutrit_operator().matrix());
    EXPECT_THROW(p.at(L::PhiPlus), UnknownLabel);

    auto weights = qutrit_projector_weights();
    for (const auto &[label, w] : weights) EXPECT_EQ(p.at(label), w);
}

TEST(correlations, projector_solver_preconditions) {
    auto basis = states_of(Group::SU3);
    std::vector<LabeledState> partial(basis.begin(), basis.end() - 1);
    EXPECT_THROW(solve_projector_coefficients(qutrit_operator(), partial), DimensionMismatch);

    // The computational basis does not diagonalize the operator.
    std::vector<LabeledState> product;
    for (size_t k = 0; k < 9; ++k) {
        LabeledState s = basis[k];
        s.vector = ExactVector::basis(9, k);
        product.push_back(s);
    }
    EXPECT_THROW(solve_projector_coefficients(qutrit_operator(), product), NotDiagonalizedByBasis);

    std::vector<LabeledState> duplicated = basis;
    duplicated[1] = duplicated[0];
    EXPECT_THROW(solve_projector_coefficients(qutrit_operator(), duplicated), DimensionMismatch);
}

TEST(correlations, float_spectrum) {
    HermitianEigen e = eig_hermitian(to_float(qutrit_operator().matrix()));
    const double r2 = std::sqrt(2.0);
    std::vector<double> expected = {2 * r2, 2 * r2, r2, 0, 0, 0, -r2, -2 * r2, -2 * r2};
    ASSERT_EQ(e.values.size(), expected.size());
    for (size_t k = 0; k < expected.size(); ++k) EXPECT_NEAR(e.values[k], expected[k], 1e-10);
}

TEST(correlations, bound_tiers) {
    BoundReport su3 = classify_bounds(qutrit_operator(), states_of(Group::SU3));
    EXPECT_EQ(su3.members(BoundClass::TwoRoot2), (std::vector{L::Psi00, L::Psi21Minus, L::Psi20Minus, L::Psi10Minus}));
    EXPECT_EQ(su3.members(BoundClass::Root2), (std::vector{L::Psi11, L::Psi22}));
    EXPECT_EQ(su3.members(BoundClass::Zero), (std::vector{L::Psi21Plus, L::Psi20Plus, L::Psi10Plus}));
    EXPECT_TRUE(su3.members(BoundClass::Exceeds).empty());
    for (const auto &e : su3.entries) EXPECT_TRUE(e.saturated);

    BoundReport su2 = classify_bounds(chsh_operator(), states_of(Group::SU2));
    EXPECT_EQ(su2.members(BoundClass::TwoRoot2), (std::vector{L::PhiPlus, L::PsiMinus}));
    EXPECT_EQ(su2.members(BoundClass::Zero), (std::vector{L::PsiPlus, L::PhiMinus}));

    BoundReport zero = classify_bounds(CorrelationOperator::zero(Group::SU3), states_of(Group::SU3));
    EXPECT_EQ(zero.members(BoundClass::Zero).size(), 9u);

    ExactMatrix big = ExactComplex(3) * ExactMatrix::identity(4);
    BoundReport exceeds = classify_bounds(CorrelationOperator(big, Group::SU2), states_of(Group::SU2));
    EXPECT_EQ(exceeds.members(BoundClass::Exceeds).size(), 4u);
    EXPECT_FALSE(exceeds.at(L::PhiPlus).saturated);
}

TEST(correlations, operator_validation) {
    ExactMatrix nh(4, 4);
    nh(0, 1) = 1;
    EXPECT_THROW(CorrelationOperator(nh, Group::SU2), NotHermitian);
    EXPECT_THROW(CorrelationOperator(ExactMatrix::identity(4), Group::SU3), DimensionMismatch);
}

TEST(correlations, expectation_requires_matching_state) {
    EXPECT_THROW(expectation(qutrit_operator(), bell_state(L::PhiPlus).vector), DimensionMismatch);
}
