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

#include "qutrit/density.hpp"

#include <cmath>

#include "gtest/gtest.h"
#include "qutrit/states.hpp"

using namespace qutrit;

TEST(density, validates_input) {
    EXPECT_THROW(DensityMatrix(ExactMatrix::identity(4), {2, 2}), NotNormalized);
    EXPECT_THROW(DensityMatrix(ExactMatrix(4, 4), {2, 2}), NotNormalized);
    ExactMatrix nh(2, 2);
    nh(0, 0) = 1;
    nh(0, 1) = 1;
    EXPECT_THROW(DensityMatrix(nh, {2, 1}), NotHermitian);
    EXPECT_THROW(DensityMatrix(ExactComplex(ExactScalar::rational(1, 3)) * ExactMatrix::identity(3), {2, 2}),
                 DimensionMismatch);
    EXPECT_NO_THROW(DensityMatrix(ExactComplex(ExactScalar::rational(1, 3)) * ExactMatrix::identity(3), {3, 1}));
}

TEST(density, reduced_bell_states_are_maximally_mixed) {
    for (const auto &s : states_of(Group::SU2)) {
        DensityMatrix r = reduce(density_of(s.vector, {2, 2}), Subsystem::B);
        EXPECT_EQ(r.matrix(), ExactComplex(ExactScalar::rational(1, 2)) * ExactMatrix::identity(2));
        EXPECT_EQ(purity(r), ExactScalar::rational(1, 2));
        EXPECT_NEAR(entropy(r), 1.0, 1e-12);
    }
}

TEST(density, qutrit_entropies) {
    for (const auto &s : states_of(Group::SU3)) {
        DensityMatrix rho = density_of(s.vector);
        EXPECT_EQ(purity(rho), ExactScalar(1));
        EXPECT_NEAR(entropy(rho), 0.0, 1e-9);
        DensityMatrix a = reduce(rho, Subsystem::A);
        DensityMatrix b = reduce(rho, Subsystem::B);
        EXPECT_LT(purity(a), ExactScalar(1));
        EXPECT_NEAR(entropy(a), entropy(b), 1e-12);
        switch (s.label) {
            case StateLabel::Psi00:
                EXPECT_NEAR(entropy(a), std::log2(3.0), 1e-9);
                EXPECT_EQ(purity(a), ExactScalar::rational(1, 3));
                break;
            case StateLabel::Psi22:
                EXPECT_NEAR(entropy(a), 1.2516291673878228, 1e-9);
                EXPECT_EQ(purity(a), ExactScalar::rational(1, 2));
                break;
            default:
                EXPECT_NEAR(entropy(a), 1.0, 1e-9) << label_name(s.label);
                EXPECT_EQ(purity(a), ExactScalar::rational(1, 2));
        }
    }
}

TEST(density, spectrum_of_psi22_reduction) {
    DensityMatrix a = reduce(density_of(qutrit_state(StateLabel::Psi22).vector), Subsystem::A);
    EXPECT_EQ(a.matrix()(0, 0), ExactComplex(ExactScalar::rational(2, 3)));
    std::vector<double> w = spectrum(a);
    ASSERT_EQ(w.size(), 3u);
    EXPECT_NEAR(w[0], 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(w[1], 1.0 / 6.0, 1e-12);
    EXPECT_NEAR(w[2], 1.0 / 6.0, 1e-12);
}

TEST(density, product_state_has_zero_entropy) {
    ExactVector s = kron(ExactVector::basis(3, 2), ExactVector::basis(3, 0));
    DensityMatrix a = reduce(density_of(s, {3, 3}), Subsystem::A);
    EXPECT_EQ(purity(a), ExactScalar(1));
    EXPECT_NEAR(entropy(a), 0.0, 1e-12);
}

TEST(density, infers_square_dims) {
    EXPECT_EQ(density_of(qutrit_state(StateLabel::Psi00).vector).dims(), (Dims{3, 3}));
    EXPECT_EQ(density_of(bell_state(StateLabel::PhiPlus).vector).dims(), (Dims{2, 2}));
    EXPECT_EQ(density_of(ExactVector::basis(3, 1)).dims(), (Dims{3, 1}));
    EXPECT_THROW(reduce(density_of(ExactVector::basis(3, 1)), Subsystem::A), DimensionMismatch);
    EXPECT_THROW(density_of(ExactComplex(2) * ExactVector::basis(4, 0)), NotNormalized);
}

TEST(density, negative_eigenvalue_is_rejected) {
    ExactMatrix m(2, 2);
    m(0, 0) = 2;
    m(1, 1) = -1;
    EXPECT_THROW(entropy(DensityMatrix(m, {2, 1})), NegativeEigenvalue);
}
