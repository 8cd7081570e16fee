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

#ifndef QUTRIT_CORRELATIONS_HPP
#define QUTRIT_CORRELATIONS_HPP

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qutrit/exact.hpp"
#include "qutrit/generators.hpp"
#include "qutrit/linalg.hpp"
#include "qutrit/states.hpp"

namespace qutrit {

/// Local observables of the CHSH expression Q(x)S + R(x)S + R(x)T - Q(x)T.
struct DetectorSetting {
    ExactMatrix q;
    ExactMatrix r;
    ExactMatrix s;
    ExactMatrix t;

    /// Q = sigma3, R = sigma1, S = -(sigma3 + sigma1)/sqrt2, T = (sigma3 - sigma1)/sqrt2.
    static DetectorSetting standard();
};

/// Hermitian operator on C^d (x) C^d for the group's d.
class CorrelationOperator {
   public:
    /// Throws NotHermitian or DimensionMismatch.
    CorrelationOperator(ExactMatrix matrix, Group group);

    static CorrelationOperator zero(Group group);

    const ExactMatrix &matrix() const { return matrix_; }
    Group group() const { return group_; }
    Dims dims() const { return {local_dim(group_), local_dim(group_)}; }

    bool is_real_symmetric() const;
    bool is_traceless() const;

    friend bool operator==(const CorrelationOperator &, const CorrelationOperator &) = default;

   private:
    ExactMatrix matrix_;
    Group group_;
};

/// Throws NotHermitian if any setting is not Hermitian.
CorrelationOperator chsh_operator(const DetectorSetting &setting = DetectorSetting::standard());

/// Projector weights defining the qutrit operator: sqrt2 on psi11, -sqrt2 on psi22,
/// 2sqrt2 on psi00 and psi10-, -2sqrt2 on psi21- and psi20-.
std::vector<std::pair<StateLabel, ExactScalar>> qutrit_projector_weights();

/// sum_i w_i |psi_i><psi_i| over qutrit_projector_weights().
CorrelationOperator qutrit_operator();

CorrelationOperator correlation_operator(Group group);

struct ProjectorDecomposition {
    std::vector<std::pair<StateLabel, ExactScalar>> coefficients;

    /// Throws UnknownLabel when the label is absent.
    const ExactScalar &at(StateLabel label) const;
    /// sum a_i |psi_i><psi_i|.
    ExactMatrix reconstruct() const;
};

/**
 * Coefficients a_i with C = sum a_i |psi_i><psi_i|.
 *
 * The basis must be orthonormal and complete; a_i = <psi_i|C|psi_i> is then
 * exact provided every off-diagonal <psi_i|C|psi_j> vanishes, which is checked.
 * Throws NotDiagonalizedByBasis when it does not, DimensionMismatch for an
 * incomplete or non-orthonormal basis.
 */
ProjectorDecomposition solve_projector_coefficients(const CorrelationOperator &c,
                                                    std::span<const LabeledState> basis);

/// <s|C|s>; real because C is Hermitian. Throws DimensionMismatch.
ExactScalar expectation(const CorrelationOperator &c, const ExactVector &s);

/// true iff C v == value * v exactly.
bool is_eigenvector(const CorrelationOperator &c, const ExactVector &v, const ExactScalar &value);

enum class BoundClass { Zero, Root2, TwoRoot2, Exceeds };
std::string_view bound_class_name(BoundClass bound);
/// 0, sqrt2, 2sqrt2. Exceeds has no value and maps to 2sqrt2.
ExactScalar bound_value(BoundClass bound);

struct BoundEntry {
    StateLabel label;
    ExactScalar expectation;
    BoundClass bound_class;
    /// |<C>| equals the class bound exactly.
    bool saturated;
};

struct BoundReport {
    std::vector<BoundEntry> entries;

    std::vector<StateLabel> members(BoundClass bound) const;
    const BoundEntry &at(StateLabel label) const;
};

/// Each state goes to the smallest tier in {0, sqrt2, 2sqrt2} bounding |<C>|, else Exceeds.
BoundReport classify_bounds(const CorrelationOperator &c, std::span<const LabeledState> states);

/// Hilbert-Schmidt coefficients in the group's generator tensor basis.
GeneratorCoefficients generator_decomposition(const CorrelationOperator &c);

}  // namespace qutrit

#endif  // QUTRIT_CORRELATIONS_HPP
