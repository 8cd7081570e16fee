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

#ifndef QUTRIT_STATES_HPP
#define QUTRIT_STATES_HPP

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "qutrit/exact.hpp"
#include "qutrit/generators.hpp"
#include "qutrit/linalg.hpp"

namespace qutrit {

enum class StateLabel {
    // SU(2), in Bell-state listing order.
    PhiPlus,
    PsiPlus,
    PsiMinus,
    PhiMinus,
    // SU(3), in qutrit-state listing order.
    Psi00,
    Psi21Plus,
    Psi21Minus,
    Psi11,
    Psi20Plus,
    Psi20Minus,
    Psi10Plus,
    Psi10Minus,
    Psi22,
};

/// Canonical spelling: "phi+", "psi-", "psi00", "psi21+", ...
std::string_view label_name(StateLabel label);
/// Accepts canonical names plus the transposed aliases psi12± and psi02±. Throws UnknownLabel.
StateLabel parse_label(std::string_view text);
Group label_group(StateLabel label);

/// Labels of a group in listing order.
std::span<const StateLabel> labels_of(Group group);

enum class SwapSymmetry { Symmetric, Antisymmetric, Neither };
std::string_view swap_symmetry_name(SwapSymmetry symmetry);

struct LabeledState {
    StateLabel label;
    Group group;
    ExactVector vector;
    /// Index of the sigma_i / lambda_i the state is promoted from.
    int generator_index;
    /// Exchange of the computational kets in the state's support (see swap_class).
    SwapSymmetry swap_symmetry;
    /// Eigen-sign under the particle-exchange SWAP operator (see particle_swap_class).
    SwapSymmetry particle_swap;
};

/// Promotes M to sum_ij M_ij |ij>, normalized. Throws ZeroMatrix; throws Error if the
/// norm is not representable in the field.
ExactVector vectorize(const ExactMatrix &m);

/// The four normalized Bell states. Throws UnknownLabel for SU(3) labels.
LabeledState bell_state(StateLabel label);
/// The nine normalized entangled qutrit states. Throws UnknownLabel for SU(2) labels.
LabeledState qutrit_state(StateLabel label);
LabeledState labeled_state(StateLabel label);
std::vector<LabeledState> states_of(Group group);

/**
 * Exchange symmetry of the terms of a bipartite state.
 *
 * Symmetric when every transposition of two support kets leaves the state
 * unchanged (all support amplitudes equal), antisymmetric when the support is
 * a pair with opposite amplitudes, and neither otherwise. For the psi_ij^±
 * states with i != j this agrees with particle_swap_class.
 */
SwapSymmetry swap_class(const ExactVector &s, Dims dims);

/// Compares SWAP*s with +s and -s. Requires dA == dB.
SwapSymmetry particle_swap_class(const ExactVector &s, Dims dims);

/// true iff |s><s| is idempotent.
bool purity_check(const ExactVector &s);

enum class AmplitudeBasis { Computational, SU3 };

/// Nine amplitudes: c_ij in |00>,|01>,...,|22> order, or b_ij in qutrit-state listing order.
struct AmplitudeSet {
    AmplitudeBasis basis = AmplitudeBasis::Computational;
    std::array<ExactComplex, 9> values{};

    ExactScalar squared_norm() const;
    friend bool operator==(const AmplitudeSet &, const AmplitudeSet &) = default;
};

/// b_ij = <psi_ij|Psi>. Throws NotNormalized or ParseError for the wrong basis tag.
AmplitudeSet to_su3_basis(const AmplitudeSet &c);
/// Psi = sum b_ij |psi_ij>.
AmplitudeSet from_su3_basis(const AmplitudeSet &b);

}  // namespace qutrit

#endif  // QUTRIT_STATES_HPP
