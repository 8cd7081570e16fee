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

#ifndef QUTRIT_ERRATA_HPP
#define QUTRIT_ERRATA_HPP

#include <string>
#include <utility>
#include <vector>

#include "qutrit/exact.hpp"
#include "qutrit/generators.hpp"
#include "qutrit/linalg.hpp"
#include "qutrit/states.hpp"

namespace qutrit {

// Published values. These are comparison data only; nothing in the library is built from them.

/// The 4x4 CHSH operator as published (X-shaped, entries +-sqrt2).
ExactMatrix published_chsh_matrix();
/// The 9x9 qutrit correlation operator as published.
ExactMatrix published_qutrit_matrix();

struct PublishedCoefficient {
    size_t l;
    size_t m;
    ExactScalar value;
};

enum class CoefficientListing {
    PauliExpansion,        // -sqrt2 (s3 s3 + s1 s1)
    GellMannExpansion,     // first published Gell-Mann expansion
    GellMannExpansionAlt,  // the repeated expansion with the (l0, l3) term printed as -1/(2sqrt3)
};
std::vector<PublishedCoefficient> published_coefficients(CoefficientListing listing);

/// Published reduced single-qutrit operators, one per qutrit state.
/// Published expectation table for the Bell states (SU2) or the nine qutrit states (SU3).
std::vector<std::pair<StateLabel, ExactScalar>> published_expectations(Group group);

ExactMatrix published_reduced_form(StateLabel label);

/// Published closed-form basis-change weights: b_k = sum_j W[k][j] c_j.
ExactMatrix published_basis_change_weights();
/// Weights of the exact projection b_k = <psi_k|Psi>.
ExactMatrix projection_basis_change_weights();
/// Applies published_basis_change_weights() to computational amplitudes.
AmplitudeSet published_to_su3_basis(const AmplitudeSet &c);

struct ErratumRow {
    std::string item;
    std::string published;
    std::string computed;
    std::string delta;
    bool matches = false;
};

struct Erratum {
    std::string id;
    std::string summary;
    std::vector<ErratumRow> rows;

    size_t mismatches() const;
};

Erratum reduced_forms_erratum();
Erratum basis_change_erratum();
/// Published vs computed b_ij for one computational input.
Erratum basis_change_erratum(const AmplitudeSet &c);
Erratum lambda_coefficient_erratum();
Erratum tier_labels_erratum();
Erratum product_identity_erratum();
Erratum swap_classification_erratum();

/// Compares every published listing for the group against hs_project of the computed operator.
Erratum generator_coefficient_comparison(Group group);

/// The four documented discrepancies, in a fixed order: reduced forms, basis-change
/// coefficients, (lambda0, lambda3) coefficient, duplicated tier label.
std::vector<Erratum> core_errata();
/// Notes that qualify conventions rather than contradict a value.
std::vector<Erratum> convention_notes();

/// Compact "[[a, b], [c, d]]" rendering.
std::string matrix_to_string(const ExactMatrix &m);

}  // namespace qutrit

#endif  // QUTRIT_ERRATA_HPP
