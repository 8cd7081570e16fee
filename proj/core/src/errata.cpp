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

#include <sstream>

#include "qutrit/correlations.hpp"
#include "qutrit/density.hpp"
#include "qutrit/error.hpp"

namespace qutrit {

namespace {

const ExactScalar kR2 = ExactScalar::sqrt2();

ExactScalar q(long num, long den) { return ExactScalar::rational(num, den); }
ExactScalar r2(long num, long den) { return q(num, den) * ExactScalar::sqrt2(); }
ExactScalar r3(long num, long den) { return q(num, den) * ExactScalar::sqrt3(); }
ExactScalar r6(long num, long den) { return q(num, den) * ExactScalar::sqrt6(); }

ExactMatrix from_sqrt2_pattern(std::initializer_list<std::initializer_list<int>> rows) {
    ExactMatrix out(rows.size(), rows.size());
    size_t i = 0;
    for (const auto &row : rows) {
        size_t j = 0;
        for (int w : row) out(i, j++) = ExactComplex(ExactScalar(w) * ExactScalar::sqrt2());
        ++i;
    }
    return out;
}

const char *const kCompNames[9] = {"c00", "c01", "c02", "c10", "c11", "c12", "c20", "c21", "c22"};

std::string functional_to_string(const ExactMatrix &w, size_t row) {
    std::string out;
    for (size_t j = 0; j < w.cols(); ++j) {
        const ExactComplex &x = w(row, j);
        if (x.is_zero()) continue;
        std::string term = to_string(x);
        bool negative = term[0] == '-';
        if (negative) term.erase(0, 1);
        if (term.find(' ') != std::string::npos) term = "(" + term + ")";
        if (term == "1") {
            term.clear();
        } else {
            term += "*";
        }
        if (out.empty()) {
            out = (negative ? "-" : "") + term + kCompNames[j];
        } else {
            out += (negative ? " - " : " + ") + term + kCompNames[j];
        }
    }
    return out.empty() ? "0" : out;
}

std::string labels_to_string(const std::vector<std::string> &labels) {
    std::string out = "{";
    for (size_t k = 0; k < labels.size(); ++k) out += (k ? ", " : "") + labels[k];
    return out + "}";
}

}  // namespace

ExactMatrix published_chsh_matrix() {
    return from_sqrt2_pattern({
        {-1, 0, 0, -1},
        {0, 1, -1, 0},
        {0, -1, 1, 0},
        {-1, 0, 0, -1},
    });
}

ExactMatrix published_qutrit_matrix() {
    return from_sqrt2_pattern({
        {0, 0, 0, 0, 1, 0, 0, 0, 1},
        {0, 1, 0, -1, 0, 0, 0, 0, 0},
        {0, 0, -1, 0, 0, 0, 1, 0, 0},
        {0, -1, 0, 1, 0, 0, 0, 0, 0},
        {1, 0, 0, 0, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, -1, 0, 1, 0},
        {0, 0, 1, 0, 0, 0, -1, 0, 0},
        {0, 0, 0, 0, 0, 1, 0, -1, 0},
        {1, 0, 0, 0, 0, 0, 0, 0, 1},
    });
}

std::vector<PublishedCoefficient> published_coefficients(CoefficientListing listing) {
    if (listing == CoefficientListing::PauliExpansion) return {{1, 1, -kR2}, {3, 3, -kR2}};
    ExactScalar lambda03 = listing == CoefficientListing::GellMannExpansion ? -r2(1, 6) : -r3(1, 6);
    return {
        {0, 3, lambda03},   {0, 8, r6(1, 6)},  {2, 2, -kR2},      {3, 0, lambda03},
        {3, 3, -r2(1, 4)},  {3, 8, -r6(1, 12)}, {4, 4, kR2},       {6, 6, r2(1, 2)},
        {7, 7, r2(1, 2)},   {8, 0, r6(1, 6)},  {8, 3, -r6(1, 12)}, {8, 8, r2(5, 4)},
    };
}

std::vector<std::pair<StateLabel, ExactScalar>> published_expectations(Group group) {
    using L = StateLabel;
    const ExactScalar t = r2(2, 1);
    if (group == Group::SU2) return {{L::PhiPlus, -t}, {L::PsiPlus, 0}, {L::PsiMinus, t}, {L::PhiMinus, 0}};
    return {
        {L::Psi00, t},       {L::Psi21Plus, 0},  {L::Psi21Minus, -t}, {L::Psi11, kR2},  {L::Psi20Plus, 0},
        {L::Psi20Minus, -t}, {L::Psi10Plus, 0},  {L::Psi10Minus, t},  {L::Psi22, -kR2},
    };
}

ExactMatrix published_reduced_form(StateLabel label) {
    auto off_diagonal = [](size_t i, size_t j) {
        ExactMatrix m(3, 3);
        m(i, j) = ExactComplex(q(1, 2));
        m(j, i) = ExactComplex(q(1, 2));
        return m;
    };
    auto diagonal = [](long a, long b, long c, long den) {
        ExactMatrix m(3, 3);
        m(0, 0) = ExactComplex(q(a, den));
        m(1, 1) = ExactComplex(q(b, den));
        m(2, 2) = ExactComplex(q(c, den));
        return m;
    };
    switch (label) {
        case StateLabel::Psi00:
            return diagonal(1, 1, 1, 3);
        case StateLabel::Psi10Plus:
        case StateLabel::Psi10Minus:
            return off_diagonal(0, 1);
        case StateLabel::Psi20Plus:
        case StateLabel::Psi20Minus:
            return off_diagonal(0, 2);
        case StateLabel::Psi21Plus:
        case StateLabel::Psi21Minus:
        case StateLabel::Psi11:
            return off_diagonal(1, 2);
        case StateLabel::Psi22:
            return diagonal(4, 1, 1, 6);
        default:
            throw UnknownLabel("no published reduced form for '" + std::string(label_name(label)) + "'");
    }
}

ExactMatrix published_basis_change_weights() {
    // Columns follow c00, c01, c02, c10, c11, c12, c20, c21, c22.
    const ExactScalar h = r2(1, 2);
    ExactMatrix w(9, 9);
    auto set = [&](size_t row, size_t col, const ExactScalar &v) { w(row, col) = ExactComplex(v); };
    set(0, 0, r3(1, 3));  // b00 = (c00 - sqrt2 c22)/sqrt3
    set(0, 8, -r6(1, 3));
    set(1, 1, h);  // b21+ = (c01 + c02)/sqrt2
    set(1, 2, h);
    set(2, 1, h);  // b21- = (c01 - c02)/sqrt2
    set(2, 2, -h);
    set(3, 6, r3(1, 3));  // b11 = (sqrt2 c20 - sqrt3 c02 + c22)/sqrt6
    set(3, 2, -h);
    set(3, 8, r6(1, 6));
    set(4, 6, h);  // b20+ = (c20 + c21)/sqrt2
    set(4, 7, h);
    set(5, 6, h);  // b20- = (c20 - c21)/sqrt2
    set(5, 7, -h);
    set(6, 4, h);  // b10+ = (c11 + c12)/sqrt2
    set(6, 5, h);
    set(7, 4, h);  // b10- = (c11 - c12)/sqrt2
    set(7, 5, -h);
    set(8, 0, r3(1, 3));  // b22 = (sqrt2 c00 + sqrt3 c10 + c22)/sqrt6
    set(8, 3, h);
    set(8, 8, r6(1, 6));
    return w;
}

ExactMatrix projection_basis_change_weights() {
    ExactMatrix w(9, 9);
    auto basis = states_of(Group::SU3);
    for (size_t k = 0; k < basis.size(); ++k) {
        for (size_t j = 0; j < 9; ++j) w(k, j) = basis[k].vector[j].conj();
    }
    return w;
}

AmplitudeSet published_to_su3_basis(const AmplitudeSet &c) {
    if (c.basis != AmplitudeBasis::Computational) throw ParseError("expected computational amplitudes");
    ExactMatrix w = published_basis_change_weights();
    AmplitudeSet out{AmplitudeBasis::SU3, {}};
    for (size_t k = 0; k < 9; ++k) {
        for (size_t j = 0; j < 9; ++j) {
            if (!w(k, j).is_zero() && !c.values[j].is_zero()) out.values[k] += w(k, j) * c.values[j];
        }
    }
    return out;
}

size_t Erratum::mismatches() const {
    size_t out = 0;
    for (const auto &r : rows) out += r.matches ? 0 : 1;
    return out;
}

std::string matrix_to_string(const ExactMatrix &m) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < m.rows(); ++i) {
        out << (i ? ", [" : "[");
        for (size_t j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << to_string(m(i, j));
        out << "]";
    }
    out << "]";
    return out.str();
}

Erratum reduced_forms_erratum() {
    Erratum out{"reduced-state-forms",
                "Several published reduced operators are off-diagonal and traceless, so they cannot be density "
                "matrices; the exact partial trace gives diagonal operators whose entropies match the quoted values.",
                {}};
    for (const auto &state : states_of(Group::SU3)) {
        ExactMatrix published = published_reduced_form(state.label);
        ExactMatrix computed = reduce(density_of(state.vector, {3, 3}), Subsystem::A).matrix();
        ExactMatrix delta = published - computed;
        out.rows.push_back({std::string(label_name(state.label)) + " (trace " + to_string(trace(published)) + ")",
                            matrix_to_string(published), matrix_to_string(computed), matrix_to_string(delta),
                            published == computed});
    }
    return out;
}

Erratum basis_change_erratum() {
    Erratum out{"basis-change-coefficients",
                "Published closed forms for the SU(3)-basis amplitudes disagree with the projections "
                "b_ij = <psi_ij|Psi> onto the orthonormal qutrit states.",
                {}};
    ExactMatrix published = published_basis_change_weights();
    ExactMatrix computed = projection_basis_change_weights();
    ExactMatrix delta = published - computed;
    auto labels = labels_of(Group::SU3);
    for (size_t k = 0; k < 9; ++k) {
        bool matches = true;
        for (size_t j = 0; j < 9; ++j) matches = matches && published(k, j) == computed(k, j);
        out.rows.push_back({"b(" + std::string(label_name(labels[k])) + ")", functional_to_string(published, k),
                            functional_to_string(computed, k), functional_to_string(delta, k), matches});
    }
    return out;
}

Erratum basis_change_erratum(const AmplitudeSet &c) {
    Erratum out{"basis-change-coefficients", "Published closed forms vs exact projection for the given amplitudes.",
                {}};
    AmplitudeSet published = published_to_su3_basis(c);
    AmplitudeSet computed = to_su3_basis(c);
    auto labels = labels_of(Group::SU3);
    for (size_t k = 0; k < 9; ++k) {
        out.rows.push_back({"b(" + std::string(label_name(labels[k])) + ")", to_string(published.values[k]),
                            to_string(computed.values[k]), to_string(published.values[k] - computed.values[k]),
                            published.values[k] == computed.values[k]});
    }
    return out;
}

Erratum lambda_coefficient_erratum() {
    Erratum out{"lambda0-lambda3-coefficient",
                "The (lambda0, lambda3) coefficient is published twice with different values; Hilbert-Schmidt "
                "projection of the computed operator decides between them.",
                {}};
    GeneratorCoefficients computed = generator_decomposition(qutrit_operator());
    const ExactScalar &oracle = computed(0, 3).re();
    auto row = [&](const std::string &name, CoefficientListing listing) {
        for (const auto &c : published_coefficients(listing)) {
            if (c.l == 0 && c.m == 3) {
                out.rows.push_back({name, to_string(c.value), to_string(oracle), to_string(c.value - oracle),
                                    c.value == oracle});
            }
        }
    };
    row("first expansion", CoefficientListing::GellMannExpansion);
    row("repeated expansion", CoefficientListing::GellMannExpansionAlt);
    return out;
}

Erratum tier_labels_erratum() {
    Erratum out{"inequality-tier-labels",
                "The published 2√2 tier lists psi20- twice and omits psi10-; the exact expectation table fixes "
                "the membership.",
                {}};
    BoundReport report = classify_bounds(qutrit_operator(), states_of(Group::SU3));
    auto names = [](const std::vector<StateLabel> &labels) {
        std::vector<std::string> out;
        for (auto l : labels) out.emplace_back(label_name(l));
        return out;
    };
    std::vector<std::string> published_top = {"psi00", "psi12-", "psi20-", "psi20-"};
    std::vector<std::string> computed_top = names(report.members(BoundClass::TwoRoot2));
    out.rows.push_back({"2√2 tier", labels_to_string(published_top), labels_to_string(computed_top),
                        "duplicate psi20-; missing psi10-", false});
    std::vector<std::string> published_mid = {"psi11", "psi22"};
    std::vector<std::string> computed_mid = names(report.members(BoundClass::Root2));
    out.rows.push_back({"√2 tier", labels_to_string(published_mid), labels_to_string(computed_mid), "",
                        published_mid == computed_mid});
    return out;
}

Erratum product_identity_erratum() {
    Erratum out{"gellmann-product-identity",
                "The published normalization l_l l_m = delta_lm + d_lmn l_n + f_lmp l_p omits the 2/3 on the "
                "identity term and the factor i on the antisymmetric term.",
                {}};
    ProductExpansion p11 = product_expand(1, 1);
    out.rows.push_back({"l1 l1: identity coefficient", "1", to_string(p11.identity_coefficient),
                        to_string(ExactComplex(1) - p11.identity_coefficient), false});
    ProductExpansion p12 = product_expand(1, 2);
    ExactComplex f123 = ExactComplex(structure_constants().f(1, 2, 3));
    out.rows.push_back({"l1 l2: l3 coefficient", to_string(f123), to_string(p12.coefficient(3)),
                        to_string(f123 - p12.coefficient(3)), f123 == p12.coefficient(3)});
    return out;
}

Erratum swap_classification_erratum() {
    Erratum out{"swap-classification",
                "The published exchange classes follow exchange of the kets in each superposition. psi11 and psi22 "
                "are nevertheless symmetric under the particle SWAP operator.",
                {}};
    for (const auto &s : states_of(Group::SU3)) {
        bool same = s.swap_symmetry == s.particle_swap;
        out.rows.push_back({std::string(label_name(s.label)), std::string(swap_symmetry_name(s.swap_symmetry)),
                            std::string(swap_symmetry_name(s.particle_swap)), same ? "" : "differs", same});
    }
    return out;
}

Erratum generator_coefficient_comparison(Group group) {
    GeneratorCoefficients computed = generator_decomposition(correlation_operator(group));
    Erratum out{"generator-coefficients-" + std::string(group_name(group)),
                "Published generator tensor coefficients vs Hilbert-Schmidt projection.", {}};
    std::vector<std::pair<std::string, CoefficientListing>> listings;
    if (group == Group::SU2) {
        listings = {{"pauli", CoefficientListing::PauliExpansion}};
    } else {
        listings = {{"main", CoefficientListing::GellMannExpansion},
                    {"repeated", CoefficientListing::GellMannExpansionAlt}};
    }
    for (const auto &[name, listing] : listings) {
        auto published = published_coefficients(listing);
        GeneratorCoefficients as_published(group, computed.size());
        for (const auto &c : published) as_published(c.l, c.m) = ExactComplex(c.value);
        for (size_t l = 0; l < computed.size(); ++l) {
            for (size_t m = 0; m < computed.size(); ++m) {
                if (computed(l, m).is_zero() && as_published(l, m).is_zero()) continue;
                const auto &p = as_published(l, m);
                const auto &c = computed(l, m);
                out.rows.push_back({name + " (" + std::to_string(l) + "," + std::to_string(m) + ")", to_string(p),
                                    to_string(c), to_string(p - c), p == c});
            }
        }
    }
    return out;
}

std::vector<Erratum> core_errata() {
    return {reduced_forms_erratum(), basis_change_erratum(), lambda_coefficient_erratum(), tier_labels_erratum()};
}

std::vector<Erratum> convention_notes() { return {product_identity_erratum(), swap_classification_erratum()}; }

}  // namespace qutrit
