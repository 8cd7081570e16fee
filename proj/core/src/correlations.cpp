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

#include <string>

#include "qutrit/error.hpp"

namespace qutrit {

DetectorSetting DetectorSetting::standard() {
    const ExactComplex r2(invert(ExactScalar::sqrt2()));
    return {
        pauli(3),
        pauli(1),
        -r2 * (pauli(3) + pauli(1)),
        r2 * (pauli(3) - pauli(1)),
    };
}

CorrelationOperator::CorrelationOperator(ExactMatrix matrix, Group group) : matrix_(std::move(matrix)), group_(group) {
    size_t n = local_dim(group) * local_dim(group);
    if (matrix_.rows() != n || matrix_.cols() != n) {
        throw DimensionMismatch("correlation operator must be " + std::to_string(n) + "x" + std::to_string(n));
    }
    if (!is_hermitian(matrix_)) throw NotHermitian("correlation operator is not Hermitian");
}

CorrelationOperator CorrelationOperator::zero(Group group) {
    size_t n = local_dim(group) * local_dim(group);
    return {ExactMatrix(n, n), group};
}

bool CorrelationOperator::is_real_symmetric() const {
    for (size_t i = 0; i < matrix_.rows(); ++i) {
        for (size_t j = 0; j < matrix_.cols(); ++j) {
            if (!matrix_(i, j).is_real() || !(matrix_(i, j) == matrix_(j, i))) return false;
        }
    }
    return true;
}

bool CorrelationOperator::is_traceless() const { return trace(matrix_).is_zero(); }

CorrelationOperator chsh_operator(const DetectorSetting &setting) {
    for (const ExactMatrix *m : {&setting.q, &setting.r, &setting.s, &setting.t}) {
        if (m->rows() != 2 || m->cols() != 2) throw DimensionMismatch("detector settings must be 2x2");
        if (!is_hermitian(*m)) throw NotHermitian("detector setting is not Hermitian");
    }
    ExactMatrix c = kron(setting.q, setting.s) + kron(setting.r, setting.s) + kron(setting.r, setting.t) -
                    kron(setting.q, setting.t);
    return {std::move(c), Group::SU2};
}

std::vector<std::pair<StateLabel, ExactScalar>> qutrit_projector_weights() {
    const ExactScalar r2 = ExactScalar::sqrt2();
    const ExactScalar two_r2 = ExactScalar(2) * r2;
    return {
        {StateLabel::Psi11, r2},     {StateLabel::Psi22, -r2},       {StateLabel::Psi00, two_r2},
        {StateLabel::Psi10Minus, two_r2}, {StateLabel::Psi21Minus, -two_r2}, {StateLabel::Psi20Minus, -two_r2},
    };
}

CorrelationOperator qutrit_operator() {
    ExactMatrix c(9, 9);
    for (const auto &[label, weight] : qutrit_projector_weights()) {
        const ExactVector &v = qutrit_state(label).vector;
        c += ExactComplex(weight) * outer(v, v);
    }
    return {std::move(c), Group::SU3};
}

CorrelationOperator correlation_operator(Group group) {
    return group == Group::SU2 ? chsh_operator() : qutrit_operator();
}

const ExactScalar &ProjectorDecomposition::at(StateLabel label) const {
    for (const auto &[l, a] : coefficients) {
        if (l == label) return a;
    }
    throw UnknownLabel("no coefficient for '" + std::string(label_name(label)) + "'");
}

ExactMatrix ProjectorDecomposition::reconstruct() const {
    if (coefficients.empty()) return {};
    size_t n = labeled_state(coefficients.front().first).vector.dim();
    ExactMatrix out(n, n);
    for (const auto &[label, a] : coefficients) {
        if (a.is_zero()) continue;
        const ExactVector &v = labeled_state(label).vector;
        out += ExactComplex(a) * outer(v, v);
    }
    return out;
}

ProjectorDecomposition solve_projector_coefficients(const CorrelationOperator &c,
                                                    std::span<const LabeledState> basis) {
    const size_t n = c.matrix().rows();
    if (basis.size() != n) throw DimensionMismatch("basis is not complete for the operator's space");
    std::vector<ExactVector> vectors;
    for (const auto &s : basis) {
        if (s.vector.dim() != n) throw DimensionMismatch("basis vector dimension mismatch");
        vectors.push_back(s.vector);
    }
    if (gram_matrix<ExactComplex>(vectors) != ExactMatrix::identity(n)) {
        throw DimensionMismatch("basis is not orthonormal");
    }

    ProjectorDecomposition out;
    for (size_t i = 0; i < n; ++i) {
        ExactVector image = c.matrix() * vectors[i];
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (!inner(vectors[j], image).is_zero()) {
                throw NotDiagonalizedByBasis("<" + std::string(label_name(basis[j].label)) + "|C|" +
                                             std::string(label_name(basis[i].label)) + "> is nonzero");
            }
        }
        ExactComplex a = inner(vectors[i], image);
        out.coefficients.emplace_back(basis[i].label, a.re());
    }
    return out;
}

ExactScalar expectation(const CorrelationOperator &c, const ExactVector &s) {
    if (s.dim() != c.matrix().cols()) throw DimensionMismatch("expectation: state dimension mismatch");
    ExactComplex value = inner(s, c.matrix() * s);
    if (!value.is_real()) throw NotHermitian("expectation value is not real");
    return value.re();
}

bool is_eigenvector(const CorrelationOperator &c, const ExactVector &v, const ExactScalar &value) {
    return c.matrix() * v == ExactComplex(value) * v;
}

std::string_view bound_class_name(BoundClass bound) {
    switch (bound) {
        case BoundClass::Zero:
            return "0";
        case BoundClass::Root2:
            return "√2";
        case BoundClass::TwoRoot2:
            return "2√2";
        default:
            return ">2√2";
    }
}

ExactScalar bound_value(BoundClass bound) {
    switch (bound) {
        case BoundClass::Zero:
            return {};
        case BoundClass::Root2:
            return ExactScalar::sqrt2();
        default:
            return ExactScalar(2) * ExactScalar::sqrt2();
    }
}

std::vector<StateLabel> BoundReport::members(BoundClass bound) const {
    std::vector<StateLabel> out;
    for (const auto &e : entries) {
        if (e.bound_class == bound) out.push_back(e.label);
    }
    return out;
}

const BoundEntry &BoundReport::at(StateLabel label) const {
    for (const auto &e : entries) {
        if (e.label == label) return e;
    }
    throw UnknownLabel("no bound entry for '" + std::string(label_name(label)) + "'");
}

BoundReport classify_bounds(const CorrelationOperator &c, std::span<const LabeledState> states) {
    BoundReport out;
    for (const auto &s : states) {
        ExactScalar value = expectation(c, s.vector);
        ExactScalar magnitude = abs(value);
        BoundClass bound = BoundClass::Exceeds;
        for (BoundClass tier : {BoundClass::Zero, BoundClass::Root2, BoundClass::TwoRoot2}) {
            if (magnitude <= bound_value(tier)) {
                bound = tier;
                break;
            }
        }
        bool saturated = bound != BoundClass::Exceeds && magnitude == bound_value(bound);
        out.entries.push_back({s.label, std::move(value), bound, saturated});
    }
    return out;
}

GeneratorCoefficients generator_decomposition(const CorrelationOperator &c) {
    return hs_project(c.matrix(), c.group());
}

}  // namespace qutrit
