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

#include "qutrit/states.hpp"

#include <string>
#include <tuple>

#include "qutrit/error.hpp"

namespace qutrit {

namespace {

constexpr std::array<StateLabel, 4> kBellLabels = {StateLabel::PhiPlus, StateLabel::PsiPlus, StateLabel::PsiMinus,
                                                   StateLabel::PhiMinus};
constexpr std::array<StateLabel, 9> kQutritLabels = {
    StateLabel::Psi00,      StateLabel::Psi21Plus, StateLabel::Psi21Minus, StateLabel::Psi11, StateLabel::Psi20Plus,
    StateLabel::Psi20Minus, StateLabel::Psi10Plus, StateLabel::Psi10Minus, StateLabel::Psi22,
};

struct LabelEntry {
    StateLabel label;
    std::string_view name;
};

constexpr std::array<LabelEntry, 13> kNames = {{
    {StateLabel::PhiPlus, "phi+"},
    {StateLabel::PsiPlus, "psi+"},
    {StateLabel::PsiMinus, "psi-"},
    {StateLabel::PhiMinus, "phi-"},
    {StateLabel::Psi00, "psi00"},
    {StateLabel::Psi21Plus, "psi21+"},
    {StateLabel::Psi21Minus, "psi21-"},
    {StateLabel::Psi11, "psi11"},
    {StateLabel::Psi20Plus, "psi20+"},
    {StateLabel::Psi20Minus, "psi20-"},
    {StateLabel::Psi10Plus, "psi10+"},
    {StateLabel::Psi10Minus, "psi10-"},
    {StateLabel::Psi22, "psi22"},
}};

constexpr std::array<LabelEntry, 4> kAliases = {{
    {StateLabel::Psi21Plus, "psi12+"},
    {StateLabel::Psi21Minus, "psi12-"},
    {StateLabel::Psi20Plus, "psi02+"},
    {StateLabel::Psi20Minus, "psi02-"},
}};

// Sum of (weight, i, j) terms in C^d (x) C^d, scaled by `scale`.
ExactVector kets(size_t d, std::initializer_list<std::tuple<long, size_t, size_t>> terms, const ExactScalar &scale) {
    ExactVector out(d * d);
    for (const auto &[w, i, j] : terms) out[i * d + j] += ExactComplex(ExactScalar(w) * scale);
    return out;
}

LabeledState finish(StateLabel label, ExactVector vector, int generator_index) {
    Group group = label_group(label);
    size_t d = local_dim(group);
    LabeledState out{label, group, std::move(vector), generator_index, SwapSymmetry::Neither, SwapSymmetry::Neither};
    out.swap_symmetry = swap_class(out.vector, {d, d});
    out.particle_swap = particle_swap_class(out.vector, {d, d});
    return out;
}

const std::vector<LabeledState> &qutrit_basis() {
    static const std::vector<LabeledState> basis = states_of(Group::SU3);
    return basis;
}

}  // namespace

std::string_view label_name(StateLabel label) {
    for (const auto &e : kNames) {
        if (e.label == label) return e.name;
    }
    return "?";
}

StateLabel parse_label(std::string_view text) {
    for (const auto &e : kNames) {
        if (e.name == text) return e.label;
    }
    for (const auto &e : kAliases) {
        if (e.name == text) return e.label;
    }
    throw UnknownLabel("unknown state label '" + std::string(text) + "'");
}

Group label_group(StateLabel label) {
    return static_cast<int>(label) <= static_cast<int>(StateLabel::PhiMinus) ? Group::SU2 : Group::SU3;
}

std::span<const StateLabel> labels_of(Group group) {
    if (group == Group::SU2) return kBellLabels;
    return kQutritLabels;
}

std::string_view swap_symmetry_name(SwapSymmetry symmetry) {
    switch (symmetry) {
        case SwapSymmetry::Symmetric:
            return "symmetric";
        case SwapSymmetry::Antisymmetric:
            return "antisymmetric";
        default:
            return "neither";
    }
}

ExactVector vectorize(const ExactMatrix &m) {
    if (is_zero_matrix(m)) throw ZeroMatrix("vectorize: zero matrix");
    ExactVector out(m.rows() * m.cols());
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) out[i * m.cols() + j] = m(i, j);
    }
    auto norm = exact_sqrt(squared_norm(out).re());
    if (!norm) throw Error("vectorize: norm is not representable exactly");
    return ExactComplex(invert(*norm)) * out;
}

LabeledState bell_state(StateLabel label) {
    const ExactScalar r2 = invert(ExactScalar::sqrt2());
    switch (label) {
        case StateLabel::PhiPlus:
            return finish(label, kets(2, {{1, 0, 0}, {1, 1, 1}}, r2), 0);
        case StateLabel::PsiPlus:
            return finish(label, kets(2, {{1, 0, 1}, {1, 1, 0}}, r2), 1);
        case StateLabel::PsiMinus:
            return finish(label, kets(2, {{1, 0, 1}, {-1, 1, 0}}, r2), 2);
        case StateLabel::PhiMinus:
            return finish(label, kets(2, {{1, 0, 0}, {-1, 1, 1}}, r2), 3);
        default:
            throw UnknownLabel("'" + std::string(label_name(label)) + "' is not a Bell state");
    }
}

LabeledState qutrit_state(StateLabel label) {
    const ExactScalar r2 = invert(ExactScalar::sqrt2());
    const ExactScalar r3 = invert(ExactScalar::sqrt3());
    const ExactScalar r6 = invert(ExactScalar::sqrt6());
    switch (label) {
        case StateLabel::Psi00:
            return finish(label, kets(3, {{1, 0, 0}, {1, 1, 1}, {1, 2, 2}}, r3), 0);
        case StateLabel::Psi21Plus:
            return finish(label, kets(3, {{1, 2, 1}, {1, 1, 2}}, r2), 1);
        case StateLabel::Psi21Minus:
            return finish(label, kets(3, {{1, 2, 1}, {-1, 1, 2}}, r2), 2);
        case StateLabel::Psi11:
            return finish(label, kets(3, {{-1, 1, 1}, {1, 2, 2}}, r2), 3);
        case StateLabel::Psi20Plus:
            return finish(label, kets(3, {{1, 2, 0}, {1, 0, 2}}, r2), 4);
        case StateLabel::Psi20Minus:
            return finish(label, kets(3, {{1, 2, 0}, {-1, 0, 2}}, r2), 5);
        case StateLabel::Psi10Plus:
            return finish(label, kets(3, {{1, 1, 0}, {1, 0, 1}}, r2), 6);
        case StateLabel::Psi10Minus:
            return finish(label, kets(3, {{1, 1, 0}, {-1, 0, 1}}, r2), 7);
        case StateLabel::Psi22:
            return finish(label, kets(3, {{-2, 0, 0}, {1, 1, 1}, {1, 2, 2}}, r6), 8);
        default:
            throw UnknownLabel("'" + std::string(label_name(label)) + "' is not a qutrit state");
    }
}

LabeledState labeled_state(StateLabel label) {
    return label_group(label) == Group::SU2 ? bell_state(label) : qutrit_state(label);
}

std::vector<LabeledState> states_of(Group group) {
    std::vector<LabeledState> out;
    for (StateLabel label : labels_of(group)) out.push_back(labeled_state(label));
    return out;
}

SwapSymmetry swap_class(const ExactVector &s, Dims dims) {
    if (s.dim() != dims.total()) throw DimensionMismatch("swap_class: vector is not dA*dB dimensional");
    std::vector<const ExactComplex *> support;
    for (const auto &amp : s.amplitudes()) {
        if (!amp.is_zero()) support.push_back(&amp);
    }
    bool all_equal = true;
    for (const auto *amp : support) all_equal = all_equal && *amp == *support.front();
    if (all_equal) return SwapSymmetry::Symmetric;
    if (support.size() == 2 && *support[0] == -*support[1]) return SwapSymmetry::Antisymmetric;
    return SwapSymmetry::Neither;
}

SwapSymmetry particle_swap_class(const ExactVector &s, Dims dims) {
    if (s.dim() != dims.total() || dims.a != dims.b) {
        throw DimensionMismatch("particle_swap_class: needs a d x d bipartite vector");
    }
    ExactVector swapped = swap_operator<ExactComplex>(dims.a) * s;
    if (swapped == s) return SwapSymmetry::Symmetric;
    if (swapped == ExactComplex(-1) * s) return SwapSymmetry::Antisymmetric;
    return SwapSymmetry::Neither;
}

bool purity_check(const ExactVector &s) {
    ExactMatrix rho = outer(s, s);
    return rho * rho == rho;
}

ExactScalar AmplitudeSet::squared_norm() const {
    ExactScalar out;
    for (const auto &v : values) out += v.norm_squared();
    return out;
}

AmplitudeSet to_su3_basis(const AmplitudeSet &c) {
    if (c.basis != AmplitudeBasis::Computational) throw ParseError("to_su3_basis expects computational amplitudes");
    if (c.squared_norm() != ExactScalar(1)) throw NotNormalized("to_su3_basis: amplitudes are not normalized");
    ExactVector psi(std::vector<ExactComplex>(c.values.begin(), c.values.end()));
    AmplitudeSet out{AmplitudeBasis::SU3, {}};
    for (size_t k = 0; k < kQutritLabels.size(); ++k) {
        out.values[k] = inner(qutrit_basis()[k].vector, psi);
    }
    return out;
}

AmplitudeSet from_su3_basis(const AmplitudeSet &b) {
    if (b.basis != AmplitudeBasis::SU3) throw ParseError("from_su3_basis expects SU(3) amplitudes");
    if (b.squared_norm() != ExactScalar(1)) throw NotNormalized("from_su3_basis: amplitudes are not normalized");
    ExactVector psi(9);
    for (size_t k = 0; k < kQutritLabels.size(); ++k) {
        if (b.values[k].is_zero()) continue;
        psi += b.values[k] * qutrit_basis()[k].vector;
    }
    AmplitudeSet out{AmplitudeBasis::Computational, {}};
    for (size_t k = 0; k < 9; ++k) out.values[k] = psi[k];
    return out;
}

}  // namespace qutrit
