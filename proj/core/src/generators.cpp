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

#include "qutrit/generators.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "qutrit/error.hpp"

namespace qutrit {

namespace {

// |i><j| on C^d.
ExactMatrix ket_bra(size_t d, size_t i, size_t j) {
    ExactMatrix out(d, d);
    out(i, j) = 1;
    return out;
}

GeneratorSet build_set(Group group) {
    GeneratorSet set{group, {}, {}};
    int count = group == Group::SU2 ? 4 : 9;
    for (int k = 0; k < count; ++k) {
        set.elements.push_back(group == Group::SU2 ? pauli(k) : gellmann(k));
        ExactComplex norm = trace_product(set.elements.back(), set.elements.back());
        set.hs_norms.push_back(norm.re());
    }
    return set;
}

}  // namespace

std::string_view group_name(Group group) { return group == Group::SU2 ? "su2" : "su3"; }

Group parse_group(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (lower == "su2") return Group::SU2;
    if (lower == "su3") return Group::SU3;
    throw ParseError("unknown group '" + std::string(text) + "' (expected su2 or su3)");
}

size_t local_dim(Group group) { return group == Group::SU2 ? 2 : 3; }

ExactMatrix pauli(int index) {
    const ExactComplex i = ExactComplex::i();
    switch (index) {
        case 0:
            return ExactMatrix::identity(2);
        case 1:
            return {{0, 1}, {1, 0}};
        case 2:
            return {{0, -i}, {i, 0}};
        case 3:
            return {{1, 0}, {0, -1}};
        default:
            throw IndexOutOfRange("pauli index " + std::to_string(index) + " outside 0..3");
    }
}

ExactMatrix gellmann(int index) {
    const ExactComplex i = ExactComplex::i();
    auto kb = [](size_t r, size_t c) { return ket_bra(3, r, c); };
    switch (index) {
        case 0:
            return kb(0, 0) + kb(1, 1) + kb(2, 2);
        case 1:
            return kb(0, 1) + kb(1, 0);
        case 2:
            return i * (kb(1, 0) - kb(0, 1));
        case 3:
            return kb(0, 0) - kb(1, 1);
        case 4:
            return kb(0, 2) + kb(2, 0);
        case 5:
            return i * (kb(2, 0) - kb(0, 2));
        case 6:
            return kb(1, 2) + kb(2, 1);
        case 7:
            return i * (kb(2, 1) - kb(1, 2));
        case 8:
            return invert(ExactScalar::sqrt3()) * (kb(0, 0) + kb(1, 1) - ExactComplex(2) * kb(2, 2));
        default:
            throw IndexOutOfRange("gellmann index " + std::to_string(index) + " outside 0..8");
    }
}

const GeneratorSet &generator_set(Group group) {
    static const GeneratorSet su2 = build_set(Group::SU2);
    static const GeneratorSet su3 = build_set(Group::SU3);
    return group == Group::SU2 ? su2 : su3;
}

size_t StructureConstants::flat(int l, int m, int n) {
    if (l < 1 || l > 8 || m < 1 || m > 8 || n < 1 || n > 8) {
        throw IndexOutOfRange("structure constant index outside 1..8");
    }
    return static_cast<size_t>(((l - 1) * 8 + (m - 1)) * 8 + (n - 1));
}

StructureConstants compute_structure_constants() {
    const auto &gm = generator_set(Group::SU3).elements;
    const ExactComplex four_i(0, 4);
    StructureConstants out;
    for (int l = 1; l <= 8; ++l) {
        for (int m = 1; m <= 8; ++m) {
            ExactMatrix ab = gm[l] * gm[m];
            ExactMatrix ba = gm[m] * gm[l];
            ExactMatrix commutator = ab - ba;
            ExactMatrix anticommutator = ab + ba;
            for (int n = 1; n <= 8; ++n) {
                ExactComplex f = trace_product(commutator, gm[n]) / four_i;
                ExactComplex d = trace_product(anticommutator, gm[n]) / ExactComplex(4);
                if (!f.is_real() || !d.is_real()) throw Error("structure constant is not real");
                size_t k = StructureConstants::flat(l, m, n);
                out.f_[k] = f.re();
                out.d_[k] = d.re();
            }
        }
    }
    return out;
}

const StructureConstants &structure_constants() {
    static const StructureConstants constants = compute_structure_constants();
    return constants;
}

ProductExpansion product_expand(int l, int m) {
    if (l < 1 || l > 8 || m < 1 || m > 8) throw IndexOutOfRange("product_expand index outside 1..8");
    const auto &set = generator_set(Group::SU3);
    ExactMatrix product = set.elements[l] * set.elements[m];
    ProductExpansion out;
    out.identity_coefficient = trace(product) / ExactComplex(set.hs_norms[0]);
    for (int n = 1; n <= 8; ++n) {
        out.coefficients[n - 1] = trace_product(product, set.elements[n]) / ExactComplex(set.hs_norms[n]);
    }
    return out;
}

std::vector<GeneratorCoefficients::Term> GeneratorCoefficients::nonzero_terms() const {
    std::vector<Term> out;
    for (size_t l = 0; l < size_; ++l) {
        for (size_t m = 0; m < size_; ++m) {
            if (!(*this)(l, m).is_zero()) out.push_back({l, m, (*this)(l, m)});
        }
    }
    return out;
}

GeneratorCoefficients hs_project(const ExactMatrix &m, Group group) {
    const size_t d = local_dim(group);
    if (m.rows() != d * d || m.cols() != d * d) {
        throw DimensionMismatch("hs_project: expected a " + std::to_string(d * d) + "x" + std::to_string(d * d) +
                                " operator");
    }
    const auto &set = generator_set(group);
    GeneratorCoefficients out(group, set.size());
    for (size_t l = 0; l < set.size(); ++l) {
        for (size_t k = 0; k < set.size(); ++k) {
            ExactComplex t = trace_product(kron(set.elements[l], set.elements[k]), m);
            if (t.is_zero()) continue;
            out(l, k) = t / ExactComplex(set.hs_norms[l] * set.hs_norms[k]);
        }
    }
    return out;
}

ExactMatrix reconstruct(const GeneratorCoefficients &coefficients) {
    const auto &set = generator_set(coefficients.group());
    const size_t d = local_dim(coefficients.group());
    ExactMatrix out(d * d, d * d);
    for (const auto &term : coefficients.nonzero_terms()) {
        out += term.coefficient * kron(set.elements[term.l], set.elements[term.m]);
    }
    return out;
}

}  // namespace qutrit
