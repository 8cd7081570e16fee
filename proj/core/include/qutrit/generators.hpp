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

#ifndef QUTRIT_GENERATORS_HPP
#define QUTRIT_GENERATORS_HPP

#include <array>
#include <string_view>
#include <vector>

#include "qutrit/exact.hpp"
#include "qutrit/linalg.hpp"

namespace qutrit {

enum class Group { SU2, SU3 };

std::string_view group_name(Group group);
/// Accepts "su2" / "su3" (case-insensitive). Throws ParseError.
Group parse_group(std::string_view text);
/// Local Hilbert-space dimension: 2 for SU(2), 3 for SU(3).
size_t local_dim(Group group);

/// sigma_0 = I2, sigma_1..sigma_3 the Pauli matrices.
ExactMatrix pauli(int index);

/// lambda_0 = I3 (unnormalized) and the eight Gell-Mann matrices written as ket-bra sums.
ExactMatrix gellmann(int index);

struct GeneratorSet {
    Group group;
    std::vector<ExactMatrix> elements;
    /// Tr[g_i^2], computed from the elements.
    std::vector<ExactScalar> hs_norms;

    size_t size() const { return elements.size(); }
};

/// Shared, immutable generator set for the group.
const GeneratorSet &generator_set(Group group);

/// d_lmn and f_lmn for l, m, n in 1..8, computed from the trace formulas
///   f_lmn = Tr([l, m] n) / (4i),   d_lmn = Tr({l, m} n) / 4.
class StructureConstants {
   public:
    const ExactScalar &f(int l, int m, int n) const { return f_[flat(l, m, n)]; }
    const ExactScalar &d(int l, int m, int n) const { return d_[flat(l, m, n)]; }

   private:
    friend StructureConstants compute_structure_constants();
    static size_t flat(int l, int m, int n);

    std::array<ExactScalar, 512> f_;
    std::array<ExactScalar, 512> d_;
};

StructureConstants compute_structure_constants();
const StructureConstants &structure_constants();

/// lambda_l lambda_m = s I + sum_n c_n lambda_n.
struct ProductExpansion {
    ExactComplex identity_coefficient;
    std::array<ExactComplex, 8> coefficients;  // index n-1 holds c_n

    const ExactComplex &coefficient(int n) const { return coefficients.at(static_cast<size_t>(n - 1)); }
};

/// Expansion by Hilbert-Schmidt projection; l, m in 1..8.
ProductExpansion product_expand(int l, int m);

/// Coefficients c[l][m] of an operator in the basis {g_l (x) g_m}.
class GeneratorCoefficients {
   public:
    GeneratorCoefficients(Group group, size_t size) : group_(group), size_(size), c_(size * size) {}

    Group group() const { return group_; }
    size_t size() const { return size_; }
    ExactComplex &operator()(size_t l, size_t m) { return c_[l * size_ + m]; }
    const ExactComplex &operator()(size_t l, size_t m) const { return c_[l * size_ + m]; }

    struct Term {
        size_t l;
        size_t m;
        ExactComplex coefficient;
    };
    /// Nonzero coefficients in (l, m) row-major order.
    std::vector<Term> nonzero_terms() const;

    friend bool operator==(const GeneratorCoefficients &, const GeneratorCoefficients &) = default;

   private:
    Group group_;
    size_t size_;
    std::vector<ExactComplex> c_;
};

/// c[l][m] = Tr[(g_l (x) g_m) M] / (N_l N_m). Throws DimensionMismatch unless M is d^2 x d^2.
GeneratorCoefficients hs_project(const ExactMatrix &m, Group group);

/// sum_{l,m} c[l][m] g_l (x) g_m.
ExactMatrix reconstruct(const GeneratorCoefficients &coefficients);

}  // namespace qutrit

#endif  // QUTRIT_GENERATORS_HPP
