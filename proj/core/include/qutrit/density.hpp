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

#ifndef QUTRIT_DENSITY_HPP
#define QUTRIT_DENSITY_HPP

#include "qutrit/exact.hpp"
#include "qutrit/linalg.hpp"

namespace qutrit {

/// Exact density operator with its tensor-factor dimensions (b == 1 for a single system).
class DensityMatrix {
   public:
    /// Validates Hermiticity and unit trace exactly. Positivity is checked by entropy().
    DensityMatrix(ExactMatrix matrix, Dims dims);

    const ExactMatrix &matrix() const { return matrix_; }
    Dims dims() const { return dims_; }
    bool is_bipartite() const { return dims_.a > 1 && dims_.b > 1; }

   private:
    ExactMatrix matrix_;
    Dims dims_;
};

/// |s><s| for a normalized s. Throws NotNormalized.
DensityMatrix density_of(const ExactVector &s, Dims dims);
/// Single-system overload, dims = (dim, 1).
/// Dims d x d when s.dim() == d^2 for some d > 1, otherwise a single factor.
DensityMatrix density_of(const ExactVector &s);

/// Exact partial trace keeping one factor.
DensityMatrix reduce(const DensityMatrix &rho, Subsystem keep);

/// Tr[rho^2].
ExactScalar purity(const DensityMatrix &rho);

/// -sum w log2 w over float eigenvalues, 0 log 0 = 0. Throws NegativeEigenvalue below -1e-10.
double entropy(const DensityMatrix &rho);

/// Float eigenvalues, descending.
std::vector<double> spectrum(const DensityMatrix &rho);

}  // namespace qutrit

#endif  // QUTRIT_DENSITY_HPP
