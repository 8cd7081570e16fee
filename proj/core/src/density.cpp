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

#include "qutrit/error.hpp"

namespace qutrit {

DensityMatrix::DensityMatrix(ExactMatrix matrix, Dims dims) : matrix_(std::move(matrix)), dims_(dims) {
    if (!matrix_.is_square() || matrix_.rows() != dims_.total()) {
        throw DimensionMismatch("density matrix shape does not match its dims");
    }
    if (!is_hermitian(matrix_)) throw NotHermitian("density matrix is not Hermitian");
    if (trace(matrix_) != ExactComplex(1)) throw NotNormalized("density matrix trace is not 1");
}

DensityMatrix density_of(const ExactVector &s, Dims dims) {
    if (!is_normalized(s)) throw NotNormalized("density_of: state is not normalized");
    return {outer(s, s), dims};
}

DensityMatrix density_of(const ExactVector &s) {
    size_t d = 1;
    while ((d + 1) * (d + 1) <= s.dim()) ++d;
    return density_of(s, d > 1 && d * d == s.dim() ? Dims{d, d} : Dims{s.dim(), 1});
}

DensityMatrix reduce(const DensityMatrix &rho, Subsystem keep) {
    if (!rho.is_bipartite()) throw DimensionMismatch("reduce: density matrix is not bipartite");
    Dims dims = rho.dims();
    ExactMatrix reduced = partial_trace(rho.matrix(), keep, dims);
    size_t d = keep == Subsystem::A ? dims.a : dims.b;
    return {std::move(reduced), {d, 1}};
}

ExactScalar purity(const DensityMatrix &rho) {
    ExactComplex p = trace_product(rho.matrix(), rho.matrix());
    return p.re();
}

std::vector<double> spectrum(const DensityMatrix &rho) { return eig_hermitian(to_float(rho.matrix())).values; }

double entropy(const DensityMatrix &rho) {
    double out = 0.0;
    for (double w : spectrum(rho)) {
        if (w < -1e-10) throw NegativeEigenvalue("density matrix has eigenvalue " + std::to_string(w));
        if (w > 0.0) out -= w * std::log2(w);
    }
    return out;
}

}  // namespace qutrit
