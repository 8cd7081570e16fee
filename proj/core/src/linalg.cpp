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

#include "qutrit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qutrit {

std::string_view mode_name(Mode mode) { return mode == Mode::Exact ? "exact" : "float"; }

ExactComplex squared_norm(const ExactVector &v) { return inner(v, v); }

bool is_normalized(const ExactVector &v) { return squared_norm(v) == ExactComplex(1); }

bool is_normalized(const FloatVector &v, double tol) { return std::abs(inner(v, v).real() - 1.0) <= tol; }

FloatComplex to_float(const ExactComplex &z) { return {to_float(z.re()), to_float(z.im())}; }

FloatMatrix to_float(const ExactMatrix &m) {
    FloatMatrix out(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) out(i, j) = to_float(m(i, j));
    }
    return out;
}

FloatVector to_float(const ExactVector &v) {
    FloatVector out(v.dim());
    for (size_t k = 0; k < v.dim(); ++k) out[k] = to_float(v[k]);
    return out;
}

double max_abs_diff(const FloatMatrix &a, const FloatMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("max_abs_diff shape mismatch");
    double out = 0.0;
    for (size_t k = 0; k < a.entries().size(); ++k) out = std::max(out, std::abs(a.entries()[k] - b.entries()[k]));
    return out;
}

double max_abs_diff(const FloatVector &a, const FloatVector &b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("max_abs_diff dimension mismatch");
    double out = 0.0;
    for (size_t k = 0; k < a.dim(); ++k) out = std::max(out, std::abs(a[k] - b[k]));
    return out;
}

namespace {

double off_diagonal_norm(const FloatMatrix &a) {
    double sum = 0.0;
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) {
            if (i != j) sum += std::norm(a(i, j));
        }
    }
    return std::sqrt(sum);
}

// Right-multiply columns p,q of m by the 2x2 block [[u_pp, u_pq], [u_qp, u_qq]].
void rotate_columns(FloatMatrix &m, size_t p, size_t q, FloatComplex u_pp, FloatComplex u_pq, FloatComplex u_qp,
                    FloatComplex u_qq) {
    for (size_t k = 0; k < m.rows(); ++k) {
        FloatComplex mp = m(k, p);
        FloatComplex mq = m(k, q);
        m(k, p) = mp * u_pp + mq * u_qp;
        m(k, q) = mp * u_pq + mq * u_qq;
    }
}

// Left-multiply rows p,q of m by the adjoint of the same block.
void rotate_rows(FloatMatrix &m, size_t p, size_t q, FloatComplex u_pp, FloatComplex u_pq, FloatComplex u_qp,
                 FloatComplex u_qq) {
    for (size_t k = 0; k < m.cols(); ++k) {
        FloatComplex mp = m(p, k);
        FloatComplex mq = m(q, k);
        m(p, k) = std::conj(u_pp) * mp + std::conj(u_qp) * mq;
        m(q, k) = std::conj(u_pq) * mp + std::conj(u_qq) * mq;
    }
}

}  // namespace

HermitianEigen eig_hermitian(const FloatMatrix &m) {
    if (!m.is_square()) throw DimensionMismatch("eig_hermitian of non-square matrix");
    const size_t n = m.rows();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i; j < n; ++j) {
            if (std::abs(m(i, j) - std::conj(m(j, i))) > 1e-12) throw NotHermitian("eig_hermitian: input not Hermitian");
        }
    }

    FloatMatrix a = m;
    FloatMatrix v = FloatMatrix::identity(n);
    double scale = 0.0;
    for (const auto &e : a.entries()) scale = std::max(scale, std::abs(e));
    const double threshold = std::max(scale, 1.0) * 1e-15;

    for (int sweep = 0; sweep < 100 && off_diagonal_norm(a) > threshold; ++sweep) {
        for (size_t p = 0; p + 1 < n; ++p) {
            for (size_t q = p + 1; q < n; ++q) {
                double mag = std::abs(a(p, q));
                if (mag < 1e-300) continue;
                // Phase e^{i phi} of a_pq; the diagonal phase makes the pivot real, then a real
                // rotation annihilates it. Combined block U = diag(1, e^{-i phi}) * R.
                FloatComplex phase = a(p, q) / mag;
                double app = a(p, p).real();
                double aqq = a(q, q).real();
                double tau = (aqq - app) / (2.0 * mag);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                FloatComplex u_pp = c;
                FloatComplex u_pq = s;
                FloatComplex u_qp = -s * std::conj(phase);
                FloatComplex u_qq = c * std::conj(phase);
                rotate_columns(a, p, q, u_pp, u_pq, u_qp, u_qq);
                rotate_rows(a, p, q, u_pp, u_pq, u_qp, u_qq);
                rotate_columns(v, p, q, u_pp, u_pq, u_qp, u_qq);
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) { return a(x, x).real() > a(y, y).real(); });

    HermitianEigen out{std::vector<double>(n), FloatMatrix(n, n)};
    for (size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
    }
    return out;
}

}  // namespace qutrit
