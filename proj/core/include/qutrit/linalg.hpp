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

#ifndef QUTRIT_LINALG_HPP
#define QUTRIT_LINALG_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qutrit/error.hpp"
#include "qutrit/exact.hpp"

namespace qutrit {

using FloatComplex = std::complex<double>;

enum class Mode { Exact, Float };

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<ExactComplex> {
    static constexpr Mode mode = Mode::Exact;
    static bool is_zero(const ExactComplex &z) { return z.is_zero(); }
    static ExactComplex conj(const ExactComplex &z) { return z.conj(); }
};

template <>
struct ScalarTraits<FloatComplex> {
    static constexpr Mode mode = Mode::Float;
    static bool is_zero(const FloatComplex &z) { return z == 0.0; }
    static FloatComplex conj(const FloatComplex &z) { return std::conj(z); }
};

std::string_view mode_name(Mode mode);

/// Dense row-major matrix. The scalar type fixes the mode for every entry.
template <class T>
class Matrix {
   public:
    using value_type = T;
    static constexpr Mode mode = ScalarTraits<T>::mode;

    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    Matrix(size_t rows, size_t cols, std::vector<T> entries) : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_) throw DimensionMismatch("entry count does not match shape");
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()) {
        cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
        entries_.reserve(rows_ * cols_);
        for (const auto &row : rows) {
            if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(size_t n) {
        Matrix out(n, n);
        for (size_t k = 0; k < n; ++k) out(k, k) = T(1);
        return out;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    std::span<const T> entries() const { return entries_; }

    T &operator()(size_t i, size_t j) { return entries_[i * cols_ + j]; }
    const T &operator()(size_t i, size_t j) const { return entries_[i * cols_ + j]; }

    Matrix &operator+=(const Matrix &other) {
        require_same_shape(other);
        for (size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
        return *this;
    }
    Matrix &operator-=(const Matrix &other) {
        require_same_shape(other);
        for (size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
        return *this;
    }
    Matrix &operator*=(const T &scalar) {
        for (auto &e : entries_) e *= scalar;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T &s) { return a *= s; }
    friend Matrix operator*(const T &s, Matrix a) { return a *= s; }
    friend Matrix operator-(Matrix a) {
        for (auto &e : a.entries_) e = -e;
        return a;
    }

    friend Matrix operator*(const Matrix &a, const Matrix &b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i) {
            for (size_t k = 0; k < a.cols_; ++k) {
                const T &aik = a(i, k);
                if (ScalarTraits<T>::is_zero(aik)) continue;
                for (size_t j = 0; j < b.cols_; ++j) {
                    if (ScalarTraits<T>::is_zero(b(k, j))) continue;
                    out(i, j) += aik * b(k, j);
                }
            }
        }
        return out;
    }

    friend bool operator==(const Matrix &a, const Matrix &b) = default;

   private:
    void require_same_shape(const Matrix &other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix shape mismatch");
    }

    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<T> entries_;
};

/// Dense state vector. Normalization is a property of the amplitudes, queried with is_normalized().
template <class T>
class StateVector {
   public:
    using value_type = T;
    static constexpr Mode mode = ScalarTraits<T>::mode;

    StateVector() = default;
    explicit StateVector(size_t dim) : amplitudes_(dim) {}
    explicit StateVector(std::vector<T> amplitudes) : amplitudes_(std::move(amplitudes)) {}
    StateVector(std::initializer_list<T> amplitudes) : amplitudes_(amplitudes) {}

    static StateVector basis(size_t dim, size_t index) {
        StateVector out(dim);
        out[index] = T(1);
        return out;
    }

    size_t dim() const { return amplitudes_.size(); }
    std::span<const T> amplitudes() const { return amplitudes_; }
    T &operator[](size_t k) { return amplitudes_[k]; }
    const T &operator[](size_t k) const { return amplitudes_[k]; }

    StateVector &operator+=(const StateVector &other) {
        if (dim() != other.dim()) throw DimensionMismatch("vector dimension mismatch");
        for (size_t k = 0; k < dim(); ++k) amplitudes_[k] += other.amplitudes_[k];
        return *this;
    }
    StateVector &operator*=(const T &scalar) {
        for (auto &a : amplitudes_) a *= scalar;
        return *this;
    }
    friend StateVector operator+(StateVector a, const StateVector &b) { return a += b; }
    friend StateVector operator*(const T &s, StateVector v) { return v *= s; }
    friend bool operator==(const StateVector &a, const StateVector &b) = default;

   private:
    std::vector<T> amplitudes_;
};

using ExactMatrix = Matrix<ExactComplex>;
using FloatMatrix = Matrix<FloatComplex>;
using ExactVector = StateVector<ExactComplex>;
using FloatVector = StateVector<FloatComplex>;

enum class Subsystem { A, B };

/// Bipartite dimensions (dA, dB). Composite index of |ij> is i*dB + j.
struct Dims {
    size_t a = 0;
    size_t b = 0;
    size_t total() const { return a * b; }
    friend bool operator==(const Dims &, const Dims &) = default;
};

template <class T>
Matrix<T> kron(const Matrix<T> &a, const Matrix<T> &b) {
    Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) {
            const T &aij = a(i, j);
            if (ScalarTraits<T>::is_zero(aij)) continue;
            for (size_t k = 0; k < b.rows(); ++k) {
                for (size_t l = 0; l < b.cols(); ++l) {
                    if (ScalarTraits<T>::is_zero(b(k, l))) continue;
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

template <class T>
StateVector<T> kron(const StateVector<T> &u, const StateVector<T> &v) {
    StateVector<T> out(u.dim() * v.dim());
    for (size_t i = 0; i < u.dim(); ++i) {
        for (size_t j = 0; j < v.dim(); ++j) out[i * v.dim() + j] = u[i] * v[j];
    }
    return out;
}

/// u v^dagger.
template <class T>
Matrix<T> outer(const StateVector<T> &u, const StateVector<T> &v) {
    Matrix<T> out(u.dim(), v.dim());
    for (size_t i = 0; i < u.dim(); ++i) {
        if (ScalarTraits<T>::is_zero(u[i])) continue;
        for (size_t j = 0; j < v.dim(); ++j) {
            if (ScalarTraits<T>::is_zero(v[j])) continue;
            out(i, j) = u[i] * ScalarTraits<T>::conj(v[j]);
        }
    }
    return out;
}

/// <u|v>, conjugate-linear in u.
template <class T>
T inner(const StateVector<T> &u, const StateVector<T> &v) {
    if (u.dim() != v.dim()) throw DimensionMismatch("inner product dimension mismatch");
    T out{};
    for (size_t k = 0; k < u.dim(); ++k) {
        if (ScalarTraits<T>::is_zero(u[k]) || ScalarTraits<T>::is_zero(v[k])) continue;
        out += ScalarTraits<T>::conj(u[k]) * v[k];
    }
    return out;
}

template <class T>
StateVector<T> operator*(const Matrix<T> &m, const StateVector<T> &v) {
    if (m.cols() != v.dim()) throw DimensionMismatch("mat-vec dimension mismatch");
    StateVector<T> out(m.rows());
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) {
            if (ScalarTraits<T>::is_zero(m(i, j)) || ScalarTraits<T>::is_zero(v[j])) continue;
            out[i] += m(i, j) * v[j];
        }
    }
    return out;
}

template <class T>
Matrix<T> adjoint(const Matrix<T> &m) {
    Matrix<T> out(m.cols(), m.rows());
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) out(j, i) = ScalarTraits<T>::conj(m(i, j));
    }
    return out;
}

template <class T>
T trace(const Matrix<T> &m) {
    if (!m.is_square()) throw DimensionMismatch("trace of non-square matrix");
    T out{};
    for (size_t k = 0; k < m.rows(); ++k) out += m(k, k);
    return out;
}

/// Tr[a b] without forming the product.
template <class T>
T trace_product(const Matrix<T> &a, const Matrix<T> &b) {
    if (a.cols() != b.rows() || a.rows() != b.cols()) throw DimensionMismatch("trace_product shape mismatch");
    T out{};
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t k = 0; k < a.cols(); ++k) {
            if (ScalarTraits<T>::is_zero(a(i, k)) || ScalarTraits<T>::is_zero(b(k, i))) continue;
            out += a(i, k) * b(k, i);
        }
    }
    return out;
}

template <class T>
bool is_hermitian(const Matrix<T> &m) {
    if (!m.is_square()) return false;
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = i; j < m.cols(); ++j) {
            if (!(m(i, j) == ScalarTraits<T>::conj(m(j, i)))) return false;
        }
    }
    return true;
}

template <class T>
bool is_zero_matrix(const Matrix<T> &m) {
    for (const auto &e : m.entries()) {
        if (!ScalarTraits<T>::is_zero(e)) return false;
    }
    return true;
}

/// Gram matrix G[i][j] = <u_i|u_j>.
template <class T>
Matrix<T> gram_matrix(std::span<const StateVector<T>> vectors) {
    Matrix<T> out(vectors.size(), vectors.size());
    for (size_t i = 0; i < vectors.size(); ++i) {
        for (size_t j = 0; j < vectors.size(); ++j) out(i, j) = inner(vectors[i], vectors[j]);
    }
    return out;
}

/// Reduced operator on the kept subsystem; Tr[result] = Tr[rho].
template <class T>
Matrix<T> partial_trace(const Matrix<T> &rho, Subsystem keep, Dims dims) {
    if (!rho.is_square() || rho.rows() != dims.total()) {
        throw DimensionMismatch("partial_trace: operator is not (dA*dB) square");
    }
    size_t keep_dim = keep == Subsystem::A ? dims.a : dims.b;
    size_t traced_dim = keep == Subsystem::A ? dims.b : dims.a;
    auto index = [&](size_t kept, size_t traced) {
        return keep == Subsystem::A ? kept * dims.b + traced : traced * dims.b + kept;
    };
    Matrix<T> out(keep_dim, keep_dim);
    for (size_t i = 0; i < keep_dim; ++i) {
        for (size_t j = 0; j < keep_dim; ++j) {
            for (size_t t = 0; t < traced_dim; ++t) out(i, j) += rho(index(i, t), index(j, t));
        }
    }
    return out;
}

/// SWAP on C^d (x) C^d: |ij> -> |ji>.
template <class T>
Matrix<T> swap_operator(size_t d) {
    Matrix<T> out(d * d, d * d);
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < d; ++j) out(j * d + i, i * d + j) = T(1);
    }
    return out;
}

ExactComplex squared_norm(const ExactVector &v);
bool is_normalized(const ExactVector &v);
bool is_normalized(const FloatVector &v, double tol = 1e-12);

FloatComplex to_float(const ExactComplex &z);
FloatMatrix to_float(const ExactMatrix &m);
FloatVector to_float(const ExactVector &v);

/// Max-norm distance.
double max_abs_diff(const FloatMatrix &a, const FloatMatrix &b);
double max_abs_diff(const FloatVector &a, const FloatVector &b);

struct HermitianEigen {
    std::vector<double> values;  // descending
    FloatMatrix vectors;         // column k pairs with values[k]
};

/**
 * Cyclic Jacobi diagonalization of a complex Hermitian matrix.
 *
 * Throws NotHermitian if |M - M^dagger| exceeds 1e-12 anywhere.
 */
HermitianEigen eig_hermitian(const FloatMatrix &m);

}  // namespace qutrit

#endif  // QUTRIT_LINALG_HPP
