// Copyright 2026 The qindep Authors
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

#ifndef QINDEP_LINALG_H
#define QINDEP_LINALG_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qindep {

using Complex = std::complex<double>;

/// Euclidean tolerance for comparing unit-norm states.
inline constexpr double kStateTolerance = 1e-12;
/// Entrywise tolerance on A^dagger A - I.
inline constexpr double kUnitaryTolerance = 1e-10;
/// Largest row or column count a dense matrix operation will produce.
inline constexpr std::size_t kDefaultMaxMatrixDim = std::size_t{1} << 12;

/// Dense complex vector. Used both for quantum states and scratch vectors;
/// unit norm is checked by the operations that require it, not here.
class DenseVector {
   public:
    DenseVector() = default;
    explicit DenseVector(std::size_t dim);
    explicit DenseVector(std::vector<Complex> amplitudes);

    static DenseVector basis(std::size_t dim, std::size_t index);

    std::size_t dim() const noexcept {
        return amps_.size();
    }
    Complex operator[](std::size_t i) const {
        return amps_[i];
    }
    Complex &operator[](std::size_t i) {
        return amps_[i];
    }
    std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    std::span<Complex> amplitudes() noexcept {
        return amps_;
    }

    double norm() const;

    bool operator==(const DenseVector &other) const = default;

   private:
    std::vector<Complex> amps_;
};

/// Dense complex matrix in row-major order.
class DenseMatrix {
   public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols);
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    std::size_t rows() const noexcept {
        return rows_;
    }
    std::size_t cols() const noexcept {
        return cols_;
    }
    bool is_square() const noexcept {
        return rows_ == cols_;
    }
    Complex operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    Complex &operator()(std::size_t r, std::size_t c) {
        return entries_[r * cols_ + c];
    }
    std::span<const Complex> entries() const noexcept {
        return entries_;
    }

    bool operator==(const DenseMatrix &other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b);

/// Kronecker product. Throws ResourceError if either result dimension exceeds max_dim.
DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b, std::size_t max_dim = kDefaultMaxMatrixDim);
/// Tensor product of two vectors; `a` occupies the more significant index digits.
DenseVector kron(const DenseVector &a, const DenseVector &b);

DenseMatrix adjoint(const DenseMatrix &a);

/// Largest entrywise magnitude of A^dagger A - I. Requires a square matrix.
double unitarity_residual(const DenseMatrix &a);
bool is_unitary(const DenseMatrix &a, double tol = kUnitaryTolerance);

DenseVector apply(const DenseMatrix &a, const DenseVector &v);

/// <a|b>, conjugate-linear in the first argument.
Complex inner(const DenseVector &a, const DenseVector &b);
/// |<a|b>|^2.
double fidelity(const DenseVector &a, const DenseVector &b);
/// min over theta of ||a - e^{i theta} b||.
double phase_aligned_distance(const DenseVector &a, const DenseVector &b);
double distance(const DenseVector &a, const DenseVector &b);
double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b);

}  // namespace qindep

#endif
