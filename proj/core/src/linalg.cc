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

#include "qindep/linalg.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "qindep/errors.h"

namespace qindep {

namespace {

bool finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

void require_finite(std::span<const Complex> values, const char *what) {
    if (!std::all_of(values.begin(), values.end(), finite)) {
        throw InputError(std::string(what) + " contains a non-finite entry");
    }
}

}  // namespace

DenseVector::DenseVector(std::size_t dim) : amps_(dim) {
}

DenseVector::DenseVector(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
    require_finite(amps_, "vector");
}

DenseVector DenseVector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw InputError("basis index " + std::to_string(index) + " out of range for dimension " +
                         std::to_string(dim));
    }
    DenseVector v(dim);
    v.amps_[index] = 1.0;
    return v;
}

double DenseVector::norm() const {
    double sum = 0.0;
    for (const Complex &a : amps_) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw InputError("matrix entry count " + std::to_string(entries_.size()) + " does not match " +
                         std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    require_finite(entries_, "matrix");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<Complex> entries;
    entries.reserve(r * c);
    for (const auto &row : rows) {
        if (row.size() != c) {
            throw InputError("ragged matrix rows");
        }
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return DenseMatrix(r, c, std::move(entries));
}

DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.cols() != b.rows()) {
        throw InputError("matrix product dimension mismatch: " + std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()));
    }
    DenseMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b, std::size_t max_dim) {
    auto checked = [max_dim](std::size_t x, std::size_t y) {
        if (x != 0 && y > max_dim / x) {
            std::string requested = y <= SIZE_MAX / x ? std::to_string(x * y)
                                                      : std::to_string(x) + "*" + std::to_string(y);
            throw ResourceError("kron result dimension " + requested + " exceeds maximum " + std::to_string(max_dim));
        }
        return x * y;
    };
    std::size_t rows = checked(a.rows(), b.rows());
    std::size_t cols = checked(a.cols(), b.cols());
    DenseMatrix out(rows, cols);
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            Complex s = a(ar, ac);
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
                }
            }
        }
    }
    return out;
}

DenseVector kron(const DenseVector &a, const DenseVector &b) {
    std::vector<Complex> out;
    out.reserve(a.dim() * b.dim());
    for (Complex x : a.amplitudes()) {
        for (Complex y : b.amplitudes()) {
            out.push_back(x * y);
        }
    }
    return DenseVector(std::move(out));
}

DenseMatrix adjoint(const DenseMatrix &a) {
    DenseMatrix out(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(c, r) = std::conj(a(r, c));
        }
    }
    return out;
}

double unitarity_residual(const DenseMatrix &a) {
    if (!a.is_square()) {
        throw InputError("unitarity check needs a square matrix, got " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()));
    }
    std::size_t n = a.rows();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // (A^dagger A)_{ij} = sum_k conj(A_{ki}) A_{kj}
            Complex s{};
            for (std::size_t k = 0; k < n; ++k) {
                s += std::conj(a(k, i)) * a(k, j);
            }
            if (i == j) {
                s -= 1.0;
            }
            worst = std::max(worst, std::abs(s));
        }
    }
    return worst;
}

bool is_unitary(const DenseMatrix &a, double tol) {
    return unitarity_residual(a) <= tol;
}

DenseVector apply(const DenseMatrix &a, const DenseVector &v) {
    if (a.cols() != v.dim()) {
        throw InputError("cannot apply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " matrix to vector of dimension " + std::to_string(v.dim()));
    }
    std::vector<Complex> out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Complex s{};
        for (std::size_t c = 0; c < a.cols(); ++c) {
            s += a(r, c) * v[c];
        }
        out[r] = s;
    }
    return DenseVector(std::move(out));
}

Complex inner(const DenseVector &a, const DenseVector &b) {
    if (a.dim() != b.dim()) {
        throw InputError("inner product dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
    }
    Complex s{};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

double fidelity(const DenseVector &a, const DenseVector &b) {
    return std::norm(inner(a, b));
}

double distance(const DenseVector &a, const DenseVector &b) {
    if (a.dim() != b.dim()) {
        throw InputError("distance dimension mismatch");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        sum += std::norm(a[i] - b[i]);
    }
    return std::sqrt(sum);
}

double phase_aligned_distance(const DenseVector &a, const DenseVector &b) {
    Complex overlap = inner(b, a);
    double mag = std::abs(overlap);
    Complex phase = mag > 0.0 ? overlap / mag : Complex{1.0};
    double sum = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        sum += std::norm(a[i] - phase * b[i]);
    }
    return std::sqrt(sum);
}

double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InputError("matrix comparison dimension mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

}  // namespace qindep
