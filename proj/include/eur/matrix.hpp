// Copyright 2026 The eur Authors
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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace eur {

using complex = std::complex<double>;

/// Thrown when operand shapes do not fit an operation.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Dense row-major complex matrix for the small fixed dimensions used in
/// two- and three-qubit work. All entries are required to be finite.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<complex> entries);
    /// Row-by-row literal, e.g. `{{1, 0}, {0, 1}}`.
    ComplexMatrix(std::initializer_list<std::initializer_list<complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
    static ComplexMatrix diagonal(std::span<const double> values);
    /// |u><v|
    static ComplexMatrix outer(std::span<const complex> u, std::span<const complex> v);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const complex> entries() const noexcept { return data_; }
    std::span<complex> entries() noexcept { return data_; }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(complex scale);

    bool operator==(const ComplexMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, complex scale);
ComplexMatrix operator*(complex scale, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<complex> operator*(const ComplexMatrix& a, std::span<const complex> v);

ComplexMatrix adjoint(const ComplexMatrix& m);
complex trace(const ComplexMatrix& m);

/// Kronecker product. Composite index is `i_a * b.rows() + i_b`, so `a` is
/// the most significant factor.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Traces out every subsystem not listed in `keep`. `dims` lists the
/// subsystem dimensions, most significant first; `keep` holds subsystem
/// indices into `dims` and the result orders them as they appear in `dims`.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> keep,
                            std::span<const std::size_t> dims);

/// max |a_ij - b_ij|; shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = 1e-10);

struct HermitianEigenSystem {
    std::vector<double> eigenvalues;            // ascending
    std::vector<std::vector<complex>> eigenvectors;  // eigenvectors[k] pairs with eigenvalues[k]
};

/// Cyclic complex Jacobi diagonalization. The input must be Hermitian within
/// 1e-10 (max-entry norm of M - M^dagger); it is symmetrized as (M + M^dagger)/2
/// before iterating. Iterates until the off-diagonal Frobenius norm is below
/// 1e-12.
HermitianEigenSystem hermitian_eigensystem(const ComplexMatrix& m);

/// Eigenvalues only, ascending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

namespace pauli {
ComplexMatrix i2();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

}  // namespace eur
