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

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eur/matrix.hpp"

namespace eur {

/// A state, channel, or observable that fails its physical validity checks.
struct InvalidStateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Normalized state vector.
class PureState {
public:
    /// Throws InvalidStateError unless the 2-norm is 1 within 1e-12.
    explicit PureState(std::vector<complex> amplitudes);

    std::size_t dim() const noexcept { return amplitudes_.size(); }
    std::span<const complex> amplitudes() const noexcept { return amplitudes_; }
    const complex& operator[](std::size_t i) const { return amplitudes_[i]; }

    /// Computational basis vector |index>.
    static PureState basis(std::size_t dim, std::size_t index);

private:
    std::vector<complex> amplitudes_;
};

/// Hermitian, unit-trace, positive-semidefinite matrix of dimension 2, 4 or 8.
///
/// Every instance has passed validation: Hermitian within 1e-10, trace 1
/// within 1e-10, smallest eigenvalue at least -1e-10.
class DensityMatrix {
public:
    /// Validates `m`; throws InvalidStateError naming the failed check.
    explicit DensityMatrix(ComplexMatrix m);

    std::size_t dim() const noexcept { return mat_.rows(); }
    const ComplexMatrix& matrix() const& noexcept { return mat_; }
    ComplexMatrix matrix() && noexcept { return std::move(mat_); }
    const complex& operator()(std::size_t r, std::size_t c) const { return mat_(r, c); }

    /// Eigenvalues ascending, as computed during validation. On a temporary
    /// the values are returned by value so they cannot dangle.
    const std::vector<double>& eigenvalues() const& noexcept { return eigenvalues_; }
    std::vector<double> eigenvalues() && noexcept { return std::move(eigenvalues_); }

    static DensityMatrix maximally_mixed(std::size_t dim);

private:
    ComplexMatrix mat_;
    std::vector<double> eigenvalues_;
};

DensityMatrix from_pure(const PureState& v);

/// rho_A (x) rho_B
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state of one qubit of a two-qubit state. `subsystem` 0 is A, 1 is B.
DensityMatrix reduce_two_qubit(const DensityMatrix& rho_ab, std::size_t subsystem);

/// Two-qubit Bell-diagonal state 1/4 (I(x)I + sum_i r_i sigma_i (x) sigma_i).
/// Throws InvalidStateError if (r1, r2, r3) lies outside the tetrahedron of
/// valid states; the message names the Bell-basis weight that went negative.
DensityMatrix bell_diagonal_state(double r1, double r2, double r3);

/// p |psi-><psi-| + (1-p)/2 (|psi+><psi+| + |phi+><phi+|), i.e. the
/// Bell-diagonal state with r = (1-2p, -p, -p).
DensityMatrix bell_diagonal_p(double p);

/// p |psi+><psi+| + (1-p) |11><11| with |psi+> = (|01> + |10>)/sqrt(2).
DensityMatrix x_state(double p);

namespace bell {
PureState phi_plus();
PureState phi_minus();
PureState psi_plus();
PureState psi_minus();
}  // namespace bell

/// Accelerated-memory state  (1/sqrt2)[|0>(cos r|00> + sin r|11>) + |1>|10>]
/// on A (x) I (x) II, with r in [0, pi/4].
PureState rindler_tripartite_state(double r);

/// Von Neumann entropy in bits. Eigenvalues in [-1e-10, 0) count as zero.
double vn_entropy(const DensityMatrix& rho);

/// Shannon entropy in bits. Entries must be non-negative and sum to 1
/// within 1e-9.
double shannon_entropy(std::span<const double> p);

/// Binary entropy h(x) in bits.
double binary_entropy(double x);

}  // namespace eur
