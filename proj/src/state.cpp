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

#include "eur/state.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

namespace eur {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kStateTol = 1e-10;
constexpr double kProbabilityTol = 1e-9;

std::string fmt_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

void require_probability(double p, const char* who) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InvalidStateError(std::string(who) + ": p = " + fmt_value(p) + " is outside [0, 1]");
    }
}

}  // namespace

PureState::PureState(std::vector<complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) throw InvalidStateError("PureState: empty amplitude vector");
    double norm2 = 0.0;
    for (const auto& a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw InvalidStateError("PureState: non-finite amplitude");
        }
        norm2 += std::norm(a);
    }
    if (std::abs(std::sqrt(norm2) - 1.0) > kNormTol) {
        throw InvalidStateError("PureState: norm " + std::to_string(std::sqrt(norm2)) + " is not 1");
    }
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) throw DimensionError("PureState::basis: index out of range");
    std::vector<complex> v(dim);
    v[index] = 1.0;
    return PureState(std::move(v));
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {
    const std::size_t d = mat_.rows();
    if (!mat_.is_square() || (d != 2 && d != 4 && d != 8)) {
        throw InvalidStateError("DensityMatrix: dimension must be 2, 4 or 8 (got " + std::to_string(mat_.rows()) +
                                "x" + std::to_string(mat_.cols()) + ")");
    }
    if (!is_hermitian(mat_, kStateTol)) throw InvalidStateError("DensityMatrix: not Hermitian within 1e-10");
    const complex tr = trace(mat_);
    if (std::abs(tr - 1.0) > kStateTol) {
        throw InvalidStateError("DensityMatrix: trace " + std::to_string(tr.real()) + " is not 1");
    }
    eigenvalues_ = hermitian_eigenvalues(mat_);
    if (eigenvalues_.front() < -kStateTol) {
        throw InvalidStateError("DensityMatrix: negative eigenvalue " + fmt_value(eigenvalues_.front()));
    }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    return DensityMatrix(ComplexMatrix::identity(dim) * complex(1.0 / static_cast<double>(dim)));
}

DensityMatrix from_pure(const PureState& v) { return DensityMatrix(ComplexMatrix::outer(v.amplitudes(), v.amplitudes())); }

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
    return DensityMatrix(tensor(a.matrix(), b.matrix()));
}

DensityMatrix reduce_two_qubit(const DensityMatrix& rho_ab, std::size_t subsystem) {
    if (rho_ab.dim() != 4) throw DimensionError("reduce_two_qubit: expected a 4x4 state");
    if (subsystem > 1) throw DimensionError("reduce_two_qubit: subsystem must be 0 or 1");
    const std::array<std::size_t, 2> dims{2, 2};
    const std::array<std::size_t, 1> keep{subsystem};
    return DensityMatrix(partial_trace(rho_ab.matrix(), keep, dims));
}

DensityMatrix bell_diagonal_state(double r1, double r2, double r3) {
    // Weights on |phi+>, |phi->, |psi+>, |psi->.
    const std::array<std::pair<const char*, double>, 4> weights{{
        {"phi+", (1.0 + r1 - r2 + r3) / 4.0},
        {"phi-", (1.0 - r1 + r2 + r3) / 4.0},
        {"psi+", (1.0 + r1 + r2 - r3) / 4.0},
        {"psi-", (1.0 - r1 - r2 - r3) / 4.0},
    }};
    for (const auto& [name, w] : weights) {
        if (!std::isfinite(w) || w < -kStateTol) {
            throw InvalidStateError("bell_diagonal_state: (" + fmt_value(r1) + ", " + fmt_value(r2) + ", " +
                                    fmt_value(r3) + ") is outside the tetrahedron; weight on |" + name +
                                    "> is " + fmt_value(w));
        }
    }
    ComplexMatrix m = ComplexMatrix::identity(4);
    m += tensor(pauli::x(), pauli::x()) * complex(r1);
    m += tensor(pauli::y(), pauli::y()) * complex(r2);
    m += tensor(pauli::z(), pauli::z()) * complex(r3);
    m *= 0.25;
    return DensityMatrix(std::move(m));
}

DensityMatrix bell_diagonal_p(double p) {
    require_probability(p, "bell_diagonal_p");
    return bell_diagonal_state(1.0 - 2.0 * p, -p, -p);
}

DensityMatrix x_state(double p) {
    require_probability(p, "x_state");
    const auto psi = bell::psi_plus();
    ComplexMatrix m = ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes()) * complex(p);
    m(3, 3) += 1.0 - p;
    return DensityMatrix(std::move(m));
}

namespace bell {
PureState phi_plus() { return PureState({std::numbers::sqrt2 / 2, 0.0, 0.0, std::numbers::sqrt2 / 2}); }
PureState phi_minus() { return PureState({std::numbers::sqrt2 / 2, 0.0, 0.0, -std::numbers::sqrt2 / 2}); }
PureState psi_plus() { return PureState({0.0, std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2, 0.0}); }
PureState psi_minus() { return PureState({0.0, std::numbers::sqrt2 / 2, -std::numbers::sqrt2 / 2, 0.0}); }
}  // namespace bell

PureState rindler_tripartite_state(double r) {
    if (!(r >= 0.0 && r <= std::numbers::pi / 4)) {
        throw InvalidStateError("rindler_tripartite_state: r = " + fmt_value(r) + " is outside [0, pi/4]");
    }
    // Index = 4*a + 2*i + ii.
    const double h = std::numbers::sqrt2 / 2;
    std::vector<complex> v(8);
    v[0b000] = h * std::cos(r);
    v[0b011] = h * std::sin(r);
    v[0b110] = h;
    return PureState(std::move(v));
}

double vn_entropy(const DensityMatrix& rho) {
    double s = 0.0;
    for (double lambda : rho.eigenvalues()) {
        if (lambda < -kStateTol) throw InvalidStateError("vn_entropy: negative eigenvalue " + fmt_value(lambda));
        lambda = std::clamp(lambda, 0.0, 1.0);
        if (lambda > 0.0) s -= lambda * std::log2(lambda);
    }
    return s;
}

double shannon_entropy(std::span<const double> p) {
    double total = 0.0;
    double s = 0.0;
    for (double x : p) {
        if (!(x >= 0.0)) throw InvalidStateError("shannon_entropy: negative or NaN probability " + fmt_value(x));
        total += x;
        if (x > 0.0) s -= x * std::log2(x);
    }
    if (std::abs(total - 1.0) > kProbabilityTol) {
        throw InvalidStateError("shannon_entropy: probabilities sum to " + std::to_string(total));
    }
    return s;
}

double binary_entropy(double x) {
    const std::array<double, 2> p{x, 1.0 - x};
    return shannon_entropy(p);
}

}  // namespace eur
