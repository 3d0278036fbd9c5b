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

#include "eur/channel.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace eur {

namespace {

constexpr double kChannelTol = 1e-10;
constexpr double kKrausCutoff = 1e-12;

double completeness_error(std::span<const ComplexMatrix> kraus) {
    ComplexMatrix sum = ComplexMatrix::zeros(2, 2);
    for (const auto& k : kraus) sum += adjoint(k) * k;
    return max_abs_diff(sum, ComplexMatrix::identity(2));
}

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus) : kraus_(std::move(kraus)) {
    if (kraus_.empty()) throw InvalidStateError("KrausChannel: no Kraus operators");
    for (const auto& k : kraus_) {
        if (k.rows() != 2 || k.cols() != 2) throw DimensionError("KrausChannel: Kraus operators must be 2x2");
    }
    const double err = completeness_error(kraus_);
    if (err > kChannelTol) {
        throw InvalidStateError("KrausChannel: completeness violated by " + std::to_string(err));
    }
}

KrausChannel KrausChannel::identity() { return KrausChannel({ComplexMatrix::identity(2)}); }

ChoiMatrix::ChoiMatrix(ComplexMatrix m) : mat_(std::move(m)) {
    if (mat_.rows() != 4 || mat_.cols() != 4) throw DimensionError("ChoiMatrix: expected 4x4");
    if (!is_hermitian(mat_, kChannelTol)) throw InvalidStateError("ChoiMatrix: not Hermitian");
    const auto evals = hermitian_eigenvalues(mat_);
    if (evals.front() < -kChannelTol) {
        throw InvalidStateError("ChoiMatrix: not completely positive (eigenvalue " + std::to_string(evals.front()) +
                                ")");
    }
    if (std::abs(trace(mat_) - 2.0) > kChannelTol) throw InvalidStateError("ChoiMatrix: trace is not 2");
    const std::array<std::size_t, 2> dims{2, 2};
    const std::array<std::size_t, 1> keep_input{0};
    if (max_abs_diff(partial_trace(mat_, keep_input, dims), ComplexMatrix::identity(2)) > kChannelTol) {
        throw InvalidStateError("ChoiMatrix: not trace preserving");
    }
}

double unruh_r(const UnruhParams& params) {
    const double a = params.acceleration;
    const double w = params.omega;
    if (!std::isfinite(a) || a < 0.0) throw std::invalid_argument("unruh_r: acceleration must be finite and >= 0");
    if (!std::isfinite(w) || w <= 0.0) throw std::invalid_argument("unruh_r: omega must be finite and > 0");
    if (a == 0.0) return 0.0;
    // tan^2 r = exp(-2 pi w / a); atan keeps precision near r = 0 where acos would not.
    return std::atan(std::exp(-std::numbers::pi * w / a));
}

KrausChannel unruh_channel(double r) {
    if (!(r >= 0.0 && r <= std::numbers::pi / 4)) {
        throw std::invalid_argument("unruh_channel: r = " + std::to_string(r) + " is outside [0, pi/4]");
    }
    const double c = std::cos(r);
    const double s = std::sin(r);
    return KrausChannel({
        ComplexMatrix{{c, 0.0}, {0.0, 1.0}},
        ComplexMatrix{{0.0, 0.0}, {s, 0.0}},
    });
}

KrausChannel amplitude_damping(double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw std::invalid_argument("amplitude_damping: gamma = " + std::to_string(gamma) + " is outside [0, 1]");
    }
    return KrausChannel({
        ComplexMatrix{{1.0, 0.0}, {0.0, std::sqrt(1.0 - gamma)}},
        ComplexMatrix{{0.0, std::sqrt(gamma)}, {0.0, 0.0}},
    });
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
    if (rho.dim() != 2) throw DimensionError("apply: channel acts on a single qubit, got dim " + std::to_string(rho.dim()));
    ComplexMatrix out = ComplexMatrix::zeros(2, 2);
    for (const auto& k : ch.operators()) out += k * rho.matrix() * adjoint(k);
    return DensityMatrix(std::move(out));
}

DensityMatrix apply_to_memory(const KrausChannel& ch, const DensityMatrix& rho_ab) {
    if (rho_ab.dim() != 4) {
        throw DimensionError("apply_to_memory: expected a two-qubit state, got dim " + std::to_string(rho_ab.dim()));
    }
    const ComplexMatrix id = ComplexMatrix::identity(2);
    ComplexMatrix out = ComplexMatrix::zeros(4, 4);
    for (const auto& k : ch.operators()) {
        const ComplexMatrix lifted = tensor(id, k);
        out += lifted * rho_ab.matrix() * adjoint(lifted);
    }
    return DensityMatrix(std::move(out));
}

ChoiMatrix choi(const KrausChannel& ch) {
    ComplexMatrix c = ComplexMatrix::zeros(4, 4);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            ComplexMatrix unit = ComplexMatrix::zeros(2, 2);
            unit(i, j) = 1.0;
            ComplexMatrix image = ComplexMatrix::zeros(2, 2);
            for (const auto& k : ch.operators()) image += k * unit * adjoint(k);
            for (std::size_t m = 0; m < 2; ++m) {
                for (std::size_t n = 0; n < 2; ++n) c(2 * i + m, 2 * j + n) = image(m, n);
            }
        }
    }
    return ChoiMatrix(std::move(c));
}

KrausChannel kraus_from_choi(const ChoiMatrix& c) {
    const auto eig = hermitian_eigensystem(c.matrix());
    std::vector<ComplexMatrix> kraus;
    for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
        const double lambda = eig.eigenvalues[k];
        if (lambda < -kChannelTol) {
            throw InvalidStateError("kraus_from_choi: not completely positive (eigenvalue " + std::to_string(lambda) +
                                    ")");
        }
        if (lambda <= kKrausCutoff) continue;
        const double scale = std::sqrt(lambda);
        const auto& v = eig.eigenvectors[k];
        ComplexMatrix op(2, 2);
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t m = 0; m < 2; ++m) op(m, i) = scale * v[2 * i + m];
        }
        kraus.push_back(std::move(op));
    }
    if (kraus.empty()) throw InvalidStateError("kraus_from_choi: Choi matrix has no weight above cutoff");
    const double err = completeness_error(kraus);
    if (err > kChannelTol) {
        throw InvalidStateError("kraus_from_choi: reconstructed operators violate completeness by " +
                                std::to_string(err));
    }
    return KrausChannel(std::move(kraus));
}

}  // namespace eur
