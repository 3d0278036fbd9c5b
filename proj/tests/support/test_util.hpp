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

// Random generators and Eigen bridges shared by the unit and acceptance
// suites. Test infrastructure only.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <random>

#include "eur/channel.hpp"
#include "eur/matrix.hpp"
#include "eur/measurement.hpp"
#include "eur/state.hpp"

namespace eur::testkit {

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed = 20261014) { return Rng(seed); }

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    }
    return out;
}

inline ComplexMatrix from_eigen(const Eigen::MatrixXcd& m) {
    ComplexMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    }
    return out;
}

inline Eigen::MatrixXcd ginibre(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
    std::normal_distribution<double> n01;
    Eigen::MatrixXcd g(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) g(i, j) = complex(n01(rng), n01(rng));
    }
    return g;
}

/// Hermitian matrix with real and imaginary parts drawn uniformly from [-1, 1].
inline ComplexMatrix random_hermitian(Rng& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = u(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = complex(u(rng), u(rng));
            m(j, i) = std::conj(m(i, j));
        }
    }
    return m;
}

inline ComplexMatrix random_unitary(Rng& rng, std::size_t n) {
    const Eigen::MatrixXcd g = ginibre(rng, n, n);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < q.cols(); ++k) {
        const complex d = r(k, k);
        q.col(k) *= d / std::abs(d);
    }
    return from_eigen(q);
}

/// Mixed state of random rank in [1, n] from the Ginibre ensemble.
inline DensityMatrix random_density(Rng& rng, std::size_t n) {
    std::uniform_int_distribution<int> rank_dist(1, static_cast<int>(n));
    const Eigen::MatrixXcd g = ginibre(rng, n, rank_dist(rng));
    Eigen::MatrixXcd rho = g * g.adjoint();
    rho /= rho.trace();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return DensityMatrix(from_eigen(rho));
}

inline PureState random_pure(Rng& rng, std::size_t n) {
    const Eigen::MatrixXcd g = ginibre(rng, n, 1);
    const Eigen::VectorXcd v = g.col(0).normalized();
    return PureState(std::vector<complex>(v.data(), v.data() + v.size()));
}

inline ProjectiveObservable random_observable(Rng& rng) {
    const auto u = random_pure(rng, 2);
    const std::array<complex, 2> first{u[0], u[1]};
    const std::array<complex, 2> second{-std::conj(u[1]), std::conj(u[0])};
    return ProjectiveObservable("random", first, second);
}

/// Random CPTP qubit channel: a random PSD Choi matrix of random Kraus rank
/// C0 = G G^dagger, rescaled as (T^{-1/2} (x) I) C0 (T^{-1/2} (x) I) with
/// T = tr_out C0, so that tr_out C = I.
inline ChoiMatrix random_choi(Rng& rng) {
    std::uniform_int_distribution<int> rank_dist(1, 4);
    const Eigen::MatrixXcd g = ginibre(rng, 4, rank_dist(rng));
    const Eigen::MatrixXcd c0 = g * g.adjoint();
    Eigen::Matrix2cd t = Eigen::Matrix2cd::Zero();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) t(i, j) = c0(2 * i, 2 * j) + c0(2 * i + 1, 2 * j + 1);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(t);
    const Eigen::Matrix2cd t_inv_sqrt = es.operatorInverseSqrt();
    Eigen::MatrixXcd lift = Eigen::MatrixXcd::Zero(4, 4);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            lift(2 * i, 2 * j) = t_inv_sqrt(i, j);
            lift(2 * i + 1, 2 * j + 1) = t_inv_sqrt(i, j);
        }
    }
    Eigen::MatrixXcd c = lift * c0 * lift.adjoint();
    c = 0.5 * (c + c.adjoint()).eval();
    return ChoiMatrix(from_eigen(c));
}

/// Inputs whose images determine a qubit channel: I/2, |0><0|, |+><+|, |+i><+i|.
inline std::vector<DensityMatrix> tomography_set() {
    const double h = std::sqrt(0.5);
    return {
        DensityMatrix::maximally_mixed(2),
        from_pure(PureState::basis(2, 0)),
        from_pure(PureState({h, h})),
        from_pure(PureState({h, complex(0.0, h)})),
    };
}

}  // namespace eur::testkit
