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

// Brute-force reference for the two-qubit uncertainty quantities, written
// directly against Eigen. It shares no code with the library: states are
// built from Kronecker products of Pauli matrices, entropies come from
// Eigen's self-adjoint solver and partial traces are explicit index sums.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>

namespace eur::oracle {

using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec2 = Eigen::Vector2cd;

inline Mat4 kron(const Mat2& a, const Mat2& b) {
    Mat4 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return out;
}

inline Mat2 sx() { Mat2 m; m << 0, 1, 1, 0; return m; }
inline Mat2 sy() { Mat2 m; m << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0; return m; }
inline Mat2 sz() { Mat2 m; m << 1, 0, 0, -1; return m; }

inline double entropy(const Eigen::MatrixXcd& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
    double s = 0.0;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
        const double l = es.eigenvalues()(k);
        if (l > 1e-15) s -= l * std::log2(l);
    }
    return s;
}

inline Mat2 trace_a(const Mat4& rho) {
    Mat2 out = Mat2::Zero();
    for (int a = 0; a < 2; ++a)
        for (int m = 0; m < 2; ++m)
            for (int n = 0; n < 2; ++n) out(m, n) += rho(2 * a + m, 2 * a + n);
    return out;
}

inline Mat2 trace_b(const Mat4& rho) {
    Mat2 out = Mat2::Zero();
    for (int b = 0; b < 2; ++b)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) out(i, j) += rho(2 * i + b, 2 * j + b);
    return out;
}

/// Columns are the eigenvectors of a Pauli-like observable.
inline Mat2 eigenbasis(const Mat2& op) {
    Eigen::SelfAdjointEigenSolver<Mat2> es(op);
    return es.eigenvectors();
}

inline Mat4 bell_diagonal(double r1, double r2, double r3) {
    return 0.25 * (Mat4::Identity() + r1 * kron(sx(), sx()) + r2 * kron(sy(), sy()) + r3 * kron(sz(), sz()));
}

inline Mat4 unruh_on_memory(double r, const Mat4& rho) {
    Mat2 k1, k2;
    k1 << std::cos(r), 0, 0, 1;
    k2 << 0, 0, std::sin(r), 0;
    const Mat4 l1 = kron(Mat2::Identity(), k1);
    const Mat4 l2 = kron(Mat2::Identity(), k2);
    return l1 * rho * l1.adjoint() + l2 * rho * l2.adjoint();
}

struct Bounds {
    double lhs, berta, holevo, delta;
};

inline Bounds evaluate(const Mat4& rho, const Mat2& q_basis, const Mat2& r_basis) {
    const double s_ab = entropy(rho);
    const double s_a = entropy(trace_b(rho));
    const Mat2 rho_b = trace_a(rho);
    const double s_b = entropy(rho_b);

    double c = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c = std::max(c, std::norm(q_basis.col(i).dot(r_basis.col(j))));

    double lhs = 0.0;
    double holevo_sum = 0.0;
    for (const Mat2* basis : {&q_basis, &r_basis}) {
        Mat4 post = Mat4::Zero();
        double conditional = 0.0;
        for (int i = 0; i < 2; ++i) {
            const Vec2 o = basis->col(i);
            const Mat4 proj = kron(o * o.adjoint(), Mat2::Identity());
            const Mat4 branch = proj * rho * proj;
            post += branch;
            const double p = branch.trace().real();
            if (p > 1e-12) conditional += p * entropy(trace_a(branch) / p);
        }
        lhs += entropy(post) - s_b;
        holevo_sum += s_b - conditional;
    }
    const double berta = std::log2(1.0 / c) + s_ab - s_b;
    const double delta = (s_a + s_b - s_ab) - holevo_sum;
    return {lhs, berta, berta + std::max(0.0, delta), delta};
}

}  // namespace eur::oracle
