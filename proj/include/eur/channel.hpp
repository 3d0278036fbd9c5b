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
#include <vector>

#include "eur/matrix.hpp"
#include "eur/state.hpp"

namespace eur {

/// Qubit channel in Kraus form. Construction enforces completeness,
/// sum_j K_j^dagger K_j = I within 1e-10.
class KrausChannel {
public:
    explicit KrausChannel(std::vector<ComplexMatrix> kraus);

    std::span<const ComplexMatrix> operators() const noexcept { return kraus_; }
    std::size_t size() const noexcept { return kraus_.size(); }

    static KrausChannel identity();

private:
    std::vector<ComplexMatrix> kraus_;
};

/// Unnormalized Choi matrix, C = sum_ij |i><j| (x) E(|i><j|), input index
/// most significant. Construction checks Hermiticity, complete positivity,
/// trace 2 and trace preservation (tr_out C = I), all within 1e-10.
class ChoiMatrix {
public:
    explicit ChoiMatrix(ComplexMatrix m);

    const ComplexMatrix& matrix() const noexcept { return mat_; }
    const complex& operator()(std::size_t r, std::size_t c) const { return mat_(r, c); }

private:
    ComplexMatrix mat_;
};

/// Proper acceleration and Dirac mode frequency, natural units (c = hbar = k_B = 1).
struct UnruhParams {
    double acceleration = 0.0;  // >= 0
    double omega = 1.0;         // > 0
};

/// Rindler mixing angle, cos r = (1 + exp(-2 pi omega / a))^(-1/2).
/// Returns 0 at a = 0 (the limiting identity channel); tends to pi/4 as a grows.
double unruh_r(const UnruhParams& params);

/// K1 = [[cos r, 0], [0, 1]], K2 = [[0, 0], [sin r, 0]] for r in [0, pi/4].
KrausChannel unruh_channel(double r);

/// E0 = [[1, 0], [0, sqrt(1-g)]], E1 = [[0, sqrt(g)], [0, 0]] for g in [0, 1].
KrausChannel amplitude_damping(double gamma);

/// sum_j K_j rho K_j^dagger on a single qubit.
DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);

/// sum_j (I (x) K_j) rho (I (x) K_j^dagger): the channel acts on the memory
/// qubit B of a two-qubit state.
DensityMatrix apply_to_memory(const KrausChannel& ch, const DensityMatrix& rho_ab);

ChoiMatrix choi(const KrausChannel& ch);

/// Diagonalizes the Choi matrix and keeps sqrt(lambda_k) v_k for every
/// eigenvalue above 1e-12, reshaped as K[m][i] = sqrt(lambda_k) v_k[2i + m].
/// The operators are unique only up to unitary remixing; the channel action
/// is what matches the source.
KrausChannel kraus_from_choi(const ChoiMatrix& c);

}  // namespace eur
