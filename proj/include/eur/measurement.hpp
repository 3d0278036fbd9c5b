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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "eur/matrix.hpp"
#include "eur/state.hpp"

namespace eur {

enum class Axis { x, y, z };

/// Projective qubit measurement named by its orthonormal eigenbasis.
/// All measurements in this library act on subsystem A of a two-qubit state.
class ProjectiveObservable {
public:
    /// Throws InvalidStateError unless both vectors are unit norm and
    /// mutually orthogonal within 1e-12.
    ProjectiveObservable(std::string name, std::array<complex, 2> first, std::array<complex, 2> second);

    const std::string& name() const noexcept { return name_; }
    const std::array<std::array<complex, 2>, 2>& basis() const noexcept { return basis_; }

    /// |o_i><o_i|
    ComplexMatrix projector(std::size_t i) const;

private:
    std::string name_;
    std::array<std::array<complex, 2>, 2> basis_;
};

/// Eigenbasis of sigma_axis, +1 eigenvector first.
ProjectiveObservable pauli_observable(Axis axis);

/// c = max_ij |<q_i|r_j>|^2, in [1/2, 1].
double complementarity(const ProjectiveObservable& q, const ProjectiveObservable& r);

/// sum_i (|o_i><o_i| (x) I) rho (|o_i><o_i| (x) I)
DensityMatrix post_measurement_state(const ProjectiveObservable& o, const DensityMatrix& rho_ab);

struct MeasurementOutcome {
    double probability = 0.0;
    /// Empty when probability <= 1e-12.
    std::optional<DensityMatrix> conditional_memory;
};

/// Outcome probabilities of measuring `o` on A and Bob's conditional states.
std::vector<MeasurementOutcome> measurement_ensemble(const ProjectiveObservable& o, const DensityMatrix& rho_ab);

/// I(O;B) = S(rho_B) - sum_i p_i S(rho_i^B), in bits.
double holevo_quantity(const ProjectiveObservable& o, const DensityMatrix& rho_ab);

}  // namespace eur
