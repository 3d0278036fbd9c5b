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

#include "eur/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace eur {

namespace {

constexpr double kBasisTol = 1e-12;
constexpr double kZeroProbability = 1e-12;

complex inner(const std::array<complex, 2>& u, const std::array<complex, 2>& v) {
    return std::conj(u[0]) * v[0] + std::conj(u[1]) * v[1];
}

void require_two_qubit(const DensityMatrix& rho, const char* who) {
    if (rho.dim() != 4) throw DimensionError(std::string(who) + ": expected a two-qubit state");
}

ComplexMatrix lifted_projector(const ProjectiveObservable& o, std::size_t i) {
    return tensor(o.projector(i), ComplexMatrix::identity(2));
}

}  // namespace

ProjectiveObservable::ProjectiveObservable(std::string name, std::array<complex, 2> first,
                                           std::array<complex, 2> second)
    : name_(std::move(name)), basis_{first, second} {
    for (const auto& v : basis_) {
        if (std::abs(std::sqrt(inner(v, v).real()) - 1.0) > kBasisTol) {
            throw InvalidStateError("ProjectiveObservable " + name_ + ": basis vector is not normalized");
        }
    }
    if (std::abs(inner(basis_[0], basis_[1])) > kBasisTol) {
        throw InvalidStateError("ProjectiveObservable " + name_ + ": basis vectors are not orthogonal");
    }
}

ComplexMatrix ProjectiveObservable::projector(std::size_t i) const {
    return ComplexMatrix::outer(basis_.at(i), basis_.at(i));
}

ProjectiveObservable pauli_observable(Axis axis) {
    const double h = std::numbers::sqrt2 / 2;
    const complex i(0.0, 1.0);
    switch (axis) {
        case Axis::x:
            return ProjectiveObservable("x", {h, h}, {h, -h});
        case Axis::y:
            return ProjectiveObservable("y", {h, i * h}, {h, -i * h});
        case Axis::z:
            return ProjectiveObservable("z", {1.0, 0.0}, {0.0, 1.0});
    }
    throw std::invalid_argument("pauli_observable: unknown axis");
}

double complementarity(const ProjectiveObservable& q, const ProjectiveObservable& r) {
    double c = 0.0;
    for (const auto& qi : q.basis()) {
        for (const auto& rj : r.basis()) c = std::max(c, std::norm(inner(qi, rj)));
    }
    return c;
}

DensityMatrix post_measurement_state(const ProjectiveObservable& o, const DensityMatrix& rho_ab) {
    require_two_qubit(rho_ab, "post_measurement_state");
    ComplexMatrix out = ComplexMatrix::zeros(4, 4);
    for (std::size_t i = 0; i < 2; ++i) {
        const ComplexMatrix pi = lifted_projector(o, i);
        out += pi * rho_ab.matrix() * pi;
    }
    return DensityMatrix(std::move(out));
}

std::vector<MeasurementOutcome> measurement_ensemble(const ProjectiveObservable& o, const DensityMatrix& rho_ab) {
    require_two_qubit(rho_ab, "measurement_ensemble");
    const std::array<std::size_t, 2> dims{2, 2};
    const std::array<std::size_t, 1> keep_b{1};
    std::vector<MeasurementOutcome> outcomes;
    outcomes.reserve(2);
    for (std::size_t i = 0; i < 2; ++i) {
        const ComplexMatrix pi = lifted_projector(o, i);
        const ComplexMatrix branch = pi * rho_ab.matrix() * pi;
        MeasurementOutcome outcome;
        outcome.probability = std::max(0.0, trace(branch).real());
        if (outcome.probability > kZeroProbability) {
            outcome.conditional_memory =
                DensityMatrix(partial_trace(branch, keep_b, dims) * complex(1.0 / outcome.probability));
        }
        outcomes.push_back(std::move(outcome));
    }
    return outcomes;
}

double holevo_quantity(const ProjectiveObservable& o, const DensityMatrix& rho_ab) {
    const double s_b = vn_entropy(reduce_two_qubit(rho_ab, 1));
    double conditional = 0.0;
    for (const auto& outcome : measurement_ensemble(o, rho_ab)) {
        if (outcome.conditional_memory) conditional += outcome.probability * vn_entropy(*outcome.conditional_memory);
    }
    return std::clamp(s_b - conditional, 0.0, s_b);
}

}  // namespace eur
