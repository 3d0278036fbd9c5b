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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "support/test_util.hpp"

using namespace eur;

namespace {

constexpr double kH = std::numbers::sqrt2 / 2;

/// sigma_z eigenbasis rotated about y by theta.
ProjectiveObservable rotated_z(double theta) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    return ProjectiveObservable("rot", {c, s}, {-s, c});
}

ComplexMatrix lifted(const ComplexMatrix& m) { return tensor(m, ComplexMatrix::identity(2)); }

}  // namespace

TEST(PauliObservable, bases) {
    const auto z = pauli_observable(Axis::z).basis();
    EXPECT_EQ(z[0][0], complex(1.0));
    EXPECT_EQ(z[1][1], complex(1.0));
    const auto x = pauli_observable(Axis::x).basis();
    EXPECT_NEAR(std::abs(x[0][0] - kH), 0.0, 1e-16);
    EXPECT_NEAR(std::abs(x[0][1] - kH), 0.0, 1e-16);
    EXPECT_NEAR(std::abs(x[1][1] + kH), 0.0, 1e-16);
    const auto y = pauli_observable(Axis::y).basis();
    EXPECT_NEAR(std::abs(y[0][1] - complex(0, kH)), 0.0, 1e-16);
    EXPECT_NEAR(std::abs(y[1][1] - complex(0, -kH)), 0.0, 1e-16);
}

TEST(PauliObservable, plus_one_eigenvector_first) {
    const std::array<std::pair<Axis, ComplexMatrix>, 3> cases{
        {{Axis::x, pauli::x()}, {Axis::y, pauli::y()}, {Axis::z, pauli::z()}}};
    for (const auto& [axis, op] : cases) {
        const auto o = pauli_observable(axis);
        EXPECT_LT(max_abs_diff(o.projector(0) - o.projector(1), op), 1e-15);
    }
}

TEST(ProjectiveObservable, rejects_non_orthonormal) {
    EXPECT_THROW(ProjectiveObservable("bad", {1.0, 0.0}, {1.0, 0.0}), InvalidStateError);
    EXPECT_THROW(ProjectiveObservable("bad", {1.0, 1.0}, {0.0, 1.0}), InvalidStateError);
}

TEST(Complementarity, examples) {
    EXPECT_NEAR(complementarity(pauli_observable(Axis::x), pauli_observable(Axis::y)), 0.5, 1e-15);
    EXPECT_NEAR(complementarity(pauli_observable(Axis::z), pauli_observable(Axis::z)), 1.0, 1e-15);
    EXPECT_NEAR(complementarity(pauli_observable(Axis::z), rotated_z(std::numbers::pi / 3)), 0.75, 1e-15);
}

TEST(Complementarity, phase_invariant_and_in_range) {
    auto rng = testkit::make_rng(30);
    for (int trial = 0; trial < 200; ++trial) {
        const auto q = testkit::random_observable(rng);
        const auto r = testkit::random_observable(rng);
        const double c = complementarity(q, r);
        EXPECT_GE(c, 0.5 - 1e-15);
        EXPECT_LE(c, 1.0 + 1e-15);
        const complex phase = std::polar(1.0, 0.7 * trial);
        const auto b = r.basis();
        const ProjectiveObservable r2("phased", {phase * b[0][0], phase * b[0][1]}, {b[1][0], b[1][1]});
        EXPECT_NEAR(complementarity(q, r2), c, 1e-14);
    }
}

TEST(PostMeasurement, eigenstate_unchanged) {
    const auto rho = from_pure(PureState::basis(4, 0));
    EXPECT_LT(max_abs_diff(post_measurement_state(pauli_observable(Axis::z), rho).matrix(), rho.matrix()), 1e-16);
}

TEST(PostMeasurement, dephases_phi_plus) {
    const auto out = post_measurement_state(pauli_observable(Axis::z), from_pure(bell::phi_plus()));
    const std::array<double, 4> diag{0.5, 0, 0, 0.5};
    EXPECT_LT(max_abs_diff(out.matrix(), ComplexMatrix::diagonal(diag)), 1e-15);
}

TEST(PostMeasurement, block_structure_idempotence_and_marginal) {
    auto rng = testkit::make_rng(31);
    const std::array<std::size_t, 2> dims{2, 2};
    const std::array<std::size_t, 1> keep_a{0};
    for (int trial = 0; trial < 100; ++trial) {
        const auto o = testkit::random_observable(rng);
        const auto rho = testkit::random_density(rng, 4);
        const auto once = post_measurement_state(o, rho);
        const auto twice = post_measurement_state(o, once);
        EXPECT_LT(max_abs_diff(once.matrix(), twice.matrix()), 1e-12);

        const auto signed_obs = lifted(o.projector(0) - o.projector(1));
        EXPECT_LT(max_abs_diff(once.matrix() * signed_obs, signed_obs * once.matrix()), 1e-12);

        const auto ens = measurement_ensemble(o, rho);
        const auto marginal = partial_trace(once.matrix(), keep_a, dims);
        for (std::size_t i = 0; i < 2; ++i) {
            const auto& v = o.basis()[i];
            const auto image = marginal * std::span<const complex>(v);
            const complex pi = std::conj(v[0]) * image[0] + std::conj(v[1]) * image[1];
            EXPECT_NEAR(pi.real(), ens[i].probability, 1e-12);
        }
        const auto& v0 = o.basis()[0];
        const auto& v1 = o.basis()[1];
        const auto image = marginal * std::span<const complex>(v1);
        EXPECT_NEAR(std::abs(std::conj(v0[0]) * image[0] + std::conj(v0[1]) * image[1]), 0.0, 1e-12);
    }
}

TEST(MeasurementEnsemble, z_on_phi_plus) {
    const auto ens = measurement_ensemble(pauli_observable(Axis::z), from_pure(bell::phi_plus()));
    ASSERT_EQ(ens.size(), 2u);
    EXPECT_NEAR(ens[0].probability, 0.5, 1e-15);
    EXPECT_NEAR(ens[1].probability, 0.5, 1e-15);
    EXPECT_LT(max_abs_diff(ens[0].conditional_memory->matrix(), from_pure(PureState::basis(2, 0)).matrix()), 1e-15);
    EXPECT_LT(max_abs_diff(ens[1].conditional_memory->matrix(), from_pure(PureState::basis(2, 1)).matrix()), 1e-15);
}

TEST(MeasurementEnsemble, bell_diagonal_half_conditionals) {
    const auto rho = bell_diagonal_p(0.5);
    const auto ex = measurement_ensemble(pauli_observable(Axis::x), rho);
    for (const auto& o : ex) {
        EXPECT_NEAR(o.probability, 0.5, 1e-15);
        EXPECT_LT(max_abs_diff(o.conditional_memory->matrix(), ComplexMatrix::identity(2) * complex(0.5)), 1e-15);
    }
    const auto ey = measurement_ensemble(pauli_observable(Axis::y), rho);
    for (const auto& o : ey) {
        EXPECT_NEAR(o.probability, 0.5, 1e-15);
        const auto& ev = o.conditional_memory->eigenvalues();
        EXPECT_NEAR(ev[0], 0.25, 1e-12);
        EXPECT_NEAR(ev[1], 0.75, 1e-12);
    }
}

TEST(MeasurementEnsemble, zero_probability_outcome_is_flagged) {
    const auto ens = measurement_ensemble(pauli_observable(Axis::z), from_pure(PureState::basis(4, 1)));
    EXPECT_NEAR(ens[0].probability, 1.0, 1e-15);
    EXPECT_TRUE(ens[0].conditional_memory.has_value());
    EXPECT_EQ(ens[1].probability, 0.0);
    EXPECT_FALSE(ens[1].conditional_memory.has_value());
}

TEST(MeasurementEnsemble, average_recovers_memory_marginal) {
    auto rng = testkit::make_rng(32);
    for (int trial = 0; trial < 100; ++trial) {
        const auto o = testkit::random_observable(rng);
        const auto rho = testkit::random_density(rng, 4);
        ComplexMatrix avg = ComplexMatrix::zeros(2, 2);
        double total = 0.0;
        for (const auto& e : measurement_ensemble(o, rho)) {
            total += e.probability;
            if (e.conditional_memory) avg += e.conditional_memory->matrix() * complex(e.probability);
        }
        EXPECT_NEAR(total, 1.0, 1e-12);
        EXPECT_LT(max_abs_diff(avg, reduce_two_qubit(rho, 1).matrix()), 1e-12);
    }
}

TEST(HolevoQuantity, examples) {
    auto rng = testkit::make_rng(33);
    const auto product = tensor(testkit::random_density(rng, 2), testkit::random_density(rng, 2));
    EXPECT_NEAR(holevo_quantity(testkit::random_observable(rng), product), 0.0, 1e-9);
    EXPECT_NEAR(holevo_quantity(pauli_observable(Axis::z), from_pure(bell::phi_plus())), 1.0, 1e-12);
    // 1 - h(1/4)
    EXPECT_NEAR(holevo_quantity(pauli_observable(Axis::y), bell_diagonal_p(0.5)), 1.0 - 0.8112781244591328, 1e-12);
    EXPECT_NEAR(holevo_quantity(pauli_observable(Axis::x), bell_diagonal_p(0.5)), 0.0, 1e-12);
}

TEST(HolevoQuantity, bounded_by_memory_entropy) {
    auto rng = testkit::make_rng(34);
    for (int trial = 0; trial < 300; ++trial) {
        const auto o = testkit::random_observable(rng);
        const auto rho = testkit::random_density(rng, 4);
        const double chi = holevo_quantity(o, rho);
        EXPECT_GE(chi, -1e-9);
        EXPECT_LE(chi, vn_entropy(reduce_two_qubit(rho, 1)) + 1e-9);
    }
}

TEST(HolevoQuantity, cq_state_entropy_decomposition) {
    // S(rho^{OB}) = H(p) + sum_i p_i S(rho_i^B)
    auto rng = testkit::make_rng(35);
    for (int trial = 0; trial < 200; ++trial) {
        const auto o = testkit::random_observable(rng);
        const auto rho = testkit::random_density(rng, 4);
        const auto ens = measurement_ensemble(o, rho);
        std::vector<double> p;
        double conditional = 0.0;
        for (const auto& e : ens) {
            p.push_back(e.probability);
            if (e.conditional_memory) conditional += e.probability * vn_entropy(*e.conditional_memory);
        }
        EXPECT_NEAR(vn_entropy(post_measurement_state(o, rho)), shannon_entropy(p) + conditional, 1e-9);
    }
}
