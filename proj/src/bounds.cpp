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

#include "eur/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <stdexcept>

namespace eur {

double conditional_entropy(const DensityMatrix& rho_ab) {
    return vn_entropy(rho_ab) - vn_entropy(reduce_two_qubit(rho_ab, 1));
}

double mutual_information(const DensityMatrix& rho_ab) {
    return vn_entropy(reduce_two_qubit(rho_ab, 0)) + vn_entropy(reduce_two_qubit(rho_ab, 1)) - vn_entropy(rho_ab);
}

double measured_conditional_entropy(const ProjectiveObservable& o, const DensityMatrix& rho_ab) {
    return vn_entropy(post_measurement_state(o, rho_ab)) - vn_entropy(reduce_two_qubit(rho_ab, 1));
}

double uncertainty_lhs(const ProjectiveObservable& q, const ProjectiveObservable& r, const DensityMatrix& rho_ab) {
    return measured_conditional_entropy(q, rho_ab) + measured_conditional_entropy(r, rho_ab);
}

double maassen_uffink_bound(const ProjectiveObservable& q, const ProjectiveObservable& r,
                            const std::optional<DensityMatrix>& rho) {
    double bound = -std::log2(complementarity(q, r));
    if (rho) {
        if (rho->dim() != 2) throw DimensionError("maassen_uffink_bound: state must be a single qubit");
        bound += vn_entropy(*rho);
    }
    return bound;
}

double berta_bound(const ProjectiveObservable& q, const ProjectiveObservable& r, const DensityMatrix& rho_ab) {
    return -std::log2(complementarity(q, r)) + conditional_entropy(rho_ab);
}

double delta(const ProjectiveObservable& q, const ProjectiveObservable& r, const DensityMatrix& rho_ab) {
    return mutual_information(rho_ab) - holevo_quantity(q, rho_ab) - holevo_quantity(r, rho_ab);
}

double holevo_bound(const ProjectiveObservable& q, const ProjectiveObservable& r, const DensityMatrix& rho_ab) {
    return berta_bound(q, r, rho_ab) + std::max(0.0, delta(q, r, rho_ab));
}

EurReport evaluate_eur(const ProjectiveObservable& q, const ProjectiveObservable& r, const DensityMatrix& rho_ab) {
    if (rho_ab.dim() != 4) throw DimensionError("evaluate_eur: expected a two-qubit state");
    const double s_ab = vn_entropy(rho_ab);
    const double s_a = vn_entropy(reduce_two_qubit(rho_ab, 0));
    const double s_b = vn_entropy(reduce_two_qubit(rho_ab, 1));

    EurReport rep;
    rep.c = complementarity(q, r);
    rep.mu_bound = -std::log2(rep.c);
    rep.s_cond = s_ab - s_b;
    rep.i_ab = s_a + s_b - s_ab;
    rep.i_qb = holevo_quantity(q, rho_ab);
    rep.i_rb = holevo_quantity(r, rho_ab);
    rep.lhs = (vn_entropy(post_measurement_state(q, rho_ab)) - s_b) +
              (vn_entropy(post_measurement_state(r, rho_ab)) - s_b);
    rep.berta_bound = rep.mu_bound + rep.s_cond;
    rep.delta = rep.i_ab - (rep.i_qb + rep.i_rb);
    rep.holevo_bound = rep.berta_bound + std::max(0.0, rep.delta);
    return rep;
}

std::vector<EurReport> evaluate_eur_batch_serial(const ProjectiveObservable& q, const ProjectiveObservable& r,
                                                 std::span<const DensityMatrix> states) {
    std::vector<EurReport> out;
    out.reserve(states.size());
    for (const auto& rho : states) out.push_back(evaluate_eur(q, r, rho));
    return out;
}

std::vector<EurReport> evaluate_eur_batch(const ProjectiveObservable& q, const ProjectiveObservable& r,
                                          std::span<const DensityMatrix> states) {
    std::vector<EurReport> out(states.size());
    const auto n = static_cast<std::ptrdiff_t>(states.size());
    // Exceptions cannot cross the parallel region; capture the first one.
    std::exception_ptr failure;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
        try {
            out[k] = evaluate_eur(q, r, states[k]);
        } catch (...) {
#pragma omp critical(eur_batch_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

RobertsonResult robertson_bound(const ComplexMatrix& q_op, const ComplexMatrix& r_op, const PureState& psi) {
    if (q_op.rows() != 2 || q_op.cols() != 2 || r_op.rows() != 2 || r_op.cols() != 2) {
        throw DimensionError("robertson_bound: operators must be 2x2");
    }
    if (psi.dim() != 2) throw DimensionError("robertson_bound: state must be a single qubit");
    if (!is_hermitian(q_op) || !is_hermitian(r_op)) {
        throw std::invalid_argument("robertson_bound: operators must be Hermitian");
    }
    const auto expect = [&](const ComplexMatrix& op) {
        const auto image = op * psi.amplitudes();
        complex acc = 0.0;
        for (std::size_t i = 0; i < 2; ++i) acc += std::conj(psi[i]) * image[i];
        return acc;
    };
    const auto spread = [&](const ComplexMatrix& op) {
        const double mean = expect(op).real();
        return std::sqrt(std::max(0.0, expect(op * op).real() - mean * mean));
    };
    const ComplexMatrix commutator = q_op * r_op - r_op * q_op;
    return {spread(q_op) * spread(r_op), 0.5 * std::abs(expect(commutator))};
}

double unruh_temperature(double acceleration) {
    if (!(acceleration >= 0.0)) throw std::invalid_argument("unruh_temperature: acceleration must be >= 0");
    return acceleration / (2.0 * std::numbers::pi);
}

}  // namespace eur
