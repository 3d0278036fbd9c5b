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

#include <optional>
#include <span>
#include <vector>

#include "eur/matrix.hpp"
#include "eur/measurement.hpp"
#include "eur/state.hpp"

namespace eur {

/// All entropic uncertainty quantities for one state and one observable
/// pair, in bits.
struct EurReport {
    double lhs = 0.0;           // S(Q|B) + S(R|B)
    double mu_bound = 0.0;      // log2(1/c)
    double berta_bound = 0.0;   // log2(1/c) + S(A|B)
    double holevo_bound = 0.0;  // berta_bound + max{0, delta}
    double delta = 0.0;         // I(A;B) - I(Q;B) - I(R;B)
    double c = 1.0;
    double s_cond = 0.0;  // S(A|B)
    double i_ab = 0.0;
    double i_qb = 0.0;
    double i_rb = 0.0;
};

/// Report comparisons are made with this slack.
inline constexpr double kReportTolerance = 1e-9;

/// S(AB) - S(B). Lies in [-1, 2] for two qubits.
double conditional_entropy(const DensityMatrix& rho_ab);

/// S(A) + S(B) - S(AB).
double mutual_information(const DensityMatrix& rho_ab);

/// S(O|B) = S(rho^{OB}) - S(rho^B) for a measurement of `o` on A.
double measured_conditional_entropy(const ProjectiveObservable& o, const DensityMatrix& rho_ab);

double uncertainty_lhs(const ProjectiveObservable& q, const ProjectiveObservable& r, const DensityMatrix& rho_ab);

/// log2(1/c); with a single-qubit state supplied, log2(1/c) + S(rho).
double maassen_uffink_bound(const ProjectiveObservable& q, const ProjectiveObservable& r,
                            const std::optional<DensityMatrix>& rho = std::nullopt);

double berta_bound(const ProjectiveObservable& q, const ProjectiveObservable& r, const DensityMatrix& rho_ab);

/// May be negative; only max{0, delta} enters holevo_bound.
double delta(const ProjectiveObservable& q, const ProjectiveObservable& r, const DensityMatrix& rho_ab);

double holevo_bound(const ProjectiveObservable& q, const ProjectiveObservable& r, const DensityMatrix& rho_ab);

/// Computes every field from one state so the report is internally
/// consistent (holevo_bound - berta_bound is exactly max{0, delta}).
EurReport evaluate_eur(const ProjectiveObservable& q, const ProjectiveObservable& r, const DensityMatrix& rho_ab);

/// Serial reference for a batch of states sharing one observable pair.
std::vector<EurReport> evaluate_eur_batch_serial(const ProjectiveObservable& q, const ProjectiveObservable& r,
                                                 std::span<const DensityMatrix> states);

/// Same as the serial batch; rows are distributed over OpenMP threads when
/// built with EUR_USE_OPENMP. Output is identical to the serial version.
std::vector<EurReport> evaluate_eur_batch(const ProjectiveObservable& q, const ProjectiveObservable& r,
                                          std::span<const DensityMatrix> states);

struct RobertsonResult {
    double lhs = 0.0;  // Delta Q * Delta R
    double rhs = 0.0;  // |<[Q, R]>| / 2
};

/// Standard-deviation uncertainty relation for Hermitian 2x2 operators in a
/// pure qubit state. Throws std::invalid_argument for non-Hermitian input.
RobertsonResult robertson_bound(const ComplexMatrix& q_op, const ComplexMatrix& r_op, const PureState& psi);

/// a / (2 pi), natural units.
double unruh_temperature(double acceleration);

}  // namespace eur
