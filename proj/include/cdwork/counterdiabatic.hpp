/*
 * Copyright 2026 The cdwork Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <functional>
#include <vector>

#include "cdwork/model.hpp"

namespace cdwork {

using OperatorAt = std::function<HermitianOperator(double)>;

/// Auxiliary term from its gauge-invariant matrix elements in the eigenbasis of H0:
/// <m|H1|n> = i <m|dH0/dt|n> / (e_n - e_m) for m != n, zero on the diagonal.
///
/// Throws ErrorCode::degeneracy when a pair closer than 1e-9 ||H0|| is coupled
/// by dH0/dt (|<m|dH0/dt|n>| > 1e-12); uncoupled degenerate pairs contribute zero.
HermitianOperator cd_auxiliary(const Spectrum& h0_spectrum, const HermitianOperator& h0_rate);
HermitianOperator cd_auxiliary(const OperatorAt& h0_at, const OperatorAt& h0_rate_at, double t);

/// Centered difference (H0(t + h) - H0(t - h)) / 2h with h = tau * 1e-5 for
/// user models without an analytic rate. Near the ends the stencil is shifted
/// to stay inside [0, tau].
HermitianOperator finite_difference_rate(const OperatorAt& h0_at, double t, double tau);

enum class Stepper {
    /// exp(-i H(t + dt/2) dt), second order.
    midpoint,
    /// exp(-i [ (H1 + H2)/2 + i (sqrt 3 / 12) dt [H1, H2] ] dt) with H1, H2 at the
    /// two Gauss-Legendre nodes; fourth order, still one Hermitian exponential per step.
    magnus4,
};

struct PropagationOptions {
    Stepper stepper = Stepper::magnus4;
    /// Substeps per grid interval at the first attempt.
    std::size_t initial_substeps = 4;
    /// Maximum number of halvings before StepNotConverged.
    std::size_t max_halvings = 12;
    /// Contract: halving the step changes the final state by less than this (2-norm, per column).
    double convergence_tolerance = 1e-8;
};

/// States on the grid; column j of states[k] evolves column j of the initial block.
struct StateTrajectory {
    std::vector<double> times;
    std::vector<CMatrix> states;
    double norm_drift = 0.0;
    std::size_t substeps = 0;      ///< per grid interval at convergence
    double refinement_change = 0.0; ///< final-state change at the last halving
};

/// Exponential propagation: every substep applies the exact exponential of a
/// Hermitian generator through its spectrum, then the substep count is doubled
/// until the final state changes by < convergence_tolerance. Throws step_not_converged.
StateTrajectory propagate(const OperatorAt& hamiltonian_at, const CMatrix& initial, const std::vector<double>& grid,
                          const PropagationOptions& options = {});

struct CertificateEntry {
    std::size_t level = 0;
    double min_overlap = 0.0;    ///< min over grid of |<n(t)|psi(t)>|
    double final_fidelity = 0.0; ///< |<n(tau)|psi(tau)>|^2
    bool pass = false;
};

struct CertificateReport {
    std::vector<CertificateEntry> entries;
    bool with_auxiliary = true;
    std::size_t substeps = 0;
    double threshold = 1.0 - 1e-6;
    [[nodiscard]] bool pass() const;
};

/// Propagates every requested eigenlevel under H0 + H1 (or bare H0 when
/// with_auxiliary is false) and compares against the instantaneous eigenstates.
CertificateReport transitionless_certificate(const DrivenSystem& system, const std::vector<std::size_t>& levels,
                                             const std::vector<double>& grid, bool with_auxiliary = true,
                                             const PropagationOptions& options = {});

}  // namespace cdwork
