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
#include <optional>
#include <vector>

#include "cdwork/quadrature.hpp"
#include "cdwork/work_stats.hpp"

namespace cdwork {

/// Q^(n)_{mu nu} = <d_mu n| (1 - |n><n|) |d_nu n> at a parameter point, g = Re Q.
struct GeometricTensor {
    std::size_t level = 0;
    RVector lambda;
    CMatrix q;
    RMatrix g;
};

/// Perturbative, gauge-invariant evaluation
/// Q = sum_{k != n} <n|d_mu H|k><k|d_nu H|n> / (e_k - e_n)^2.
/// Throws ErrorCode::degeneracy when level n is within 1e-9 ||H|| of a neighbour.
std::vector<GeometricTensor> qgt(const ParametricModel& model, const RVector& lambda,
                                 const std::vector<std::size_t>& levels);
GeometricTensor qgt(const ParametricModel& model, const RVector& lambda, std::size_t level);

/// g^(n)_{mu nu} lambda_dot^mu lambda_dot^nu for every requested level at time t.
RVector metric_rates(const DrivenSystem& system, double t, std::size_t levels);

/// Quadratic fidelity decay 1 - |<n(t)|n(t + dt)>| against g lambda_dot^2 dt^2 / 2.
struct FidelityDecay {
    double residual = 0.0;      ///< at dt
    double residual_half = 0.0; ///< at dt / 2
    double slope = 0.0;         ///< log2(residual / residual_half), 3 for an O(dt^3) remainder
};

FidelityDecay fidelity_decay_check(const DrivenSystem& system, std::size_t level, double t, double dt);
/// Same contract for models that expose overlaps directly (e.g. free fermions):
/// `overlap(dt)` returns |<n(t)|n(t + dt)>| and `metric_rate` is g lambda_dot^2 at t.
FidelityDecay fidelity_decay_check(const std::function<double(double)>& overlap, double metric_rate, double dt);

struct LengthResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t nodes = 0;
};

/// l = int_0^tau sqrt(sum_n p_n g^(n) lambda_dot lambda_dot) dt.
LengthResult metric_length(const DrivenSystem& system, const ThermalEnsemble& ensemble,
                           const QuadratureOptions& options = {});

/// int_0^tau sqrt(eta(t)) dt with the populations-constant eta metric
/// eta = 1/2 sum_{k != n} (p_n - p_k)^2 / (p_n + p_k) |<k|d_t n>|^2.
LengthResult eta_length(const DrivenSystem& system, const ThermalEnsemble& ensemble,
                        const QuadratureOptions& options = {});
double eta_rate(const DrivenSystem& system, const ThermalEnsemble& ensemble, double t);

/// rho(t) = sum_n p_n |n(t)><n(t)|.
HermitianOperator ensemble_state(const DrivenSystem& system, const ThermalEnsemble& ensemble, double t);

/// Uhlmann fidelity (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2. Throws ErrorCode::not_a_state
/// when a trace differs from 1 by more than 1e-10 or an eigenvalue is below -1e-10.
double bures_fidelity(const HermitianOperator& rho, const HermitianOperator& sigma);
/// arccos sqrt(F).
double bures_length(const HermitianOperator& rho, const HermitianOperator& sigma);

struct SpeedLimitReport {
    double tau = 0.0;
    double metric_length = 0.0;        ///< l
    double bures_length = 0.0;         ///< L
    double eta_length = 0.0;
    double mean_excess_fluctuation = 0.0; ///< <delta Delta W>_tau
    double mean_energy_fluctuation = 0.0; ///< <Delta E_CD>_tau
    double excess_bound = 0.0;         ///< L / <delta Delta W>_tau
    double energy_bound = 0.0;         ///< L / <Delta E_CD>_tau
    bool equality_holds = false;       ///< |tau <delta Delta W> - l| <= 1e-6 l
    bool chain_holds = false;          ///< L <= eta-length <= l within 1e-8
    bool ordering_holds = false;       ///< tau >= excess_bound >= energy_bound
    [[nodiscard]] bool pass() const noexcept { return equality_holds && chain_holds && ordering_holds; }
};

/// l, L and the eta-length depend only on the path, not on its timing.
struct PathLengths {
    double metric_length = 0.0;
    double bures_length = 0.0;
    double eta_length = 0.0;
};

PathLengths path_lengths(const DrivenSystem& system, const ThermalEnsemble& ensemble,
                         const QuadratureOptions& options = {}, bool include_eta = true);

struct SpeedLimitOptions {
    std::size_t grid_points = 401;
    QuadratureOptions quadrature{};
    bool include_eta = true;
    /// Reused instead of recomputed when set (e.g. across a tau sweep of one path).
    std::optional<PathLengths> lengths;
};

/// Time averages use composite Simpson on the uniform grid; the excess
/// fluctuation is taken from the geometric route, which stays defined for
/// protocols where H_CD has no bound spectrum.
SpeedLimitReport speed_limit_report(const DrivenSystem& system, const ThermalEnsemble& ensemble,
                                    const SpeedLimitOptions& options = {});

}  // namespace cdwork
