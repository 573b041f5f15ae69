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

#include <limits>
#include <vector>

#include "cdwork/model.hpp"

namespace cdwork {

inline constexpr double kInfiniteBeta = std::numeric_limits<double>::infinity();

/// Initial canonical populations p_n = exp(-beta e_n(0)) / Z over the kept levels.
struct ThermalEnsemble {
    double beta = 1.0;
    RVector weights;          ///< nonincreasing, sums to 1
    double partition = 1.0;   ///< Z relative to the ground state: sum_n exp(-beta (e_n - e_0))
    double truncated_tail = 0.0;

    [[nodiscard]] std::size_t size() const noexcept { return static_cast<std::size_t>(weights.size()); }
};

/// Keeps the smallest prefix of levels whose cumulative weight reaches
/// 1 - tail_tolerance and renormalizes. beta = +inf keeps the ground state only.
/// Throws ErrorCode::truncation when more than `trusted_levels` would be needed.
ThermalEnsemble thermal_ensemble(const RVector& energies, double beta, std::size_t trusted_levels,
                                 double tail_tolerance = 1e-10);
ThermalEnsemble thermal_ensemble(const DrivenSystem& system, double beta, double tail_tolerance = 1e-10);

/// p_{n->m} = |<Psi_m(t)|n(t)>|^2 for the kept initial levels n (rows) and all
/// eigenlevels m of H_CD(t) (columns).
struct TransitionMatrix {
    RMatrix entries;
    double time = 0.0;
};

enum class WorkTag { counterdiabatic, adiabatic };

struct WorkAtom {
    double work;
    double probability;
};

struct WorkDistribution {
    std::vector<WorkAtom> atoms; ///< sorted by work
    WorkTag tag = WorkTag::counterdiabatic;
    double time = 0.0;
};

/// Everything the two-point-measurement quantities need at one instant.
struct WorkSnapshot {
    double time = 0.0;
    RVector initial_energies; ///< e_n(0), kept levels
    RVector energies;         ///< e_n(t), kept levels
    RVector cd_energies;      ///< E_m(t), all levels
    RMatrix level_gaps;       ///< E_m(t) - e_n(t), evaluated pairwise without cancellation
    TransitionMatrix transitions;
};

/// Diagonalizes H0(0), H0(t) and H_CD(t). Throws ErrorCode::truncation when a
/// row loses more than 1e-8 of its weight to the untrusted part of the basis.
WorkSnapshot work_snapshot(const DrivenSystem& system, const ThermalEnsemble& ensemble, double t);

TransitionMatrix transition_matrix(const DrivenSystem& system, const ThermalEnsemble& ensemble, double t);

WorkDistribution work_distribution(const WorkSnapshot& snapshot, const ThermalEnsemble& ensemble, WorkTag tag);
WorkDistribution work_distribution(const DrivenSystem& system, const ThermalEnsemble& ensemble, double t,
                                   WorkTag tag);

double mean_work(const WorkDistribution& dist);
double variance_work(const WorkDistribution& dist);
double total_probability(const WorkDistribution& dist);

/// Largest mismatch between two distributions: atoms are paired when their work
/// values agree within `location_tolerance`; unpaired atoms count with their full weight.
double atom_discrepancy(const WorkDistribution& a, const WorkDistribution& b, double location_tolerance = 1e-8);

/// Var[W(t)]_CD - Var[W(t)]_ad from the two distributions.
double excess_variance_direct(const WorkSnapshot& snapshot, const ThermalEnsemble& ensemble);
double excess_variance_direct(const DrivenSystem& system, const ThermalEnsemble& ensemble, double t);

/// sum_n p_n g^(n)_{mu nu} dlambda^mu dlambda^nu (hbar = 1).
double excess_variance_geometric(const DrivenSystem& system, const ThermalEnsemble& ensemble, double t);

/// max_n |sum_m p_{n->m} (E_m(t) - e_n(t))|.
double identity_check_rowsum(const WorkSnapshot& snapshot);
double identity_check_rowsum(const DrivenSystem& system, const ThermalEnsemble& ensemble, double t);

struct EnergyFluctuation {
    double cd_variance = 0.0;         ///< <H_CD^2> - <H_CD>^2 in rho(t)
    double h0_variance = 0.0;         ///< <H0^2> - <H0>^2 in rho(t)
    double second_moment_excess = 0.0; ///< <H_CD^2> - <H0^2>
};

/// Moments in the CD-evolved ensemble rho(t) = sum_n p_n |n(t)><n(t)|. Needs only
/// the spectrum of H0(t), so it stays defined when H_CD is unbounded below.
EnergyFluctuation ensemble_energy_variance(const DrivenSystem& system, const ThermalEnsemble& ensemble, double t);

}  // namespace cdwork
