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

#include "cdwork/work_stats.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/SparseCore>

#include "cdwork/errors.hpp"
#include "cdwork/geometry.hpp"

namespace cdwork {

ThermalEnsemble thermal_ensemble(const RVector& energies, double beta, std::size_t trusted_levels,
                                 double tail_tolerance) {
    if (energies.size() == 0) fail(ErrorCode::invalid_argument, "thermal_ensemble: empty spectrum");
    if (!(beta > 0.0)) fail(ErrorCode::invalid_argument, "thermal_ensemble: beta must be positive or +inf");
    ThermalEnsemble ens;
    ens.beta = beta;
    if (std::isinf(beta)) {
        ens.weights = RVector::Ones(1);
        ens.partition = 1.0;
        return ens;
    }
    const double ground = energies(0);
    RVector boltzmann(energies.size());
    for (Eigen::Index n = 0; n < energies.size(); ++n) boltzmann(n) = std::exp(-beta * (energies(n) - ground));
    ens.partition = boltzmann.sum();

    double cumulative = 0.0;
    Eigen::Index kept = 0;
    while (kept < energies.size()) {
        cumulative += boltzmann(kept) / ens.partition;
        ++kept;
        if (cumulative >= 1.0 - tail_tolerance) break;
    }
    ens.truncated_tail = std::max(0.0, 1.0 - cumulative);
    if (static_cast<std::size_t>(kept) > trusted_levels) {
        std::ostringstream msg;
        msg << "thermal_ensemble: " << kept << " levels are needed for tail " << tail_tolerance << " at beta = " << beta
            << " but only " << trusted_levels << " are trusted (basis too small)";
        fail(ErrorCode::truncation, msg.str());
    }
    ens.weights = boltzmann.head(kept) / boltzmann.head(kept).sum();
    return ens;
}

ThermalEnsemble thermal_ensemble(const DrivenSystem& system, double beta, double tail_tolerance) {
    return thermal_ensemble(spectrum(system.h0(0.0)).eigenvalues, beta, system.model().trusted_levels(),
                            tail_tolerance);
}

namespace {

// E_m - e_n = <Psi_m|H0 - e_n|Psi_m> + <Psi_m|H1|Psi_m>. Writing Psi_m = c |n> + d
// with c = <n|Psi_m>, the first term is <d|H0 - e_n|d> + 2 Re(c <d|H0 - e_n|n>)
// because e_n is the Rayleigh quotient of |n>. Every piece is small when
// Psi_m is close to |n>, so the difference keeps full relative precision.
// Pairs with p_{n->m} below 1e-6 take the plain difference of eigenvalues.
RMatrix pairwise_gaps(const DrivenSystem& system, double t, const Spectrum& now, const Spectrum& cd,
                      const RVector& energies, const RVector& cd_energies, const CMatrix& overlaps) {
    using Sparse = Eigen::SparseMatrix<Complex>;
    const auto kept = overlaps.rows();
    RMatrix gaps(kept, cd_energies.size());
    for (Eigen::Index n = 0; n < kept; ++n)
        for (Eigen::Index m = 0; m < cd_energies.size(); ++m) gaps(n, m) = cd_energies(m) - energies(n);

    const Sparse h0 = system.h0(t).matrix().sparseView();
    const Sparse h1 = system.h1(t).matrix().sparseView();
    for (Eigen::Index n = 0; n < kept; ++n) {
        const CVector level = now.eigenvectors.col(n);
        const CVector residual = h0 * level - energies(n) * level;
        for (Eigen::Index m = 0; m < cd_energies.size(); ++m) {
            if (std::norm(overlaps(n, m)) < 1e-6) continue;
            const CVector psi = cd.eigenvectors.col(m);
            const CVector rest = psi - overlaps(n, m) * level;
            const CVector shifted = h0 * rest - energies(n) * rest;
            gaps(n, m) = rest.dot(shifted).real() + 2.0 * (overlaps(n, m) * rest.dot(residual)).real() +
                         psi.dot(h1 * psi).real();
        }
    }
    return gaps;
}

}  // namespace

WorkSnapshot work_snapshot(const DrivenSystem& system, const ThermalEnsemble& ensemble, double t) {
    if (t < 0.0 || t > system.duration()) fail(ErrorCode::invalid_argument, "work_snapshot: t outside [0, tau]");
    const auto kept = static_cast<Eigen::Index>(ensemble.size());
    const Spectrum initial = spectrum(system.h0(0.0));
    const Spectrum now = spectrum(system.h0(t));
    const Spectrum cd = spectrum(system.h_cd(t));
    if (kept > now.eigenvalues.size()) fail(ErrorCode::invalid_argument, "work_snapshot: ensemble larger than basis");

    WorkSnapshot snap;
    snap.time = t;
    snap.initial_energies = rayleigh_quotients(system.h0(0.0), initial).head(kept);
    snap.energies = rayleigh_quotients(system.h0(t), now).head(kept);
    snap.cd_energies = rayleigh_quotients(system.h_cd(t), cd);
    const CMatrix overlaps = now.eigenvectors.leftCols(kept).adjoint() * cd.eigenvectors;
    snap.transitions.time = t;
    snap.transitions.entries = overlaps.cwiseAbs2();
    snap.level_gaps = pairwise_gaps(system, t, now, cd, snap.energies, snap.cd_energies, overlaps);

    // Rows must be carried by the trusted part of the H_CD spectrum.
    const auto d = cd.eigenvalues.size();
    const auto targets = std::min<Eigen::Index>(d, 2 * static_cast<Eigen::Index>(system.model().trusted_levels()));
    for (Eigen::Index n = 0; n < kept; ++n) {
        const double deficit = 1.0 - snap.transitions.entries.row(n).head(targets).sum();
        if (deficit > 1e-8) {
            std::ostringstream msg;
            msg << "transition_matrix: row " << n << " loses " << deficit << " to truncation-polluted levels at t = " << t;
            fail(ErrorCode::truncation, msg.str());
        }
        // Removes the rounding-level departure of the row from unit weight.
        snap.transitions.entries.row(n) /= snap.transitions.entries.row(n).sum();
    }
    return snap;
}

TransitionMatrix transition_matrix(const DrivenSystem& system, const ThermalEnsemble& ensemble, double t) {
    return work_snapshot(system, ensemble, t).transitions;
}

namespace {

// Sorted by work; neighbours within 1e-12 of the running atom are merged.
std::vector<WorkAtom> merge_atoms(std::vector<WorkAtom> atoms) {
    std::stable_sort(atoms.begin(), atoms.end(), [](const WorkAtom& a, const WorkAtom& b) { return a.work < b.work; });
    std::vector<WorkAtom> merged;
    merged.reserve(atoms.size());
    for (const auto& a : atoms) {
        if (!merged.empty() && a.work - merged.back().work < 1e-12)
            merged.back().probability += a.probability;
        else
            merged.push_back(a);
    }
    return merged;
}

}  // namespace

WorkDistribution work_distribution(const WorkSnapshot& snap, const ThermalEnsemble& ensemble, WorkTag tag) {
    WorkDistribution dist;
    dist.tag = tag;
    dist.time = snap.time;
    std::vector<WorkAtom> atoms;
    const auto kept = static_cast<Eigen::Index>(ensemble.size());
    if (tag == WorkTag::adiabatic) {
        for (Eigen::Index n = 0; n < kept; ++n)
            atoms.push_back({snap.energies(n) - snap.initial_energies(n), ensemble.weights(n)});
    } else {
        const RMatrix& p = snap.transitions.entries;
        for (Eigen::Index n = 0; n < kept; ++n)
            for (Eigen::Index m = 0; m < p.cols(); ++m)
                atoms.push_back({snap.level_gaps(n, m) + (snap.energies(n) - snap.initial_energies(n)),
                                 ensemble.weights(n) * p(n, m)});
    }
    dist.atoms = merge_atoms(std::move(atoms));
    return dist;
}

WorkDistribution work_distribution(const DrivenSystem& system, const ThermalEnsemble& ensemble, double t,
                                   WorkTag tag) {
    return work_distribution(work_snapshot(system, ensemble, t), ensemble, tag);
}

double total_probability(const WorkDistribution& dist) {
    double sum = 0.0;
    for (const auto& a : dist.atoms) sum += a.probability;
    return sum;
}

double mean_work(const WorkDistribution& dist) {
    double sum = 0.0;
    for (const auto& a : dist.atoms) sum += a.probability * a.work;
    return sum;
}

double variance_work(const WorkDistribution& dist) {
    const double mean = mean_work(dist);
    double sum = 0.0;
    for (const auto& a : dist.atoms) sum += a.probability * (a.work - mean) * (a.work - mean);
    return sum;
}

double atom_discrepancy(const WorkDistribution& a, const WorkDistribution& b, double location_tolerance) {
    double worst = 0.0;
    std::size_t j = 0;
    std::size_t i = 0;
    while (i < a.atoms.size() || j < b.atoms.size()) {
        if (j == b.atoms.size() || (i < a.atoms.size() && a.atoms[i].work < b.atoms[j].work - location_tolerance)) {
            worst = std::max(worst, a.atoms[i++].probability);
        } else if (i == a.atoms.size() || b.atoms[j].work < a.atoms[i].work - location_tolerance) {
            worst = std::max(worst, b.atoms[j++].probability);
        } else {
            worst = std::max(worst, std::abs(a.atoms[i++].probability - b.atoms[j++].probability));
        }
    }
    return worst;
}

double excess_variance_direct(const WorkSnapshot& snap, const ThermalEnsemble& ensemble) {
    // Var_CD - Var_ad over the same atoms, regrouped per initial level n so that
    // no O(1) second moments are subtracted: with a = e_n(0), e = e_n(t) and
    // S_n = sum_m p_{n->m},
    //   sum_m p_{n->m} (E_m - a)^2 - (e - a)^2
    //     = sum_m p_{n->m} (E_m - e)(E_m + e - 2a) + (S_n - 1)(e - a)^2,
    //   <W>_CD - <W>_ad = sum_n p_n [sum_m p_{n->m} (E_m - e) + (S_n - 1)(e - a)].
    const RMatrix& p = snap.transitions.entries;
    double second = 0.0;
    double mean_gap = 0.0;
    double mean_ad = 0.0;
    for (Eigen::Index n = 0; n < static_cast<Eigen::Index>(ensemble.size()); ++n) {
        const double a = snap.initial_energies(n);
        const double e = snap.energies(n);
        double row_second = 0.0, row_first = 0.0, row_sum = 0.0;
        for (Eigen::Index m = 0; m < p.cols(); ++m) {
            const double d = snap.level_gaps(n, m);
            row_second += p(n, m) * d * (d + 2.0 * (e - a));
            row_first += p(n, m) * d;
            row_sum += p(n, m);
        }
        const double deficit = row_sum - 1.0;
        second += ensemble.weights(n) * (row_second + deficit * (e - a) * (e - a));
        mean_gap += ensemble.weights(n) * (row_first + deficit * (e - a));
        mean_ad += ensemble.weights(n) * (e - a);
    }
    // M_CD^2 - M_ad^2 = (M_CD - M_ad)(M_CD + M_ad).
    return second - mean_gap * (mean_gap + 2.0 * mean_ad);
}

double excess_variance_direct(const DrivenSystem& system, const ThermalEnsemble& ensemble, double t) {
    return excess_variance_direct(work_snapshot(system, ensemble, t), ensemble);
}

double excess_variance_geometric(const DrivenSystem& system, const ThermalEnsemble& ensemble, double t) {
    const RVector rates = metric_rates(system, t, ensemble.size());
    return ensemble.weights.dot(rates);
}

double identity_check_rowsum(const WorkSnapshot& snap) {
    const RMatrix& p = snap.transitions.entries;
    double worst = 0.0;
    for (Eigen::Index n = 0; n < p.rows(); ++n) {
        double sum = 0.0;
        for (Eigen::Index m = 0; m < p.cols(); ++m) sum += p(n, m) * snap.level_gaps(n, m);
        worst = std::max(worst, std::abs(sum));
    }
    return worst;
}

double identity_check_rowsum(const DrivenSystem& system, const ThermalEnsemble& ensemble, double t) {
    return identity_check_rowsum(work_snapshot(system, ensemble, t));
}

EnergyFluctuation ensemble_energy_variance(const DrivenSystem& system, const ThermalEnsemble& ensemble, double t) {
    const Spectrum now = spectrum(system.h0(t));
    const auto kept = static_cast<Eigen::Index>(ensemble.size());
    const CMatrix states = now.eigenvectors.leftCols(kept);
    const CMatrix h0_states = system.h0(t).matrix() * states;
    const CMatrix h1_states = system.h1(t).matrix() * states;
    const CMatrix cd_states = h0_states + h1_states;

    double h0_mean = 0.0, h0_sq = 0.0, cd_mean = 0.0, cd_sq = 0.0;
    for (Eigen::Index n = 0; n < kept; ++n) {
        const double p = ensemble.weights(n);
        h0_mean += p * states.col(n).dot(h0_states.col(n)).real();
        cd_mean += p * states.col(n).dot(cd_states.col(n)).real();
        h0_sq += p * h0_states.col(n).squaredNorm();
        cd_sq += p * cd_states.col(n).squaredNorm();
    }
    EnergyFluctuation out;
    out.h0_variance = h0_sq - h0_mean * h0_mean;
    out.cd_variance = cd_sq - cd_mean * cd_mean;
    out.second_moment_excess = cd_sq - h0_sq;
    return out;
}

}  // namespace cdwork
