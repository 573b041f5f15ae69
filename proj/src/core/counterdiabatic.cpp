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

#include "cdwork/counterdiabatic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cdwork/errors.hpp"

namespace cdwork {

HermitianOperator cd_auxiliary(const Spectrum& h0_spectrum, const HermitianOperator& h0_rate) {
    const auto d = static_cast<Eigen::Index>(h0_spectrum.dimension());
    if (static_cast<Eigen::Index>(h0_rate.dimension()) != d)
        fail(ErrorCode::invalid_argument, "cd_auxiliary: dimension mismatch");
    const CMatrix& v = h0_spectrum.eigenvectors;
    const RVector& e = h0_spectrum.eigenvalues;
    const CMatrix rate = v.adjoint() * h0_rate.matrix() * v;
    const double gap_floor = Spectrum::kDegeneracyTolerance * h0_spectrum.norm;

    CMatrix adiabatic = CMatrix::Zero(d, d);
    for (Eigen::Index n = 0; n < d; ++n) {
        for (Eigen::Index m = 0; m < d; ++m) {
            if (m == n) continue;
            const double gap = e(n) - e(m);
            if (std::abs(gap) < gap_floor) {
                if (std::abs(rate(m, n)) > 1e-12) {
                    std::ostringstream msg;
                    msg << "cd_auxiliary: levels " << m << " and " << n << " are degenerate (gap " << gap
                        << ") and coupled by dH0/dt";
                    fail(ErrorCode::degeneracy, msg.str());
                }
                continue;
            }
            adiabatic(m, n) = kI * rate(m, n) / gap;
        }
    }
    return HermitianOperator(CMatrix(v * adiabatic * v.adjoint()));
}

HermitianOperator cd_auxiliary(const OperatorAt& h0_at, const OperatorAt& h0_rate_at, double t) {
    return cd_auxiliary(spectrum(h0_at(t)), h0_rate_at(t));
}

HermitianOperator finite_difference_rate(const OperatorAt& h0_at, double t, double tau) {
    const double h = tau * 1e-5;
    const double centre = std::clamp(t, h, tau - h);
    return HermitianOperator(CMatrix((h0_at(centre + h).matrix() - h0_at(centre - h).matrix()) / (2.0 * h)));
}

namespace {

void check_grid(const std::vector<double>& grid) {
    if (grid.size() < 2) fail(ErrorCode::invalid_argument, "propagate: grid needs at least two points");
    if (grid.front() != 0.0) fail(ErrorCode::invalid_argument, "propagate: grid must start at 0");
    for (std::size_t k = 1; k < grid.size(); ++k)
        if (!(grid[k] > grid[k - 1])) fail(ErrorCode::invalid_argument, "propagate: grid must be strictly increasing");
}

struct Run {
    std::vector<CMatrix> states;
};

HermitianOperator step_generator(const OperatorAt& hamiltonian_at, double start, double dt, Stepper stepper) {
    if (stepper == Stepper::midpoint) return hamiltonian_at(start + 0.5 * dt);
    static const double offset = std::sqrt(3.0) / 6.0;
    const HermitianOperator a = hamiltonian_at(start + (0.5 - offset) * dt);
    const HermitianOperator b = hamiltonian_at(start + (0.5 + offset) * dt);
    const CMatrix commutator = a.matrix() * b.matrix() - b.matrix() * a.matrix();
    const double weight = std::sqrt(3.0) / 12.0 * dt;
    return HermitianOperator(CMatrix(0.5 * (a.matrix() + b.matrix()) + kI * weight * commutator));
}

Run run_steps(const OperatorAt& hamiltonian_at, const CMatrix& initial, const std::vector<double>& grid,
              std::size_t substeps, Stepper stepper) {
    Run run;
    run.states.reserve(grid.size());
    CMatrix state = initial;
    run.states.push_back(state);
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
        const double dt = (grid[k + 1] - grid[k]) / static_cast<double>(substeps);
        for (std::size_t j = 0; j < substeps; ++j) {
            const double start = grid[k] + static_cast<double>(j) * dt;
            const Spectrum s = spectrum(step_generator(hamiltonian_at, start, dt, stepper));
            CMatrix coeffs = s.eigenvectors.adjoint() * state;
            for (Eigen::Index n = 0; n < coeffs.rows(); ++n)
                coeffs.row(n) *= std::exp(Complex(0.0, -s.eigenvalues(n) * dt));
            state = s.eigenvectors * coeffs;
        }
        run.states.push_back(state);
    }
    return run;
}

}  // namespace

StateTrajectory propagate(const OperatorAt& hamiltonian_at, const CMatrix& initial, const std::vector<double>& grid,
                          const PropagationOptions& options) {
    check_grid(grid);
    for (Eigen::Index c = 0; c < initial.cols(); ++c)
        if (std::abs(initial.col(c).norm() - 1.0) > 1e-10)
            fail(ErrorCode::invalid_argument, "propagate: initial state is not normalized");

    std::size_t substeps = std::max<std::size_t>(1, options.initial_substeps);
    Run coarse = run_steps(hamiltonian_at, initial, grid, substeps, options.stepper);
    for (std::size_t halving = 0; halving < options.max_halvings; ++halving) {
        Run fine = run_steps(hamiltonian_at, initial, grid, substeps * 2, options.stepper);
        const double change = (fine.states.back() - coarse.states.back()).colwise().norm().maxCoeff();
        substeps *= 2;
        if (change < options.convergence_tolerance) {
            StateTrajectory out;
            out.times = grid;
            out.substeps = substeps;
            out.refinement_change = change;
            for (const auto& st : fine.states)
                for (Eigen::Index c = 0; c < st.cols(); ++c)
                    out.norm_drift = std::max(out.norm_drift, std::abs(st.col(c).norm() - 1.0));
            out.states = std::move(fine.states);
            return out;
        }
        coarse = std::move(fine);
    }
    std::ostringstream msg;
    msg << "propagate: no convergence after " << options.max_halvings << " halvings (" << substeps
        << " substeps per interval)";
    fail(ErrorCode::step_not_converged, msg.str());
}

bool CertificateReport::pass() const {
    return !entries.empty() && std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.pass; });
}

CertificateReport transitionless_certificate(const DrivenSystem& system, const std::vector<std::size_t>& levels,
                                             const std::vector<double>& grid, bool with_auxiliary,
                                             const PropagationOptions& options) {
    const auto d = static_cast<Eigen::Index>(system.dimension());
    const Spectrum start = spectrum(system.h0(0.0));
    CMatrix initial(d, static_cast<Eigen::Index>(levels.size()));
    for (std::size_t j = 0; j < levels.size(); ++j) {
        if (levels[j] >= system.dimension()) fail(ErrorCode::invalid_argument, "certificate: level out of range");
        initial.col(static_cast<Eigen::Index>(j)) = start.vector(levels[j]);
    }
    const OperatorAt h = with_auxiliary ? OperatorAt([&](double t) { return system.h_cd(t); })
                                        : OperatorAt([&](double t) { return system.h0(t); });
    const StateTrajectory traj = propagate(h, initial, grid, options);

    CertificateReport report;
    report.with_auxiliary = with_auxiliary;
    report.substeps = traj.substeps;
    report.entries.resize(levels.size());
    for (std::size_t j = 0; j < levels.size(); ++j) {
        report.entries[j].level = levels[j];
        report.entries[j].min_overlap = 1.0;
    }
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const Spectrum s = spectrum(system.h0(grid[k]));
        for (std::size_t j = 0; j < levels.size(); ++j) {
            const double overlap =
                std::abs(s.vector(levels[j]).dot(traj.states[k].col(static_cast<Eigen::Index>(j))));
            auto& entry = report.entries[j];
            entry.min_overlap = std::min(entry.min_overlap, overlap);
            if (k + 1 == grid.size()) entry.final_fidelity = overlap * overlap;
        }
    }
    for (auto& entry : report.entries)
        entry.pass = entry.min_overlap >= report.threshold && entry.final_fidelity >= report.threshold;
    return report;
}

}  // namespace cdwork
