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

#include "cdwork/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "cdwork/errors.hpp"

namespace cdwork {

namespace {

double gap_floor(const Spectrum& s) { return Spectrum::kDegeneracyTolerance * s.norm; }

void check_level(const Spectrum& s, std::size_t level) {
    if (level >= s.dimension()) fail(ErrorCode::invalid_argument, "qgt: level outside the basis");
}

// |<k|dH|n>|^2 / (e_k - e_n)^2 summed over k != n, for columns n < levels of x = V^dag dH V.
RVector rate_sums(const Spectrum& s, const CMatrix& x, std::size_t levels) {
    const RVector& e = s.eigenvalues;
    const auto d = e.size();
    RVector out = RVector::Zero(static_cast<Eigen::Index>(levels));
    for (Eigen::Index n = 0; n < static_cast<Eigen::Index>(levels); ++n) {
        double sum = 0.0;
        for (Eigen::Index k = 0; k < d; ++k) {
            if (k == n) continue;
            const double gap = e(k) - e(n);
            const double weight = std::norm(x(k, n));
            if (std::abs(gap) < gap_floor(s)) {
                if (weight > 1e-24) {
                    std::ostringstream msg;
                    msg << "qgt: level " << n << " is degenerate with level " << k << " (gap " << gap << ")";
                    fail(ErrorCode::degeneracy, msg.str());
                }
                continue;
            }
            sum += weight / (gap * gap);
        }
        out(n) = sum;
    }
    return out;
}

CMatrix rate_elements(const Spectrum& s, const HermitianOperator& rate, std::size_t levels) {
    const auto cols = static_cast<Eigen::Index>(levels);
    return s.eigenvectors.adjoint() * (rate.matrix() * s.eigenvectors.leftCols(cols));
}

}  // namespace

std::vector<GeometricTensor> qgt(const ParametricModel& model, const RVector& lambda,
                                 const std::vector<std::size_t>& levels) {
    const Spectrum s = spectrum(model.hamiltonian(lambda));
    for (auto n : levels) check_level(s, n);
    const std::size_t count = model.parameter_count();
    const std::size_t max_level = levels.empty() ? 0 : *std::max_element(levels.begin(), levels.end()) + 1;

    std::vector<CMatrix> x;
    x.reserve(count);
    for (std::size_t mu = 0; mu < count; ++mu)
        x.push_back(rate_elements(s, model.parameter_derivative(lambda, mu), max_level));

    std::vector<GeometricTensor> out;
    out.reserve(levels.size());
    const auto params = static_cast<Eigen::Index>(count);
    for (auto level : levels) {
        const auto n = static_cast<Eigen::Index>(level);
        GeometricTensor t;
        t.level = level;
        t.lambda = lambda;
        t.q = CMatrix::Zero(params, params);
        for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k) {
            if (k == n) continue;
            const double gap = s.eigenvalues(k) - s.eigenvalues(n);
            bool coupled = false;
            for (std::size_t mu = 0; mu < count; ++mu) coupled = coupled || std::abs(x[mu](k, n)) > 1e-12;
            if (std::abs(gap) < gap_floor(s)) {
                if (coupled) {
                    std::ostringstream msg;
                    msg << "qgt: level " << n << " is degenerate with level " << k << " (gap " << gap << ")";
                    fail(ErrorCode::degeneracy, msg.str());
                }
                continue;
            }
            for (Eigen::Index mu = 0; mu < params; ++mu)
                for (Eigen::Index nu = 0; nu < params; ++nu)
                    t.q(mu, nu) += std::conj(x[static_cast<std::size_t>(mu)](k, n)) *
                                   x[static_cast<std::size_t>(nu)](k, n) / (gap * gap);
        }
        t.g = t.q.real();
        out.push_back(std::move(t));
    }
    return out;
}

GeometricTensor qgt(const ParametricModel& model, const RVector& lambda, std::size_t level) {
    return qgt(model, lambda, std::vector<std::size_t>{level}).front();
}

RVector metric_rates(const DrivenSystem& system, double t, std::size_t levels) {
    if (levels > system.dimension()) fail(ErrorCode::invalid_argument, "metric_rates: more levels than the basis");
    if (system.protocol().derivative(t).isZero(0.0)) return RVector::Zero(static_cast<Eigen::Index>(levels));
    const Spectrum s = spectrum(system.h0(t));
    return rate_sums(s, rate_elements(s, system.h0_rate(t), levels), levels);
}

FidelityDecay fidelity_decay_check(const std::function<double(double)>& overlap, double metric_rate, double dt) {
    if (!(dt > 0.0)) fail(ErrorCode::invalid_argument, "fidelity_decay_check: dt must be positive");
    FidelityDecay out;
    out.residual = std::abs((1.0 - overlap(dt)) - 0.5 * metric_rate * dt * dt);
    out.residual_half = std::abs((1.0 - overlap(0.5 * dt)) - 0.125 * metric_rate * dt * dt);
    out.slope = (out.residual > 0.0 && out.residual_half > 0.0) ? std::log2(out.residual / out.residual_half) : 0.0;
    return out;
}

FidelityDecay fidelity_decay_check(const DrivenSystem& system, std::size_t level, double t, double dt) {
    if (t + dt > system.duration()) fail(ErrorCode::invalid_argument, "fidelity_decay_check: t + dt beyond tau");
    const Spectrum now = spectrum(system.h0(t));
    check_level(now, level);
    const auto n = static_cast<Eigen::Index>(level);
    const CVector reference = now.eigenvectors.col(n);
    auto overlap = [&](double step) {
        const Spectrum later = spectrum(system.h0(t + step));
        return std::abs(reference.dot(later.eigenvectors.col(n)));
    };
    return fidelity_decay_check(overlap, metric_rates(system, t, level + 1)(n), dt);
}

LengthResult metric_length(const DrivenSystem& system, const ThermalEnsemble& ensemble,
                           const QuadratureOptions& options) {
    auto integrand = [&](double t) {
        return std::sqrt(std::max(0.0, ensemble.weights.dot(metric_rates(system, t, ensemble.size()))));
    };
    const QuadratureResult q = adaptive_simpson(integrand, 0.0, system.duration(), options);
    return {q.value, q.error_estimate, q.nodes};
}

double eta_rate(const DrivenSystem& system, const ThermalEnsemble& ensemble, double t) {
    if (system.protocol().derivative(t).isZero(0.0)) return 0.0;
    const Spectrum s = spectrum(system.h0(t));
    const std::size_t kept = ensemble.size();
    const CMatrix x = rate_elements(s, system.h0_rate(t), kept);
    const RVector& e = s.eigenvalues;
    const RVector& p = ensemble.weights;
    double sum = 0.0;
    for (Eigen::Index n = 0; n < static_cast<Eigen::Index>(kept); ++n) {
        for (Eigen::Index k = 0; k < e.size(); ++k) {
            if (k == n) continue;
            const double gap = e(k) - e(n);
            const double weight = std::norm(x(k, n));
            if (std::abs(gap) < gap_floor(s)) {
                if (weight > 1e-24) fail(ErrorCode::degeneracy, "eta_rate: coupled degenerate levels");
                continue;
            }
            const double m = weight / (gap * gap);
            if (k < static_cast<Eigen::Index>(kept)) {
                // Each unordered kept pair appears twice, which cancels the 1/2.
                sum += 0.5 * (p(n) - p(k)) * (p(n) - p(k)) / (p(n) + p(k)) * m;
            } else {
                sum += p(n) * m;
            }
        }
    }
    return sum;
}

LengthResult eta_length(const DrivenSystem& system, const ThermalEnsemble& ensemble, const QuadratureOptions& options) {
    auto integrand = [&](double t) { return std::sqrt(std::max(0.0, eta_rate(system, ensemble, t))); };
    const QuadratureResult q = adaptive_simpson(integrand, 0.0, system.duration(), options);
    return {q.value, q.error_estimate, q.nodes};
}

HermitianOperator ensemble_state(const DrivenSystem& system, const ThermalEnsemble& ensemble, double t) {
    const Spectrum s = spectrum(system.h0(t));
    const auto kept = static_cast<Eigen::Index>(ensemble.size());
    const CMatrix v = s.eigenvectors.leftCols(kept);
    return HermitianOperator(CMatrix(v * ensemble.weights.cast<Complex>().asDiagonal() * v.adjoint()));
}

namespace {

void check_state(const HermitianOperator& rho, const char* name) {
    const double trace = rho.matrix().trace().real();
    if (std::abs(trace - 1.0) > 1e-10) {
        std::ostringstream msg;
        msg << "bures_fidelity: " << name << " has trace " << trace;
        fail(ErrorCode::not_a_state, msg.str());
    }
    const Spectrum s = spectrum(rho);
    if (s.eigenvalues(0) < -1e-10) {
        std::ostringstream msg;
        msg << "bures_fidelity: " << name << " has eigenvalue " << s.eigenvalues(0);
        fail(ErrorCode::not_a_state, msg.str());
    }
}

/// V sqrt(r) over the eigenvalues above rounding level, so that A A^dagger = rho.
CMatrix support_factor(const HermitianOperator& rho) {
    const Spectrum r = spectrum(rho);
    const double cutoff = 1e-14 * std::max(1.0, r.norm);
    std::vector<Eigen::Index> support;
    for (Eigen::Index i = 0; i < r.eigenvalues.size(); ++i)
        if (r.eigenvalues(i) > cutoff) support.push_back(i);
    CMatrix a(rho.matrix().rows(), static_cast<Eigen::Index>(support.size()));
    for (std::size_t j = 0; j < support.size(); ++j)
        a.col(static_cast<Eigen::Index>(j)) = r.eigenvectors.col(support[j]) * std::sqrt(r.eigenvalues(support[j]));
    return a;
}

}  // namespace

double bures_fidelity(const HermitianOperator& rho, const HermitianOperator& sigma) {
    if (rho.dimension() != sigma.dimension()) fail(ErrorCode::invalid_argument, "bures_fidelity: dimension mismatch");
    check_state(rho, "rho");
    check_state(sigma, "sigma");

    // F = ||sqrt(sigma) sqrt(rho)||_1^2, with each root factored on its support.
    const CMatrix a = support_factor(rho);
    const CMatrix b = support_factor(sigma);
    if (a.cols() == 0 || b.cols() == 0) return 0.0;
    const Eigen::JacobiSVD<CMatrix> svd(b.adjoint() * a);
    const double root_trace = svd.singularValues().sum();
    return std::clamp(root_trace * root_trace, 0.0, 1.0);
}

double bures_length(const HermitianOperator& rho, const HermitianOperator& sigma) {
    return std::acos(std::sqrt(bures_fidelity(rho, sigma)));
}

PathLengths path_lengths(const DrivenSystem& system, const ThermalEnsemble& ensemble,
                         const QuadratureOptions& options, bool include_eta) {
    PathLengths out;
    out.metric_length = metric_length(system, ensemble, options).value;
    out.bures_length = bures_length(ensemble_state(system, ensemble, 0.0),
                                    ensemble_state(system, ensemble, system.duration()));
    out.eta_length = include_eta ? eta_length(system, ensemble, options).value : out.metric_length;
    return out;
}

SpeedLimitReport speed_limit_report(const DrivenSystem& system, const ThermalEnsemble& ensemble,
                                    const SpeedLimitOptions& options) {
    if (options.grid_points < 3) fail(ErrorCode::invalid_argument, "speed_limit_report: grid too coarse");
    const double tau = system.duration();
    const std::vector<double> grid = uniform_grid(tau, options.grid_points);
    std::vector<double> excess(grid.size()), energy(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        excess[i] = std::sqrt(std::max(0.0, excess_variance_geometric(system, ensemble, grid[i])));
        energy[i] = std::sqrt(std::max(0.0, ensemble_energy_variance(system, ensemble, grid[i]).cd_variance));
    }

    SpeedLimitReport r;
    r.tau = tau;
    r.mean_excess_fluctuation = composite_simpson(excess, 0.0, tau) / tau;
    r.mean_energy_fluctuation = composite_simpson(energy, 0.0, tau) / tau;
    const PathLengths lengths =
        options.lengths ? *options.lengths : path_lengths(system, ensemble, options.quadrature, options.include_eta);
    r.metric_length = lengths.metric_length;
    r.bures_length = lengths.bures_length;
    r.eta_length = lengths.eta_length;
    auto bound = [&](double fluctuation) {
        if (r.bures_length <= 1e-12) return 0.0;
        return fluctuation > 0.0 ? r.bures_length / fluctuation : std::numeric_limits<double>::infinity();
    };
    r.excess_bound = bound(r.mean_excess_fluctuation);
    r.energy_bound = bound(r.mean_energy_fluctuation);

    r.equality_holds = std::abs(tau * r.mean_excess_fluctuation - r.metric_length) <= 1e-6 * r.metric_length;
    r.chain_holds = r.bures_length <= r.eta_length + 1e-8 && r.eta_length <= r.metric_length + 1e-8;
    const double slack = 1e-12 * std::max(1.0, tau);
    r.ordering_holds = tau + slack >= r.excess_bound && r.excess_bound + slack >= r.energy_bound;
    return r;
}

}  // namespace cdwork
