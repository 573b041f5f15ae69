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

#include "cdwork/models/ising.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <unordered_map>

#include "cdwork/errors.hpp"

namespace cdwork::ising {

void IsingConfig::validate() const {
    if (sites < 4 || sites % 2 != 0) fail(ErrorCode::config, "ising: sites must be even and at least 4");
    if (!(delta > 0.0) || !std::isfinite(delta)) fail(ErrorCode::config, "ising: delta must be positive");
    if (!(tau > 0.0) || !std::isfinite(tau)) fail(ErrorCode::config, "ising: tau must be positive");
}

namespace {

void check_sites(std::size_t sites) {
    if (sites < 2 || sites % 2 != 0) fail(ErrorCode::invalid_argument, "ising: sites must be even");
}

}  // namespace

std::vector<double> momenta(std::size_t sites) {
    check_sites(sites);
    std::vector<double> k(sites / 2);
    for (std::size_t m = 1; m <= sites / 2; ++m)
        k[m - 1] = static_cast<double>(2 * m - 1) * std::numbers::pi / static_cast<double>(sites);
    return k;
}

double mode_energy(double lambda, double k) noexcept {
    return 2.0 * std::sqrt(std::max(0.0, lambda * lambda - 2.0 * lambda * std::cos(k) + 1.0));
}

double ground_energy(double lambda, std::size_t sites) {
    double sum = 0.0;
    for (double k : momenta(sites)) sum -= mode_energy(lambda, k);
    return sum;
}

double ground_metric(double lambda, std::size_t sites) {
    double sum = 0.0;
    for (double k : momenta(sites)) {
        const double s = std::sin(k);
        const double d = lambda * lambda - 2.0 * lambda * std::cos(k) + 1.0;
        sum += s * s / (4.0 * d * d);
    }
    return sum;
}

double bogoliubov_angle(double lambda, double k) noexcept { return std::atan2(std::sin(k), lambda - std::cos(k)); }

double ground_overlap(double a, double b, std::size_t sites) {
    double product = 1.0;
    for (double k : momenta(sites)) product *= std::abs(std::cos(0.5 * (bogoliubov_angle(a, k) - bogoliubov_angle(b, k))));
    return product;
}

Protocol sweep(double delta, double tau) {
    return scalar_protocol(1.0 + delta, 1.0 - delta, tau, smoothstep3, smoothstep3_rate);
}

Protocol sweep_quintic(double delta, double tau) {
    return scalar_protocol(1.0 + delta, 1.0 - delta, tau, smoothstep5, smoothstep5_rate);
}

std::vector<ExcessSample> cd_excess_trajectory(std::size_t sites, const Protocol& protocol,
                                               const std::vector<double>& grid) {
    check_sites(sites);
    if (protocol.dimension() != 1) fail(ErrorCode::invalid_argument, "ising: protocol must be scalar");
    std::vector<ExcessSample> out;
    out.reserve(grid.size());
    for (double t : grid) {
        ExcessSample s;
        s.t = t;
        s.lambda = protocol.value(t)(0);
        s.lambda_rate = protocol.derivative(t)(0);
        s.excess_variance = s.lambda_rate == 0.0 ? 0.0 : ground_metric(s.lambda, sites) * s.lambda_rate * s.lambda_rate;
        s.excess_fluctuation = std::sqrt(s.excess_variance);
        out.push_back(s);
    }
    return out;
}

QuadratureResult integrated_cost(std::size_t sites, double delta, const QuadratureOptions& options) {
    check_sites(sites);
    if (!(delta > 0.0)) return {};
    auto integrand = [sites](double lambda) { return std::sqrt(ground_metric(lambda, sites)); };
    const QuadratureResult below = adaptive_simpson(integrand, 1.0 - delta, 1.0, options);
    const QuadratureResult above = adaptive_simpson(integrand, 1.0, 1.0 + delta, options);
    return {below.value + above.value, below.error_estimate + above.error_estimate, below.nodes + above.nodes};
}

QuadratureResult integrated_cost(std::size_t sites, const Protocol& protocol, const QuadratureOptions& options) {
    check_sites(sites);
    if (protocol.dimension() != 1) fail(ErrorCode::invalid_argument, "ising: protocol must be scalar");
    auto integrand = [&](double t) {
        const double rate = protocol.derivative(t)(0);
        return rate == 0.0 ? 0.0 : std::sqrt(ground_metric(protocol.value(t)(0), sites)) * std::abs(rate);
    };
    const double tau = protocol.duration();
    auto offset = [&](double t) { return protocol.value(t)(0) - 1.0; };
    double lo = 0.0, hi = tau;
    if (offset(lo) * offset(hi) >= 0.0) return adaptive_simpson(integrand, 0.0, tau, options);
    // The sweep is monotone, so bisection locates the single critical crossing.
    for (int i = 0; i < 200 && hi - lo > 1e-15 * tau; ++i) {
        const double mid = 0.5 * (lo + hi);
        (offset(lo) * offset(mid) <= 0.0 ? hi : lo) = mid;
    }
    const double crossing = 0.5 * (lo + hi);
    const QuadratureResult first = adaptive_simpson(integrand, 0.0, crossing, options);
    const QuadratureResult second = adaptive_simpson(integrand, crossing, tau, options);
    return {first.value + second.value, first.error_estimate + second.error_estimate, first.nodes + second.nodes};
}

bool CriticalScaling::window_ok() const {
    if (sites.size() < 5) return false;
    const auto [lo, hi] = std::minmax_element(sites.begin(), sites.end());
    return std::log10(static_cast<double>(*hi) / static_cast<double>(*lo)) >= 1.5 - 1e-12;
}

CriticalScaling scaling_fit(const std::vector<std::size_t>& sites, double delta, const QuadratureOptions& options) {
    CriticalScaling out;
    out.sites = sites;
    if (!out.window_ok())
        fail(ErrorCode::invalid_argument, "scaling_fit: need at least 5 system sizes spanning 1.5 decades");
    std::vector<double> x;
    for (auto n : sites) {
        x.push_back(static_cast<double>(n));
        out.costs.push_back(integrated_cost(n, delta, options).value);
    }
    const PowerLawFit fit = fit_power_law(x, out.costs);
    out.exponent = fit.exponent;
    out.exponent_stderr = fit.exponent_stderr;
    out.residual_rms = fit.residual_rms;
    return out;
}

namespace {

using State = std::uint32_t;

State rotate(State s, std::size_t n) { return ((s << 1) | (s >> (n - 1))) & ((State{1} << n) - 1); }

// Smallest translate and the orbit length.
std::pair<State, std::size_t> representative(State s, std::size_t n) {
    State best = s;
    State cur = s;
    for (std::size_t j = 1; j <= n; ++j) {
        cur = rotate(cur, n);
        if (cur == s) return {best, j};
        best = std::min(best, cur);
    }
    return {best, n};
}

}  // namespace

ExactChain::ExactChain(std::size_t sites) : sites_(sites) {
    if (sites < 2 || sites > 16 || sites % 2 != 0)
        fail(ErrorCode::invalid_argument, "ExactChain: sites must be even and at most 16");
    const std::size_t n = sites;
    std::vector<State> reps;
    std::vector<std::size_t> orbit;
    std::unordered_map<State, std::size_t> index;
    for (State s = 0; s < (State{1} << n); ++s) {
        if (std::popcount(s) % 2 != 0) continue;
        const auto [rep, length] = representative(s, n);
        if (rep != s) continue;
        index.emplace(s, reps.size());
        reps.push_back(s);
        orbit.push_back(length);
    }
    dimension_ = reps.size();
    const auto d = static_cast<Eigen::Index>(dimension_);
    coupling_ = RMatrix::Zero(d, d);
    field_ = RVector::Zero(d);
    for (std::size_t a = 0; a < reps.size(); ++a) {
        const State s = reps[a];
        field_(static_cast<Eigen::Index>(a)) = -(static_cast<double>(n) - 2.0 * std::popcount(s));
        for (std::size_t j = 0; j < n; ++j) {
            const State flipped = s ^ (State{1} << j) ^ (State{1} << ((j + 1) % n));
            const auto [rep, length] = representative(flipped, n);
            const std::size_t b = index.at(rep);
            coupling_(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a)) -=
                std::sqrt(static_cast<double>(orbit[a]) / static_cast<double>(length));
        }
    }
}

HermitianOperator ExactChain::hamiltonian(const RVector& lambda) const {
    if (lambda.size() != 1) fail(ErrorCode::invalid_argument, "ExactChain: one parameter expected");
    RMatrix h = coupling_;
    h.diagonal() += lambda(0) * field_;
    return HermitianOperator(CMatrix(h.cast<Complex>()));
}

HermitianOperator ExactChain::parameter_derivative(const RVector& lambda, std::size_t mu) const {
    if (lambda.size() != 1 || mu != 0) fail(ErrorCode::invalid_argument, "ExactChain: one parameter expected");
    return HermitianOperator(CMatrix(field_.cast<Complex>().asDiagonal()));
}

RMatrix full_hamiltonian(double lambda, std::size_t sites) {
    if (sites < 2 || sites > 12) fail(ErrorCode::invalid_argument, "full_hamiltonian: at most 12 sites");
    const std::size_t n = sites;
    const auto d = static_cast<Eigen::Index>(std::size_t{1} << n);
    RMatrix h = RMatrix::Zero(d, d);
    for (State s = 0; s < static_cast<State>(d); ++s) {
        h(s, s) = -lambda * (static_cast<double>(n) - 2.0 * std::popcount(s));
        for (std::size_t j = 0; j < n; ++j) {
            const State flipped = s ^ (State{1} << j) ^ (State{1} << ((j + 1) % n));
            h(flipped, s) -= 1.0;
        }
    }
    return h;
}

}  // namespace cdwork::ising
