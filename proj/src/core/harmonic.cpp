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

#include "cdwork/models/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cdwork/errors.hpp"

namespace cdwork::ho {

namespace {

// (a^dagger)^2 matrix element <n + 2| a^dagger a^dagger |n>.
double pair_element(Eigen::Index n) {
    return std::sqrt(static_cast<double>(n + 1) * static_cast<double>(n + 2));
}

double scalar(const RVector& lambda) {
    if (lambda.size() != 1) fail(ErrorCode::invalid_argument, "HarmonicOscillator: expects one parameter");
    return lambda(0);
}

}  // namespace

HarmonicOscillator::HarmonicOscillator(std::size_t fock_dim, double reference_frequency, double mass)
    : fock_dim_(fock_dim), omega_ref_(reference_frequency), mass_(mass) {
    if (fock_dim_ < 3) fail(ErrorCode::invalid_argument, "HarmonicOscillator: Fock dimension too small");
    if (!(omega_ref_ > 0.0) || !(mass_ > 0.0))
        fail(ErrorCode::invalid_argument, "HarmonicOscillator: reference frequency and mass must be positive");
}

// With ladder operators at (m, omega_ref):
//   q^2 = (a + a^dagger)^2 / (2 m omega_ref),  p^2 = -(m omega_ref / 2)(a^dagger - a)^2,
// so H0 = (omega_ref/4 + omega^2/(4 omega_ref))(2n + 1) + (omega^2/(4 omega_ref) - omega_ref/4)(a^2 + a^dagger^2).
// Building the squares directly keeps the truncated matrices exact in every retained row.
HermitianOperator HarmonicOscillator::h0_matrix(double omega) const {
    const auto d = static_cast<Eigen::Index>(fock_dim_);
    const double diag = 0.25 * omega_ref_ + omega * omega / (4.0 * omega_ref_);
    const double off = omega * omega / (4.0 * omega_ref_) - 0.25 * omega_ref_;
    RMatrix h = RMatrix::Zero(d, d);
    for (Eigen::Index n = 0; n < d; ++n) h(n, n) = diag * static_cast<double>(2 * n + 1);
    for (Eigen::Index n = 0; n + 2 < d; ++n) h(n, n + 2) = h(n + 2, n) = off * pair_element(n);
    return HermitianOperator(h);
}

HermitianOperator HarmonicOscillator::q_squared() const {
    const auto d = static_cast<Eigen::Index>(fock_dim_);
    const double scale = 1.0 / (2.0 * mass_ * omega_ref_);
    RMatrix q2 = RMatrix::Zero(d, d);
    for (Eigen::Index n = 0; n < d; ++n) q2(n, n) = scale * static_cast<double>(2 * n + 1);
    for (Eigen::Index n = 0; n + 2 < d; ++n) q2(n, n + 2) = q2(n + 2, n) = scale * pair_element(n);
    return HermitianOperator(q2);
}

// qp + pq = i (a^dagger^2 - a^2) for any reference frequency.
HermitianOperator HarmonicOscillator::h1_matrix(double omega, double omega_rate) const {
    const auto d = static_cast<Eigen::Index>(fock_dim_);
    const double c = -auxiliary_scale_ * omega_rate / (4.0 * omega);
    CMatrix h = CMatrix::Zero(d, d);
    for (Eigen::Index n = 0; n + 2 < d; ++n) {
        h(n + 2, n) = Complex(0.0, c * pair_element(n));
        h(n, n + 2) = Complex(0.0, -c * pair_element(n));
    }
    return HermitianOperator(h);
}

HermitianOperator HarmonicOscillator::hamiltonian(const RVector& lambda) const { return h0_matrix(scalar(lambda)); }

HermitianOperator HarmonicOscillator::parameter_derivative(const RVector& lambda, std::size_t mu) const {
    if (mu != 0) fail(ErrorCode::invalid_argument, "HarmonicOscillator: parameter index out of range");
    return q_squared() * (mass_ * scalar(lambda));
}

std::optional<HermitianOperator> HarmonicOscillator::analytic_auxiliary(const RVector& lambda,
                                                                       const RVector& rate) const {
    return h1_matrix(scalar(lambda), scalar(rate));
}

void HOConfig::validate() const {
    if (fock_dim < 40) fail(ErrorCode::invalid_argument, "HOConfig: Fock dimension must be at least 40");
    if (!(omega_i > 0.0) || !(omega_f > 0.0)) fail(ErrorCode::invalid_argument, "HOConfig: frequencies must be positive");
    if (!(tau > 0.0)) fail(ErrorCode::invalid_argument, "HOConfig: tau must be positive");
    if (!(mass > 0.0)) fail(ErrorCode::invalid_argument, "HOConfig: mass must be positive");
    const Protocol p = ramp(omega_i, omega_f, tau);
    for (double t : uniform_grid(tau, 2001))
        if (!(p.value(t)(0) > 0.0)) fail(ErrorCode::invalid_argument, "HOConfig: omega(t) must stay positive");
}

double drive_strength(const Protocol& protocol) {
    double worst = 0.0;
    for (double t : uniform_grid(protocol.duration(), 2001)) {
        const double w = protocol.value(t)(0);
        const double r = protocol.derivative(t)(0);
        worst = std::max(worst, r * r / (4.0 * w * w * w * w));
    }
    return worst;
}

double HOConfig::drive_strength() const { return ho::drive_strength(ramp(omega_i, omega_f, tau)); }

void HOConfig::require_bound_cd_spectrum() const {
    const double strength = drive_strength();
    if (strength >= 1.0) {
        std::ostringstream msg;
        msg << "HOConfig: omega_dot^2/(4 omega^4) reaches " << strength << " >= 1 at tau = " << tau
            << "; H_CD has no bound spectrum";
        fail(ErrorCode::supercritical_drive, msg.str());
    }
}

Protocol ramp(double omega_i, double omega_f, double tau) {
    return scalar_protocol(omega_i, omega_f, tau, smoothstep5, smoothstep5_rate);
}

Protocol log_ramp(double omega_i, double omega_f, double tau) {
    if (!(omega_i > 0.0) || !(omega_f > 0.0)) fail(ErrorCode::invalid_argument, "log_ramp: frequencies must be positive");
    const double log_ratio = std::log(omega_f / omega_i);
    RVector a(1), b(1);
    a << omega_i;
    b << omega_f;
    return {tau, a, b,
            [=](double t) {
                RVector v(1);
                v << omega_i * std::exp(log_ratio * smoothstep5(t / tau));
                return v;
            },
            [=](double t) {
                RVector v(1);
                v << omega_i * std::exp(log_ratio * smoothstep5(t / tau)) * log_ratio * smoothstep5_rate(t / tau) / tau;
                return v;
            }};
}

DrivenSystem make_system(const HOConfig& config) {
    return make_system(config, ramp(config.omega_i, config.omega_f, config.tau));
}

DrivenSystem make_system(const HOConfig& config, const Protocol& protocol) {
    config.validate();
    return {std::make_shared<HarmonicOscillator>(config.fock_dim, config.omega_i, config.mass), protocol};
}

Complex CdEigenstate::wavefunction(double q) const {
    const double squeeze = std::sqrt(1.0 - omega_rate * omega_rate / (4.0 * std::pow(omega, 4)));
    const double alpha = mass * omega * squeeze;
    const double x = std::sqrt(alpha) * q;
    // Normalized Hermite functions by the stable three-term recurrence.
    double prev = 0.0;
    double cur = std::pow(alpha / std::numbers::pi, 0.25) * std::exp(-0.5 * x * x);
    for (std::size_t k = 0; k < level; ++k) {
        const double kk = static_cast<double>(k);
        const double next = std::sqrt(2.0 / (kk + 1.0)) * x * cur - std::sqrt(kk / (kk + 1.0)) * prev;
        prev = cur;
        cur = next;
    }
    const double chirp = mass * omega_rate * q * q / (4.0 * omega);
    return cur * std::exp(Complex(0.0, chirp));
}

CdEigenstate cd_exact_eigensystem(double omega, double omega_rate, std::size_t level, double mass) {
    if (!(omega > 0.0)) fail(ErrorCode::invalid_argument, "cd_exact_eigensystem: omega must be positive");
    const double strength = omega_rate * omega_rate / (4.0 * std::pow(omega, 4));
    if (strength >= 1.0) fail(ErrorCode::supercritical_drive, "cd_exact_eigensystem: omega_dot^2/(4 omega^4) >= 1");
    CdEigenstate e;
    e.level = level;
    e.omega = omega;
    e.omega_rate = omega_rate;
    e.mass = mass;
    e.energy = omega * std::sqrt(1.0 - strength) * (static_cast<double>(level) + 0.5);
    return e;
}

double ho_metric(double omega, std::size_t level) noexcept {
    const double n = static_cast<double>(level);
    return (n * n + n + 1.0) / (8.0 * omega * omega);
}

}  // namespace cdwork::ho
