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
#include <memory>

#include "cdwork/model.hpp"

namespace cdwork::ho {

/// Frequency-ramped oscillator H0 = p^2 / 2m + m omega^2 q^2 / 2 in a truncated
/// Fock basis built at the fixed reference frequency omega_ref. The single
/// parameter is omega.
class HarmonicOscillator final : public ParametricModel {
public:
    HarmonicOscillator(std::size_t fock_dim, double reference_frequency, double mass = 1.0);

    [[nodiscard]] std::size_t dimension() const override { return fock_dim_; }
    [[nodiscard]] std::size_t parameter_count() const override { return 1; }
    [[nodiscard]] HermitianOperator hamiltonian(const RVector& lambda) const override;
    [[nodiscard]] HermitianOperator parameter_derivative(const RVector& lambda, std::size_t mu) const override;
    /// H1 = -(omega_dot / 4 omega)(qp + pq), scaled by auxiliary_scale().
    [[nodiscard]] std::optional<HermitianOperator> analytic_auxiliary(const RVector& lambda,
                                                                     const RVector& rate) const override;
    /// Lowest third of the basis.
    [[nodiscard]] std::size_t trusted_levels() const override { return fock_dim_ / 3; }

    [[nodiscard]] double reference_frequency() const noexcept { return omega_ref_; }
    [[nodiscard]] double mass() const noexcept { return mass_; }

    /// Test hook: multiplies the closed-form auxiliary term (1 = physical).
    void set_auxiliary_scale(double scale) noexcept { auxiliary_scale_ = scale; }
    [[nodiscard]] double auxiliary_scale() const noexcept { return auxiliary_scale_; }

    [[nodiscard]] HermitianOperator h0_matrix(double omega) const;
    [[nodiscard]] HermitianOperator h1_matrix(double omega, double omega_rate) const;
    /// Position operator q^2 in the reference basis (so dH0/domega = m omega q^2).
    [[nodiscard]] HermitianOperator q_squared() const;

private:
    std::size_t fock_dim_;
    double omega_ref_;
    double mass_;
    double auxiliary_scale_ = 1.0;
};

struct HOConfig {
    double omega_i = 1.0;
    double omega_f = 3.0;
    double tau = 0.8;
    std::size_t fock_dim = 120;
    double mass = 1.0;

    /// D >= 40, omega_i, omega_f, tau, mass > 0 and omega(t) > 0 on a dense grid.
    /// Throws ErrorCode::invalid_argument.
    void validate() const;
    /// max_t omega_dot^2 / (4 omega^4) on a dense grid; H_CD has a bound
    /// spectrum only while this stays below 1.
    [[nodiscard]] double drive_strength() const;
    /// Throws ErrorCode::supercritical_drive when drive_strength() >= 1.
    void require_bound_cd_spectrum() const;
};

/// omega(t) = omega_i + 10 d s^3 - 15 d s^4 + 6 d s^5, d = omega_f - omega_i, s = t / tau.
Protocol ramp(double omega_i, double omega_f, double tau);

/// ln omega following the same quintic shape (geodesic speed of the ground
/// state metric, smoothed at the ends).
Protocol log_ramp(double omega_i, double omega_f, double tau);

/// max_t omega_dot^2 / (4 omega^4) of any frequency protocol on a 2001-point grid.
double drive_strength(const Protocol& protocol);

DrivenSystem make_system(const HOConfig& config);
DrivenSystem make_system(const HOConfig& config, const Protocol& protocol);

/// Closed-form H_CD eigenpair of the generalized oscillator
/// p^2/2m + m omega^2 q^2/2 - (omega_dot/4 omega)(qp + pq).
struct CdEigenstate {
    std::size_t level = 0;
    double energy = 0.0;
    double omega = 0.0;
    double omega_rate = 0.0;
    double mass = 1.0;
    /// psi_n(q): Hermite function of width set by omega sqrt(1 - omega_dot^2/4 omega^4),
    /// times the chirp exp(i m omega_dot q^2 / 4 omega).
    [[nodiscard]] Complex wavefunction(double q) const;
};

/// Throws ErrorCode::supercritical_drive if omega_dot^2 / (4 omega^4) >= 1.
CdEigenstate cd_exact_eigensystem(double omega, double omega_rate, std::size_t level, double mass = 1.0);

/// g^(n)_{omega omega} = (n^2 + n + 1) / (8 omega^2).
double ho_metric(double omega, std::size_t level) noexcept;

}  // namespace cdwork::ho
