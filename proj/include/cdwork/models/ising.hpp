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

#include <memory>
#include <vector>

#include "cdwork/fit.hpp"
#include "cdwork/model.hpp"
#include "cdwork/quadrature.hpp"

namespace cdwork::ising {

/// H0 = -sum_n (sx_n sx_{n+1} + lambda sz_n), periodic, N even. Everything here
/// works in the even-parity sector through its free-fermion form with
/// momenta k_m = (2m - 1) pi / N, m = 1..N/2.
struct IsingConfig {
    std::size_t sites = 64;
    double delta = 1.0;
    double tau = 1.0;

    void validate() const;
};

std::vector<double> momenta(std::size_t sites);

/// 2 sqrt(lambda^2 - 2 lambda cos k + 1).
double mode_energy(double lambda, double k) noexcept;
double ground_energy(double lambda, std::size_t sites);
/// g_lambda_lambda = sum_k sin^2 k / (4 (lambda^2 - 2 lambda cos k + 1)^2).
double ground_metric(double lambda, std::size_t sites);
/// Bogoliubov angle theta_k = atan2(sin k, lambda - cos k).
double bogoliubov_angle(double lambda, double k) noexcept;
/// |<0(a)|0(b)>| = prod_k |cos((theta_k(a) - theta_k(b)) / 2)|.
double ground_overlap(double a, double b, std::size_t sites);

/// lambda(t) = 1 + delta - 6 delta s^2 + 4 delta s^3.
Protocol sweep(double delta, double tau);
/// Alternative shape through the same endpoints (quintic smoothstep).
Protocol sweep_quintic(double delta, double tau);

struct ExcessSample {
    double t = 0.0;
    double lambda = 0.0;
    double lambda_rate = 0.0;
    double excess_variance = 0.0; ///< delta(Delta W)^2 = g lambda_dot^2
    double excess_fluctuation = 0.0; ///< its square root
};

/// Ground state, beta = inf: the adiabatic variance vanishes identically.
std::vector<ExcessSample> cd_excess_trajectory(std::size_t sites, const Protocol& protocol,
                                               const std::vector<double>& grid);

/// tau <delta Delta W>_tau = int |dlambda| sqrt(g) over [1 - delta, 1 + delta],
/// split at the critical point.
QuadratureResult integrated_cost(std::size_t sites, double delta, const QuadratureOptions& options = {});
/// Same quantity as a time integral along a protocol.
QuadratureResult integrated_cost(std::size_t sites, const Protocol& protocol, const QuadratureOptions& options = {});

struct CriticalScaling {
    double exponent = 0.0;
    double exponent_stderr = 0.0;
    double residual_rms = 0.0;
    std::vector<std::size_t> sites;
    std::vector<double> costs;
    [[nodiscard]] bool window_ok() const;
};

/// Fits tau <delta Delta W>_tau ~ N^alpha. Throws ErrorCode::invalid_argument when
/// fewer than 5 sizes or less than 1.5 decades are supplied.
CriticalScaling scaling_fit(const std::vector<std::size_t>& sites, double delta,
                            const QuadratureOptions& options = {});

/// Dense exact diagonalization in the zero-momentum, even-parity spin sector
/// (N <= 16). Used as the independent oracle for the free-fermion formulas.
class ExactChain final : public ParametricModel {
public:
    explicit ExactChain(std::size_t sites);

    [[nodiscard]] std::size_t dimension() const override { return dimension_; }
    [[nodiscard]] std::size_t parameter_count() const override { return 1; }
    [[nodiscard]] HermitianOperator hamiltonian(const RVector& lambda) const override;
    [[nodiscard]] HermitianOperator parameter_derivative(const RVector& lambda, std::size_t mu) const override;

    [[nodiscard]] std::size_t sites() const noexcept { return sites_; }

private:
    std::size_t sites_;
    std::size_t dimension_ = 0;
    RMatrix coupling_;   ///< -sum sx sx block
    RVector field_;      ///< diagonal of -sum sz
};

/// Full 2^N dense Hamiltonian (N <= 12), no symmetry reduction.
RMatrix full_hamiltonian(double lambda, std::size_t sites);

}  // namespace cdwork::ising
