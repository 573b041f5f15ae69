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

#include <cmath>
#include <numbers>

#include "cdwork/errors.hpp"
#include "cdwork/fit.hpp"
#include "cdwork/geometry.hpp"
#include "cdwork/models/ising.hpp"
#include "doctest.h"

using namespace cdwork;

namespace {

struct Dense {
    double energy;
    double metric;
    Eigen::VectorXd ground;
};

/// Ground state of the dense 2^N chain with its perturbative metric.
Dense dense_ground(double lambda, std::size_t n) {
    const RMatrix h = ising::full_hamiltonian(lambda, n);
    const RMatrix dh = ising::full_hamiltonian(1.0, n) - ising::full_hamiltonian(0.0, n);
    Eigen::SelfAdjointEigenSolver<RMatrix> es(h);
    const Eigen::VectorXd v0 = es.eigenvectors().col(0);
    const Eigen::VectorXd w = dh * v0;
    double g = 0.0;
    for (Eigen::Index m = 1; m < es.eigenvalues().size(); ++m) {
        const double gap = es.eigenvalues()(m) - es.eigenvalues()(0);
        const double e = es.eigenvectors().col(m).dot(w);
        if (std::abs(e) > 1e-13) g += e * e / (gap * gap);
    }
    return {es.eigenvalues()(0), g, v0};
}

}  // namespace

TEST_CASE("mode energies") {
    CHECK(ising::mode_energy(0.0, 0.4) == doctest::Approx(2.0));
    CHECK(ising::mode_energy(1.0, 1e-9) < 1e-8);
    for (double k : ising::momenta(16)) CHECK(ising::mode_energy(1.3, k) > 0.0);
}

TEST_CASE("free fermions against the dense chain") {
    for (std::size_t n : {4u, 8u}) {
        for (double lambda : {0.4, 1.5, 2.0}) {
            const Dense d = dense_ground(lambda, n);
            CHECK(std::abs(ising::ground_energy(lambda, n) - d.energy) < 1e-10);
            CHECK(std::abs(ising::ground_metric(lambda, n) - d.metric) < 1e-8);
            const Dense e = dense_ground(lambda + 0.1, n);
            CHECK(std::abs(ising::ground_overlap(lambda, lambda + 0.1, n) - std::abs(d.ground.dot(e.ground))) < 1e-8);
        }
    }
    CHECK(ising::ground_metric(2.0, 4) == doctest::Approx(0.02854).epsilon(2e-4));
}

TEST_CASE("momentum-sector chain against the dense chain") {
    const std::size_t n = 8;
    const ising::ExactChain chain(n);
    for (double lambda : {0.6, 1.0, 1.8}) {
        RVector l(1);
        l << lambda;
        const Spectrum s = spectrum(chain.hamiltonian(l));
        CHECK(std::abs(s.eigenvalues(0) - dense_ground(lambda, n).energy) < 1e-10);
        CHECK(std::abs(qgt(chain, l, 0).g(0, 0) - dense_ground(lambda, n).metric) < 1e-8);
    }
}

TEST_CASE("critical metric identity") {
    CHECK(ising::ground_metric(1.0, 4) == doctest::Approx(0.375).epsilon(1e-14));
    for (std::size_t n = 4; n <= 4096; n *= 2) {
        const double exact = static_cast<double>(n * (n - 1)) / 32.0;
        CHECK(std::abs(ising::ground_metric(1.0, n) - exact) <= 1e-10 * exact);
    }
}

TEST_CASE("off-critical metric scaling") {
    // Thermodynamic-limit density g/N = 1 / (16 l^2 (l^2 - 1)).
    std::vector<double> x, y, xs, ys;
    for (int i = 0; i <= 10; ++i) {
        const double eps = 0.01 + 0.009 * i;
        x.push_back(eps);
        y.push_back(1.0 / (16.0 * (1 + eps) * (1 + eps) * ((1 + eps) * (1 + eps) - 1.0)));
        const double e2 = 1e-3 * std::pow(10.0, i / 10.0);
        xs.push_back(e2);
        ys.push_back(ising::ground_metric(1.0 + e2, 8192) / 8192.0);
    }
    CHECK(fit_power_law(x, y).exponent == doctest::Approx(-1.088).epsilon(0.005));
    CHECK(std::abs(fit_power_law(xs, ys).exponent + 1.0) < 0.05);
}

TEST_CASE("excess trajectory") {
    const Protocol p = ising::sweep(1.0, 1.0);
    const auto grid = uniform_grid(1.0, 201);
    const auto traj = ising::cd_excess_trajectory(64, p, grid);
    CHECK(traj.front().excess_variance == 0.0);
    CHECK(traj.back().excess_variance == 0.0);
    std::size_t peak = 0;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        CHECK(traj[i].excess_variance >= 0.0);
        CHECK(traj[i].excess_variance == doctest::Approx(ising::ground_metric(traj[i].lambda, 64) * traj[i].lambda_rate * traj[i].lambda_rate));
        if (traj[i].excess_variance > traj[peak].excess_variance) peak = i;
    }
    CHECK(std::abs(traj[peak].lambda - 1.0) < 0.05);
    // Single peak: monotone up to the maximum, then down.
    for (std::size_t i = 1; i <= peak; ++i) CHECK(traj[i].excess_variance >= traj[i - 1].excess_variance);
    for (std::size_t i = peak + 1; i < traj.size(); ++i) CHECK(traj[i].excess_variance <= traj[i - 1].excess_variance);

    const auto slow = ising::cd_excess_trajectory(64, ising::sweep(1.0, 2.0), uniform_grid(2.0, 201));
    for (std::size_t i = 0; i < traj.size(); ++i) CHECK(slow[i].excess_variance == doctest::Approx(traj[i].excess_variance / 4.0));
}

TEST_CASE("integrated cost is protocol independent") {
    for (std::size_t n : {32u, 128u}) {
        const double path = ising::integrated_cost(n, 1.0).value;
        CHECK(ising::integrated_cost(n, ising::sweep(1.0, 0.7)).value == doctest::Approx(path).epsilon(1e-6));
        CHECK(ising::integrated_cost(n, ising::sweep_quintic(1.0, 3.0)).value == doctest::Approx(path).epsilon(1e-6));
    }
}

TEST_CASE("critical scaling fit") {
    const ising::CriticalScaling s = ising::scaling_fit({32, 64, 128, 256, 512, 1024}, 1.0);
    CHECK(s.window_ok());
    CHECK(s.exponent >= 0.50);
    CHECK(s.exponent <= 0.53);
    CHECK(s.residual_rms < 0.02);
    CHECK_THROWS_AS(ising::scaling_fit({32, 64}, 1.0), Error);
    // Point value at the critical coupling grows linearly: sqrt(N (N - 1) / 32).
    CHECK(std::sqrt(ising::ground_metric(1.0, 2048) / ising::ground_metric(1.0, 1024)) == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("invalid sizes") {
    CHECK_THROWS_AS(ising::ground_energy(1.0, 5), Error);
    CHECK_THROWS_AS(ising::ExactChain(18), Error);
}
