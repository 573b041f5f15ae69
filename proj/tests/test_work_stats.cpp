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
#include "cdwork/geometry.hpp"
#include "cdwork/models/harmonic.hpp"
#include "cdwork/work_stats.hpp"
#include "doctest.h"

using namespace cdwork;

namespace {

/// Boltzmann weights of the unit-spaced ladder, p_n = (1 - e^-beta) e^{-beta n}.
double boltzmann(double beta, int n) { return (1.0 - std::exp(-beta)) * std::exp(-beta * n); }

DrivenSystem figure_system(double tau = 0.8) {
    ho::HOConfig config;
    config.tau = tau;
    return ho::make_system(config);
}

/// H(lambda) = lambda sz + sx.
class LandauZener final : public ParametricModel {
public:
    [[nodiscard]] std::size_t dimension() const override { return 2; }
    [[nodiscard]] std::size_t parameter_count() const override { return 1; }
    [[nodiscard]] HermitianOperator hamiltonian(const RVector& l) const override {
        RMatrix h(2, 2);
        h << l(0), 1.0, 1.0, -l(0);
        return HermitianOperator(h);
    }
    [[nodiscard]] HermitianOperator parameter_derivative(const RVector&, std::size_t) const override {
        RMatrix d(2, 2);
        d << 1.0, 0.0, 0.0, -1.0;
        return HermitianOperator(d);
    }
};

}  // namespace

TEST_CASE("thermal ensemble of the ladder") {
    const DrivenSystem sys = figure_system();
    const ThermalEnsemble ens = thermal_ensemble(sys, 1.0);
    CHECK(ens.size() == 24);
    CHECK(ens.truncated_tail < 1e-10);
    for (int n = 0; n < 24; ++n) CHECK(ens.weights(n) == doctest::Approx(boltzmann(1.0, n) / (1.0 - std::exp(-24.0))).epsilon(1e-12));
    const ThermalEnsemble ground = thermal_ensemble(sys, kInfiniteBeta);
    CHECK(ground.size() == 1);
    CHECK(ground.weights(0) == 1.0);
}

TEST_CASE("too small a basis raises TruncationError") {
    ho::HOConfig config;
    config.fock_dim = 40;
    const DrivenSystem sys = ho::make_system(config);
    try {
        (void)thermal_ensemble(sys, 1.0);
        FAIL("expected TruncationError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::truncation);
    }
}

TEST_CASE("transition matrix is the identity at both ends and respects parity mid-ramp") {
    const DrivenSystem sys = figure_system();
    const ThermalEnsemble ens = thermal_ensemble(sys, 1.0);
    for (double t : {0.0, 0.8}) {
        const TransitionMatrix tm = transition_matrix(sys, ens, t);
        for (Eigen::Index n = 0; n < tm.entries.rows(); ++n)
            for (Eigen::Index m = 0; m < tm.entries.cols(); ++m)
                CHECK(std::abs(tm.entries(n, m) - (n == m ? 1.0 : 0.0)) < 1e-10);
    }
    const TransitionMatrix mid = transition_matrix(sys, ens, 0.4);
    for (Eigen::Index m = 1; m < mid.entries.cols(); m += 2) CHECK(mid.entries(0, m) < 1e-10);
    CHECK(mid.entries(0, 2) > 1e-4);
}

TEST_CASE("adiabatic work at the end of the ramp") {
    const DrivenSystem sys = figure_system();
    const ThermalEnsemble ens = thermal_ensemble(sys, 1.0);
    const WorkDistribution ad = work_distribution(sys, ens, 0.8, WorkTag::adiabatic);
    for (std::size_t k = 0; k < 10; ++k) {
        CHECK(ad.atoms[k].work == doctest::Approx(2.0 * (k + 0.5)).epsilon(1e-10));
        CHECK(ad.atoms[k].probability == doctest::Approx(ens.weights(static_cast<Eigen::Index>(k))).epsilon(1e-12));
    }
    // Geometric-distribution moments of the occupation number.
    const double e = std::numbers::e;
    const double nbar = 1.0 / (e - 1.0);
    CHECK(mean_work(ad) == doctest::Approx(2.0 * (nbar + 0.5)).epsilon(1e-9));
    CHECK(mean_work(ad) == doctest::Approx(2.1640).epsilon(5e-5));
    CHECK(variance_work(ad) == doctest::Approx(4.0 * e / ((e - 1.0) * (e - 1.0))).epsilon(1e-7));
    // The same moments over the 24 kept levels.
    double m1 = 0.0, m2 = 0.0;
    for (int n = 0; n < 24; ++n) {
        const double p = boltzmann(1.0, n) / (1.0 - std::exp(-24.0));
        m1 += p * 2.0 * (n + 0.5);
        m2 += p * 4.0 * (n + 0.5) * (n + 0.5);
    }
    CHECK(mean_work(ad) == doctest::Approx(m1).epsilon(1e-12));
    CHECK(variance_work(ad) == doctest::Approx(m2 - m1 * m1).epsilon(1e-11));
    CHECK(variance_work(ad) == doctest::Approx(3.6827).epsilon(5e-5));
    CHECK(total_probability(ad) == doctest::Approx(1.0).epsilon(1e-14));

    const WorkDistribution cd = work_distribution(sys, ens, 0.8, WorkTag::counterdiabatic);
    CHECK(atom_discrepancy(cd, ad) <= 1e-8);
    CHECK(std::abs(variance_work(cd) - variance_work(ad)) <= 1e-8);
}

TEST_CASE("ground-state mean work mid-ramp") {
    const DrivenSystem sys = figure_system();
    const ThermalEnsemble ens = thermal_ensemble(sys, kInfiniteBeta);
    const WorkDistribution cd = work_distribution(sys, ens, 0.4, WorkTag::counterdiabatic);
    CHECK(mean_work(cd) == doctest::Approx(0.5).epsilon(1e-9));
    double direct = 0.0;
    for (const auto& a : cd.atoms) direct += a.work * a.probability;
    CHECK(direct == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(variance_work(work_distribution(sys, ens, 0.4, WorkTag::adiabatic)) == doctest::Approx(0.0));
}

TEST_CASE("mean-work identity on the figure grid") {
    const DrivenSystem sys = figure_system();
    const ThermalEnsemble ens = thermal_ensemble(sys, 1.0);
    for (double t : uniform_grid(0.8, 33)) {
        const WorkSnapshot snap = work_snapshot(sys, ens, t);
        const double cd = mean_work(work_distribution(snap, ens, WorkTag::counterdiabatic));
        const double ad = mean_work(work_distribution(snap, ens, WorkTag::adiabatic));
        CHECK(std::abs(cd - ad) <= 1e-8);
        CHECK(identity_check_rowsum(snap) <= 1e-8);
    }
}

TEST_CASE("zero ramp does no work") {
    ho::HOConfig config;
    config.omega_f = config.omega_i;
    const DrivenSystem sys = ho::make_system(config);
    const ThermalEnsemble ens = thermal_ensemble(sys, 1.0);
    const WorkDistribution cd = work_distribution(sys, ens, 0.3, WorkTag::counterdiabatic);
    CHECK(std::abs(mean_work(cd)) < 1e-14);
    CHECK(excess_variance_direct(sys, ens, 0.3) == doctest::Approx(0.0));
    CHECK(excess_variance_geometric(sys, ens, 0.3) == 0.0);
}

TEST_CASE("excess variance at mid-ramp from the metric closed form") {
    const DrivenSystem sys = figure_system();
    const ThermalEnsemble ens = thermal_ensemble(sys, 1.0);
    const double omega = 2.0, rate = 4.6875;
    double expected = 0.0;
    for (int n = 0; n < 200; ++n) expected += boltzmann(1.0, n) * (n * n + n + 1.0) / (8.0 * omega * omega);
    expected *= rate * rate;
    CHECK(expected == doctest::Approx(1.951).epsilon(5e-4));
    const double geometric = excess_variance_geometric(sys, ens, 0.4);
    const double direct = excess_variance_direct(sys, ens, 0.4);
    CHECK(geometric == doctest::Approx(expected).epsilon(1e-8));
    CHECK(std::abs(direct - geometric) <= 1e-6 * geometric);
}

TEST_CASE("direct and geometric excess agree on the figure grid and vanish at the ends") {
    const DrivenSystem sys = figure_system();
    const ThermalEnsemble ens = thermal_ensemble(sys, 1.0);
    for (double t : uniform_grid(0.8, 41)) {
        const double direct = excess_variance_direct(sys, ens, t);
        const double geometric = excess_variance_geometric(sys, ens, t);
        if (t == 0.0 || t == 0.8) {
            CHECK(std::abs(direct) < 1e-10);
            CHECK(std::abs(geometric) < 1e-10);
        } else {
            CHECK(std::abs(direct - geometric) <= 1e-6 * geometric);
        }
    }
}

TEST_CASE("Landau-Zener row sums") {
    auto model = std::make_shared<LandauZener>();
    const DrivenSystem sys(model, scalar_protocol(-2.0, 2.0, 1.5, smoothstep5, smoothstep5_rate));
    const ThermalEnsemble ens = thermal_ensemble(sys, 0.7);
    for (double t : uniform_grid(1.5, 13)) CHECK(identity_check_rowsum(sys, ens, t) <= 1e-12);
}

TEST_CASE("energy fluctuations bound the excess") {
    for (double tau : {0.8, 1.6}) {
        const DrivenSystem sys = figure_system(tau);
        const ThermalEnsemble ens = thermal_ensemble(sys, 1.0);
        for (double t : uniform_grid(tau, 21)) {
            const EnergyFluctuation ef = ensemble_energy_variance(sys, ens, t);
            CHECK(excess_variance_direct(sys, ens, t) <= ef.cd_variance + 1e-12);
        }
    }
    // At tau = 0.4 the CD spectrum is unbounded; the excess comes from the geometric route.
    const DrivenSystem fast = figure_system(0.4);
    const ThermalEnsemble ens = thermal_ensemble(fast, 1.0);
    for (double t : uniform_grid(0.4, 21))
        CHECK(excess_variance_geometric(fast, ens, t) <= ensemble_energy_variance(fast, ens, t).cd_variance + 1e-12);
}

TEST_CASE("energy fluctuations at t = 0 are thermal") {
    const DrivenSystem sys = figure_system();
    const ThermalEnsemble ens = thermal_ensemble(sys, 1.0);
    const EnergyFluctuation ef = ensemble_energy_variance(sys, ens, 0.0);
    const double e = std::numbers::e;
    CHECK(ef.h0_variance == doctest::Approx(e / ((e - 1.0) * (e - 1.0))).epsilon(1e-7));
    CHECK(ef.cd_variance == doctest::Approx(ef.h0_variance).epsilon(1e-12));
}

TEST_CASE("ground-state energy fluctuation decomposition") {
    const DrivenSystem sys = figure_system();
    const ThermalEnsemble ens = thermal_ensemble(sys, kInfiniteBeta);
    for (double t : {0.2, 0.4, 0.6}) {
        const Spectrum s = spectrum(sys.h0(t));
        const CMatrix psi = s.eigenvectors.col(0);
        const CMatrix hcd = sys.h_cd(t).matrix();
        const CMatrix h0 = sys.h0(t).matrix();
        const double m1 = (psi.adjoint() * hcd * psi)(0, 0).real();
        const double m2 = (psi.adjoint() * hcd * hcd * psi)(0, 0).real();
        const double v0 = (psi.adjoint() * h0 * h0 * psi)(0, 0).real() - std::pow((psi.adjoint() * h0 * psi)(0, 0).real(), 2);
        const EnergyFluctuation ef = ensemble_energy_variance(sys, ens, t);
        CHECK(ef.cd_variance == doctest::Approx(m2 - m1 * m1).epsilon(1e-9));
        CHECK(ef.cd_variance - excess_variance_direct(sys, ens, t) == doctest::Approx(v0).epsilon(1e-8).scale(1.0));
        CHECK(v0 >= -1e-12);
    }
}
