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
#include "cdwork/models/ion.hpp"
#include "cdwork/quadrature.hpp"
#include "doctest.h"

using namespace cdwork;

TEST_CASE("quintic ramp") {
    const Protocol p = ho::ramp(1.0, 3.0, 0.8);
    CHECK(p.value(0.0)(0) == 1.0);
    CHECK(p.value(0.8)(0) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(p.derivative(0.0)(0) == 0.0);
    CHECK(p.derivative(0.8)(0) == doctest::Approx(0.0));
    CHECK(p.value(0.4)(0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(p.derivative(0.4)(0) == doctest::Approx(4.6875).epsilon(1e-14));
    // omega_dot = 30 delta s^2 (1 - s)^2 / tau
    const double s = 0.3;
    CHECK(p.derivative(0.8 * s)(0) == doctest::Approx(30.0 * 2.0 * s * s * (1 - s) * (1 - s) / 0.8).epsilon(1e-14));
    const Protocol flat = ho::ramp(1.5, 1.5, 2.0);
    CHECK(flat.value(0.7)(0) == 1.5);
    CHECK(flat.derivative(0.7)(0) == 0.0);
}

TEST_CASE("HOConfig validation") {
    ho::HOConfig c;
    c.fock_dim = 39;
    CHECK_THROWS_AS(c.validate(), Error);
    c.fock_dim = 120;
    c.omega_f = -1.0;
    CHECK_THROWS_AS(c.validate(), Error);
    c.omega_f = 3.0;
    c.tau = 0.5;
    try {
        c.require_bound_cd_spectrum();
        FAIL("expected SupercriticalDrive");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::supercritical_drive);
    }
    c.tau = 0.8;
    CHECK_NOTHROW(c.require_bound_cd_spectrum());
    CHECK(c.drive_strength() < 1.0);
}

TEST_CASE("closed-form CD eigenvalues") {
    CHECK(ho::cd_exact_eigensystem(1.7, 0.0, 3).energy == doctest::Approx(1.7 * 3.5));
    CHECK(ho::cd_exact_eigensystem(2.0, 4.0, 0).energy == doctest::Approx(2.0 * std::sqrt(0.75) * 0.5).epsilon(1e-15));
    CHECK(ho::cd_exact_eigensystem(2.0, 4.0, 0).energy == doctest::Approx(0.8660).epsilon(5e-5));
    CHECK_THROWS_AS(ho::cd_exact_eigensystem(1.0, 2.0, 0), Error);

    // Truncated-Fock diagonalization of H0 + H1 at the same point.
    const ho::HarmonicOscillator model(120, 1.0);
    const Spectrum s = spectrum(model.h0_matrix(2.0) + model.h1_matrix(2.0, 4.0));
    for (std::size_t n = 0; n <= 20; ++n)
        CHECK(std::abs(s.eigenvalues(static_cast<Eigen::Index>(n)) - ho::cd_exact_eigensystem(2.0, 4.0, n).energy) < 1e-7);
}

TEST_CASE("closed-form CD eigenfunctions are orthonormal") {
    const double omega = 1.6, rate = 2.5;
    auto overlap = [&](std::size_t a, std::size_t b) {
        const auto sa = ho::cd_exact_eigensystem(omega, rate, a);
        const auto sb = ho::cd_exact_eigensystem(omega, rate, b);
        const auto re = adaptive_simpson([&](double q) { return (std::conj(sa.wavefunction(q)) * sb.wavefunction(q)).real(); }, -12, 12);
        const auto im = adaptive_simpson([&](double q) { return (std::conj(sa.wavefunction(q)) * sb.wavefunction(q)).imag(); }, -12, 12);
        return Complex(re.value, im.value);
    };
    CHECK(std::abs(overlap(0, 0) - 1.0) < 1e-7);
    CHECK(std::abs(overlap(3, 3) - 1.0) < 1e-7);
    CHECK(std::abs(overlap(0, 2)) < 1e-7);
    CHECK(std::abs(overlap(1, 2)) < 1e-7);
    // Static limit: the oscillator ground state.
    const auto g = ho::cd_exact_eigensystem(1.0, 0.0, 0);
    CHECK(std::abs(g.wavefunction(0.7) - std::pow(std::numbers::pi, -0.25) * std::exp(-0.245)) < 1e-14);
}

TEST_CASE("truncation convergence at the figure operating point") {
    ho::HOConfig a;
    ho::HOConfig b;
    b.fock_dim = 240;
    const DrivenSystem sa = ho::make_system(a), sb = ho::make_system(b);
    const ThermalEnsemble ea = thermal_ensemble(sa, 1.0), eb = thermal_ensemble(sb, 1.0);
    for (double t : {0.2, 0.4, 0.6}) {
        const auto da = work_distribution(sa, ea, t, WorkTag::counterdiabatic);
        const auto db = work_distribution(sb, eb, t, WorkTag::counterdiabatic);
        CHECK(std::abs(mean_work(da) - mean_work(db)) < 1e-7);
        CHECK(std::abs(variance_work(da) - variance_work(db)) < 1e-7);
    }
    CHECK(std::abs(metric_length(sa, ea).value - metric_length(sb, eb).value) < 1e-7);
}

TEST_CASE("ion waveforms") {
    ion::IonConfig config;
    config.detuning = 3.0;
    const Protocol p = ho::ramp(1.0, 3.0, 0.8);
    const auto grid = uniform_grid(0.8, 81);
    const ion::IonWaveforms w = ion::ion_waveforms(p, grid, config);
    CHECK(w.samples.front().potential == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(std::abs(w.samples.back().potential) < 1e-14);
    CHECK(w.roundtrip_error <= 1e-12);
    CHECK(w.effective_mass == doctest::Approx(1.0));
    const auto& mid = w.samples[40];
    CHECK(std::arg(mid.coupling1) == doctest::Approx(std::atan2(mid.omega_rate / (2 * mid.omega), -mid.potential)));
    CHECK(mid.coupling2 == mid.potential);
    CHECK(mid.coupling1.real() == doctest::Approx(-(9.0 - 4.0) / 6.0));
    CHECK(mid.coupling1.imag() == doctest::Approx(4.6875 / 4.0));
    for (const auto& s : w.samples) CHECK(ion::frequency_from_potential(3.0, s.potential) == doctest::Approx(s.omega).epsilon(1e-12));

    RVector nu(1);
    nu << 3.0;
    const ion::IonWaveforms none = ion::ion_waveforms(constant_protocol(nu, 1.0), uniform_grid(1.0, 5), config);
    for (const auto& s : none.samples) {
        CHECK(s.potential == 0.0);
        CHECK(std::abs(s.coupling1) == 0.0);
    }

    config.detuning = 2.0;
    try {
        (void)ion::ion_waveforms(p, grid, config);
        FAIL("expected InvalidDetuning");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::invalid_detuning);
    }
}

TEST_CASE("ion validity ratio warning") {
    ion::IonConfig config;
    config.two_photon_detuning = 1.0;
    const ion::IonWaveforms w = ion::ion_waveforms(ho::ramp(1.0, 3.0, 0.8), uniform_grid(0.8, 41), config);
    CHECK(w.validity_warning);
    CHECK(w.min_validity_ratio < config.validity_threshold);
}
