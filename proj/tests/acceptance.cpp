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

// Acceptance suite: one PASS/FAIL line per criterion. With an argument N only
// criterion N runs; the exit code is 0 iff every criterion that ran passed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cdwork/counterdiabatic.hpp"
#include "cdwork/fit.hpp"
#include "cdwork/geometry.hpp"
#include "cdwork/models/harmonic.hpp"
#include "cdwork/models/ising.hpp"
#include "cdwork/work_stats.hpp"
#include "random_cases.hpp"

using namespace cdwork;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, format, a, b, c, d);
    return buf;
}

double boltzmann(double beta, int n) { return (1.0 - std::exp(-beta)) * std::exp(-beta * n); }

DrivenSystem figure_system(std::size_t fock_dim = 120) {
    ho::HOConfig config;
    config.fock_dim = fock_dim;
    return ho::make_system(config);
}

Outcome criterion_mean_work() {
    const DrivenSystem sys = figure_system();
    const ThermalEnsemble ens = thermal_ensemble(sys, 1.0);
    double worst = 0.0;
    for (double t : uniform_grid(0.8, 401)) {
        const WorkSnapshot snap = work_snapshot(sys, ens, t);
        worst = std::max(worst, std::abs(mean_work(work_distribution(snap, ens, WorkTag::counterdiabatic)) -
                                         mean_work(work_distribution(snap, ens, WorkTag::adiabatic))));
    }
    return {worst <= 1e-8, fmt("max |<W>_cd - <W>_ad| = %.3e (limit 1e-8)", worst)};
}

Outcome criterion_variance() {
    const DrivenSystem sys = figure_system();
    const ThermalEnsemble ens = thermal_ensemble(sys, 1.0);
    double worst = 0.0, ends = 0.0;
    for (double t : uniform_grid(0.8, 401)) {
        const double direct = excess_variance_direct(work_snapshot(sys, ens, t), ens);
        const double geometric = excess_variance_geometric(sys, ens, t);
        if (t == 0.0 || t == 0.8) ends = std::max({ends, std::abs(direct), std::abs(geometric)});
        else worst = std::max(worst, std::abs(direct - geometric) / geometric);
    }
    return {worst <= 1e-6 && ends < 1e-10,
            fmt("max rel |direct - geometric| = %.3e (limit 1e-6), endpoint max %.3e (limit 1e-10)", worst, ends)};
}

Outcome criterion_speed_limit() {
    const DrivenSystem sys = figure_system();
    const ThermalEnsemble ens = thermal_ensemble(sys, 1.0);
    const PathLengths lengths = path_lengths(sys, ens);
    double s = 0.0;
    for (int n = 0; n < static_cast<int>(ens.size()); ++n) s += ens.weights(n) * (n * n + n + 1.0) / 8.0;
    const double closed_form = std::sqrt(s) * std::log(3.0);
    std::vector<double> taus, fluct;
    bool equality = true, ordering = true;
    for (int i = 1; i <= 15; ++i) {
        const double tau = i / 5.0;
        SpeedLimitOptions opts;
        opts.lengths = lengths;
        const SpeedLimitReport r = speed_limit_report(sys.with_protocol(sys.protocol().rescaled(tau)), ens, opts);
        equality = equality && r.equality_holds;
        ordering = ordering && r.ordering_holds;
        taus.push_back(tau);
        fluct.push_back(r.mean_excess_fluctuation);
    }
    const double coefficient = fit_coefficient(taus, fluct, -1.0).coefficient;
    const bool coeff_ok = coefficient >= 0.64 && coefficient <= 0.67;
    const bool l_ok = std::abs(lengths.metric_length - closed_form) <= 1e-7;
    const bool bures_ok = std::abs(lengths.bures_length - 0.476) <= 0.005;
    return {coeff_ok && equality && l_ok && bures_ok && ordering,
            fmt("coefficient %.6f in [0.64, 0.67], l = %.7f (closed form %.7f), L = %.6f (0.476 +- 0.005)", coefficient,
                lengths.metric_length, closed_form, lengths.bures_length) +
                (equality ? ", equality holds" : ", equality FAILS") + (ordering ? ", ordering holds" : ", ordering FAILS")};
}

Outcome criterion_certificate() {
    const DrivenSystem sys = figure_system();
    std::vector<std::size_t> levels;
    for (std::size_t n = 0; n <= 30; ++n) levels.push_back(n);
    const auto grid = uniform_grid(0.8, 41);
    const CertificateReport with = transitionless_certificate(sys, levels, grid);
    double worst = 1.0;
    for (const auto& e : with.entries) worst = std::min(worst, e.final_fidelity);
    const CertificateReport without = transitionless_certificate(sys, {0}, grid, false);
    const double bare = without.entries[0].final_fidelity;
    return {worst >= 1.0 - 1e-6 && bare < 0.999,
            fmt("with CD min fidelity n <= 30: 1 - %.3e (limit 1e-6); without CD n = 0: %.6f (< 0.999)", 1.0 - worst, bare)};
}

double closed_form_spectrum_error(std::size_t fock_dim, std::size_t max_level) {
    const DrivenSystem sys = figure_system(fock_dim);
    double worst = 0.0;
    for (double t : uniform_grid(0.8, 41)) {
        const double w = sys.protocol().value(t)(0), rate = sys.protocol().derivative(t)(0);
        const Spectrum s = spectrum(sys.h_cd(t));
        for (std::size_t n = 0; n <= max_level; ++n)
            worst = std::max(worst, std::abs(s.eigenvalues(static_cast<Eigen::Index>(n)) -
                                             ho::cd_exact_eigensystem(w, rate, n).energy));
    }
    return worst;
}

Outcome criterion_closed_form() {
    const double worst = closed_form_spectrum_error(120, 40);
    const double large = closed_form_spectrum_error(480, 40);
    return {worst <= 1e-7, fmt("D = 120, n <= 40: max |E_fock - E_closed| = %.3e (limit 1e-7); INFO same levels at D = 480: %.3e",
                               worst, large)};
}

Outcome criterion_ising_oracle() {
    double worst_e = 0.0, worst_g = 0.0;
    for (std::size_t n : {4u, 8u, 12u}) {
        const ising::ExactChain chain(n);
        for (double lambda : {0.3, 0.7, 1.0, 1.4, 2.0}) {
            double energy = 0.0, g = 0.0;
            if (n <= 8) {
                // Dense 2^N diagonalization with a perturbative metric.
                const RMatrix h = ising::full_hamiltonian(lambda, n);
                const RMatrix dh = ising::full_hamiltonian(1.0, n) - ising::full_hamiltonian(0.0, n);
                Eigen::SelfAdjointEigenSolver<RMatrix> es(h);
                const Eigen::VectorXd w = dh * es.eigenvectors().col(0);
                for (Eigen::Index m = 1; m < es.eigenvalues().size(); ++m) {
                    const double e = es.eigenvectors().col(m).dot(w);
                    const double gap = es.eigenvalues()(m) - es.eigenvalues()(0);
                    if (std::abs(e) > 1e-13) g += e * e / (gap * gap);
                }
                energy = es.eigenvalues()(0);
            } else {
                RVector l(1);
                l << lambda;
                energy = spectrum(chain.hamiltonian(l)).eigenvalues(0);
                g = qgt(chain, l, 0).g(0, 0);
            }
            worst_e = std::max(worst_e, std::abs(energy - ising::ground_energy(lambda, n)));
            worst_g = std::max(worst_g, std::abs(g - ising::ground_metric(lambda, n)));
        }
    }
    double critical = 0.0;
    for (std::size_t n = 4; n <= 4096; n *= 2) {
        const double exact = static_cast<double>(n) * static_cast<double>(n - 1) / 32.0;
        critical = std::max(critical, std::abs(ising::ground_metric(1.0, n) - exact) / exact);
    }
    return {worst_e <= 1e-8 && worst_g <= 1e-8 && critical <= 1e-10,
            fmt("energy %.3e, metric %.3e (limit 1e-8); g(1) = N(N-1)/32 rel %.3e (limit 1e-10)", worst_e, worst_g, critical)};
}

Outcome criterion_scaling() {
    const ising::CriticalScaling fit = ising::scaling_fit({32, 64, 128, 256, 512, 1024}, 1.0);
    std::vector<double> x, y;
    for (int i = 0; i <= 10; ++i) {
        const double eps = 1e-3 * std::pow(10.0, i / 10.0);
        x.push_back(eps);
        y.push_back(ising::ground_metric(1.0 + eps, 8192) / 8192.0);
    }
    const double slope = fit_power_law(x, y).exponent;
    return {fit.exponent >= 0.50 && fit.exponent <= 0.53 && std::abs(slope + 1.0) <= 0.05,
            fmt("alpha = %.5f in [0.50, 0.53]; off-critical slope %.4f (-1 +- 0.05)", fit.exponent, slope)};
}

Outcome criterion_chain() {
    std::mt19937_64 rng(20260101);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const app::HOCase c = app::random_ho_case(rng);
        const DrivenSystem sys = ho::make_system(c.config, c.protocol);
        const PathLengths l = path_lengths(sys, thermal_ensemble(sys, c.beta));
        worst = std::max({worst, l.bures_length - l.eta_length, l.eta_length - l.metric_length});
    }
    return {worst <= 1e-8, fmt("100 random ramps, max violation %.3e (limit 1e-8)", worst)};
}

Outcome criterion_zero_temperature() {
    ho::HOConfig config;
    const DrivenSystem sys = ho::make_system(config, ho::log_ramp(1.0, 3.0, 0.8));
    const ThermalEnsemble ens = thermal_ensemble(sys, kInfiniteBeta);
    const SpeedLimitReport r = speed_limit_report(sys, ens);
    const double ratio = r.tau * r.mean_excess_fluctuation / r.bures_length;
    return {std::abs(ratio - 1.0) <= 1e-3, fmt("tau <dDW>_tau / L = %.6f (target 1 +- 1e-3)", ratio)};
}

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    Outcome (*run)();
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria{
        {1, "mean-work identity", 10.0, criterion_mean_work},
        {2, "variance identity", 0.0, criterion_variance},
        {3, "speed-limit sweep", 120.0, criterion_speed_limit},
        {4, "transitionless certificate", 0.0, criterion_certificate},
        {5, "closed-form CD spectrum", 0.0, criterion_closed_form},
        {6, "Ising small-N oracle", 30.0, criterion_ising_oracle},
        {7, "critical scaling", 60.0, criterion_scaling},
        {8, "length inequality chain", 300.0, criterion_chain},
        {9, "zero-temperature equality", 0.0, criterion_zero_temperature},
    };
    const int only = argc > 1 ? std::atoi(argv[1]) : 0;
    bool all = true;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.budget_s == 0.0 || seconds < c.budget_s;
        const bool pass = o.pass && in_time;
        std::printf("criterion %d %s: %s; %s; %.1f s%s\n", c.id, pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), seconds,
                    in_time ? "" : fmt(" (budget %.0f s exceeded)", c.budget_s).c_str());
        std::fflush(stdout);
        all = all && pass;
    }
    return all ? 0 : 1;
}
