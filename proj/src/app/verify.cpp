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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "cdwork/counterdiabatic.hpp"
#include "cdwork/errors.hpp"
#include "cdwork/geometry.hpp"
#include "cdwork/models/harmonic.hpp"
#include "cdwork/models/ion.hpp"
#include "cdwork/models/ising.hpp"
#include "commands.hpp"
#include "output.hpp"
#include "random_cases.hpp"

namespace cdwork::app {

namespace {

struct Recorder {
    std::vector<nlohmann::json> checks;
    std::vector<std::string> lines;
    bool all = true;

    // `value` is the measured worst case and `tolerance` the contract bound.
    void record(const std::string& suite, const std::string& name, bool pass, double value, double tolerance) {
        checks.push_back({{"suite", suite}, {"name", name}, {"pass", pass}, {"value", json_number(value)},
                          {"tolerance", json_number(tolerance)}});
        lines.push_back(std::string(pass ? "PASS " : "FAIL ") + suite + "." + name + " value " + format_number(value) +
                        " tolerance " + format_number(tolerance));
        all = all && pass;
    }
};

CMatrix random_hermitian(std::mt19937_64& rng, Eigen::Index d) {
    std::normal_distribution<double> n(0.0, 1.0);
    CMatrix a(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) a(i, j) = Complex(n(rng), n(rng));
    return 0.5 * (a + a.adjoint());
}

CMatrix random_unitary(std::mt19937_64& rng, Eigen::Index d) {
    const CMatrix h = random_hermitian(rng, d);
    return evolution_operator(spectrum(HermitianOperator(h)), 1.0);
}

HermitianOperator random_state(std::mt19937_64& rng, Eigen::Index d, Eigen::Index rank) {
    std::normal_distribution<double> n(0.0, 1.0);
    CMatrix a(d, rank);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < rank; ++j) a(i, j) = Complex(n(rng), n(rng));
    CMatrix rho = a * a.adjoint();
    rho /= rho.trace().real();
    return HermitianOperator(CMatrix(0.5 * (rho + rho.adjoint())));
}

/// H(lambda) = A + lambda_1 B + lambda_2 C with fixed random Hermitian A, B, C.
class LinearFamily final : public ParametricModel {
public:
    LinearFamily(std::vector<CMatrix> terms) : terms_(std::move(terms)) {}
    [[nodiscard]] std::size_t dimension() const override { return static_cast<std::size_t>(terms_[0].rows()); }
    [[nodiscard]] std::size_t parameter_count() const override { return terms_.size() - 1; }
    [[nodiscard]] HermitianOperator hamiltonian(const RVector& lambda) const override {
        CMatrix h = terms_[0];
        for (std::size_t mu = 0; mu + 1 < terms_.size(); ++mu) h += lambda(static_cast<Eigen::Index>(mu)) * terms_[mu + 1];
        return HermitianOperator(h);
    }
    [[nodiscard]] HermitianOperator parameter_derivative(const RVector&, std::size_t mu) const override {
        return HermitianOperator(terms_[mu + 1]);
    }

private:
    std::vector<CMatrix> terms_;
};

void cd_core_suite(Recorder& rec, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::string suite = "cd-core";

    // Spectrum contract and gauge invariance of H1 on random matrices.
    double residual = 0.0, orthogonality = 0.0, gauge_change = 0.0, hermiticity = 0.0, gauge_entry = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const Eigen::Index d = 6 + trial;
        const HermitianOperator h(random_hermitian(rng, d));
        const HermitianOperator rate(random_hermitian(rng, d));
        const Spectrum s = spectrum(h);
        residual = std::max(residual, spectral_residual(h, s) / s.norm);
        orthogonality = std::max(orthogonality,
                                 (s.eigenvectors.adjoint() * s.eigenvectors - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff());
        for (Eigen::Index c = 0; c < d; ++c) {
            Eigen::Index top = 0;
            s.eigenvectors.col(c).cwiseAbs().maxCoeff(&top);
            const Complex lead = s.eigenvectors(top, c);
            gauge_entry = std::max(gauge_entry, std::abs(lead.imag()) + (lead.real() > 0 ? 0.0 : 1.0));
        }
        const HermitianOperator h1 = cd_auxiliary(s, rate);
        Spectrum rephased = s;
        for (Eigen::Index c = 0; c < d; ++c)
            rephased.eigenvectors.col(c) *= std::polar(1.0, 2.0 * std::numbers::pi * unit(rng));
        const HermitianOperator h1_rephased = cd_auxiliary(rephased, rate);
        gauge_change = std::max(gauge_change, (h1.matrix() - h1_rephased.matrix()).norm() / h1.frobenius_norm());
        hermiticity = std::max(hermiticity, hermiticity_defect(h1.matrix()));
    }
    rec.record(suite, "spectrum_residual", residual <= 1e-10, residual, 1e-10);
    rec.record(suite, "spectrum_orthonormal", orthogonality <= 1e-12, orthogonality, 1e-12);
    rec.record(suite, "spectrum_gauge", gauge_entry <= 1e-14, gauge_entry, 1e-14);
    rec.record(suite, "auxiliary_gauge_invariance", gauge_change <= 1e-12, gauge_change, 1e-12);
    rec.record(suite, "auxiliary_hermitian", hermiticity <= 1e-12, hermiticity, 1e-12);

    // Endpoint condition for random oscillator ramps through both H1 routes.
    double endpoint = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        const HOCase c = random_ho_case(rng, 48);
        const DrivenSystem analytic = ho::make_system(c.config, c.protocol);
        const DrivenSystem spectral(std::make_shared<SpectralAuxiliaryModel>(analytic.model_ptr()), c.protocol);
        for (double t : {0.0, c.config.tau})
            endpoint = std::max({endpoint, analytic.h1(t).frobenius_norm(), spectral.h1(t).frobenius_norm()});
    }
    rec.record(suite, "auxiliary_endpoints", endpoint <= 1e-12, endpoint, 1e-12);

    // Transitionless evolution of every level n <= D/3 with the spectral H1.
    ho::HOConfig hc;
    hc.fock_dim = 60;
    hc.tau = 1.0;
    const DrivenSystem base = ho::make_system(hc);
    const DrivenSystem spectral(std::make_shared<SpectralAuxiliaryModel>(base.model_ptr()), base.protocol());
    std::vector<std::size_t> levels;
    for (std::size_t n = 0; n <= hc.fock_dim / 3; ++n) levels.push_back(n);
    const CertificateReport cert = transitionless_certificate(spectral, levels, uniform_grid(hc.tau, 11));
    double worst = 1.0;
    for (const auto& e : cert.entries) worst = std::min({worst, e.min_overlap, e.final_fidelity});
    rec.record(suite, "transitionless_all_trusted_levels", cert.pass(), 1.0 - worst, 1e-6);

    // Unitarity of the stepper.
    std::vector<CMatrix> terms{random_hermitian(rng, 10), random_hermitian(rng, 10)};
    auto h_at = [&](double t) { return HermitianOperator(CMatrix(terms[0] + std::sin(3.0 * t) * terms[1])); };
    const StateTrajectory traj = propagate(h_at, CMatrix::Identity(10, 10).leftCols(3), uniform_grid(2.0, 21));
    rec.record(suite, "propagation_norm_drift", traj.norm_drift <= 1e-10, traj.norm_drift, 1e-10);
}

struct OperatingPoint {
    DrivenSystem system;
    ThermalEnsemble ensemble;
};

void work_stats_suite(Recorder& rec, std::mt19937_64& rng, std::size_t cases) {
    const std::string suite = "work-stats";
    double mean_rel = 0.0, variance_rel = 0.0, endpoint = 0.0, lower = 0.0, upper = 0.0, rowsum = 0.0, moment = 0.0;
    const std::size_t count = std::max<std::size_t>(3, cases / 4);
    for (std::size_t i = 0; i < count; ++i) {
        const HOCase c = random_ho_case(rng, 96);
        const DrivenSystem sys = ho::make_system(c.config, c.protocol);
        const ThermalEnsemble ens = thermal_ensemble(sys, c.beta);
        const double norm = spectrum(sys.h0(c.config.tau)).norm;
        for (double t : uniform_grid(c.config.tau, 21)) {
            const WorkSnapshot snap = work_snapshot(sys, ens, t);
            const WorkDistribution cd = work_distribution(snap, ens, WorkTag::counterdiabatic);
            const WorkDistribution ad = work_distribution(snap, ens, WorkTag::adiabatic);
            mean_rel = std::max(mean_rel, std::abs(mean_work(cd) - mean_work(ad)) / norm);
            const double direct = excess_variance_direct(snap, ens);
            const double geometric = excess_variance_geometric(sys, ens, t);
            if (geometric > 1e-10) variance_rel = std::max(variance_rel, std::abs(direct - geometric) / geometric);
            const EnergyFluctuation ef = ensemble_energy_variance(sys, ens, t);
            lower = std::max(lower, -direct);
            upper = std::max(upper, direct - ef.cd_variance);
            moment = std::max(moment, std::abs(ef.second_moment_excess - direct));
            rowsum = std::max(rowsum, identity_check_rowsum(snap) / norm);
            if (t == 0.0 || t == c.config.tau) endpoint = std::max(endpoint, atom_discrepancy(cd, ad));
        }
    }
    rec.record(suite, "mean_work_identity", mean_rel <= 1e-8, mean_rel, 1e-8);
    rec.record(suite, "variance_identity", variance_rel <= 1e-6, variance_rel, 1e-6);
    rec.record(suite, "endpoint_equivalence", endpoint <= 1e-8, endpoint, 1e-8);
    rec.record(suite, "excess_nonnegative", lower <= 1e-12, lower, 1e-12);
    rec.record(suite, "energy_fluctuation_bound", upper <= 1e-12, upper, 1e-12);
    rec.record(suite, "second_moment_identity", moment <= 1e-8, moment, 1e-8);
    rec.record(suite, "rowsum_identity", rowsum <= 1e-8, rowsum, 1e-8);
}

void geometry_suite(Recorder& rec, std::mt19937_64& rng, std::size_t cases, const OperatingPoint& op) {
    const std::string suite = "geometry";
    double chain = 0.0;
    for (std::size_t i = 0; i < cases; ++i) {
        const HOCase c = random_ho_case(rng, 96);
        const DrivenSystem sys = ho::make_system(c.config, c.protocol);
        const PathLengths l = path_lengths(sys, thermal_ensemble(sys, c.beta));
        chain = std::max({chain, l.bures_length - l.eta_length, l.eta_length - l.metric_length});
    }
    rec.record(suite, "bures_eta_metric_chain", chain <= 1e-8, chain, 1e-8);

    SpeedLimitOptions opts;
    const SpeedLimitReport r = speed_limit_report(op.system, op.ensemble, opts);
    const double dev = std::abs(r.tau * r.mean_excess_fluctuation - r.metric_length) / r.metric_length;
    rec.record(suite, "time_average_equality", dev <= 1e-6, dev, 1e-6);
    rec.record(suite, "speed_limit_ordering", r.ordering_holds, r.energy_bound - r.excess_bound, 0.0);

    // Two-parameter random family: Q Hermitian, g PSD, invariant under basis rotation.
    std::vector<CMatrix> terms{random_hermitian(rng, 8), random_hermitian(rng, 8), random_hermitian(rng, 8)};
    const LinearFamily family(terms);
    const CMatrix u = random_unitary(rng, 8);
    std::vector<CMatrix> rotated;
    for (const auto& t : terms) rotated.push_back(u * t * u.adjoint());
    const LinearFamily rotated_family(rotated);
    double q_asym = 0.0, g_min = 0.0, q_change = 0.0;
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        RVector lambda(2);
        lambda << unit(rng), unit(rng);
        for (std::size_t n : {0u, 3u, 7u}) {
            const GeometricTensor a = qgt(family, lambda, n);
            const GeometricTensor b = qgt(rotated_family, lambda, n);
            q_asym = std::max(q_asym, (a.q - a.q.adjoint()).cwiseAbs().maxCoeff());
            g_min = std::min(g_min, Eigen::SelfAdjointEigenSolver<RMatrix>(a.g).eigenvalues().minCoeff());
            q_change = std::max(q_change, (a.q - b.q).norm() / a.q.norm());
        }
    }
    rec.record(suite, "qgt_hermitian", q_asym <= 1e-12, q_asym, 1e-12);
    rec.record(suite, "qgt_psd", g_min >= -1e-12, -g_min, 1e-12);
    rec.record(suite, "qgt_gauge_invariance", q_change <= 1e-10, q_change, 1e-10);

    double symmetry = 0.0, pure = 0.0, unitary = 0.0, range = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const HermitianOperator rho = random_state(rng, 6, 1 + trial % 6);
        const HermitianOperator sigma = random_state(rng, 6, 1 + (trial + 2) % 6);
        const double f = bures_fidelity(rho, sigma);
        symmetry = std::max(symmetry, std::abs(f - bures_fidelity(sigma, rho)));
        const CMatrix w = random_unitary(rng, 6);
        const HermitianOperator rho_u(CMatrix(w * rho.matrix() * w.adjoint()));
        const HermitianOperator sigma_u(CMatrix(w * sigma.matrix() * w.adjoint()));
        unitary = std::max(unitary, std::abs(f - bures_fidelity(rho_u, sigma_u)));
        range = std::max({range, -f, f - 1.0});
        const HermitianOperator psi = random_state(rng, 6, 1), phi = random_state(rng, 6, 1);
        const Spectrum sp = spectrum(psi), sf = spectrum(phi);
        const double overlap = std::norm(sp.eigenvectors.col(5).dot(sf.eigenvectors.col(5)));
        pure = std::max(pure, std::abs(bures_fidelity(psi, phi) - overlap));
    }
    rec.record(suite, "bures_symmetry", symmetry <= 1e-10, symmetry, 1e-10);
    rec.record(suite, "bures_unitary_invariance", unitary <= 1e-10, unitary, 1e-10);
    rec.record(suite, "bures_pure_reduction", pure <= 1e-10, pure, 1e-10);
    rec.record(suite, "bures_range", range <= 0.0, range, 0.0);

    // Same path, two time parametrizations.
    const Protocol& p = op.system.protocol();
    const DrivenSystem other = op.system.with_protocol(
        scalar_protocol(p.initial()(0), p.final()(0), 1.7 * p.duration(), smoothstep3, smoothstep3_rate));
    const double l1 = metric_length(op.system, op.ensemble).value;
    const double l2 = metric_length(other, op.ensemble).value;
    rec.record(suite, "metric_length_reparametrization", std::abs(l1 - l2) <= 1e-7, std::abs(l1 - l2), 1e-7);
}

void ho_suite(Recorder& rec, const RunConfig& config, const OperatingPoint& op) {
    const std::string suite = "models-ho";
    const double tau = op.system.duration();
    const auto& model = dynamic_cast<const ho::HarmonicOscillator&>(op.system.model());
    const std::size_t trusted = model.trusted_levels();

    // Doubling the basis leaves the operating-point observables unchanged.
    ho::HOConfig doubled;
    doubled.omega_i = config.omega_i;
    doubled.omega_f = config.omega_f;
    doubled.tau = tau;
    doubled.mass = config.mass;
    doubled.fock_dim = 2 * config.fock_dim;
    const DrivenSystem big = ho::make_system(doubled);
    double convergence = 0.0;
    {
        const WorkSnapshot a = work_snapshot(op.system, op.ensemble, 0.5 * tau);
        const WorkSnapshot b = work_snapshot(big, op.ensemble, 0.5 * tau);
        const auto da = work_distribution(a, op.ensemble, WorkTag::counterdiabatic);
        const auto db = work_distribution(b, op.ensemble, WorkTag::counterdiabatic);
        convergence = std::max({std::abs(mean_work(da) - mean_work(db)), std::abs(variance_work(da) - variance_work(db)),
                                std::abs(metric_length(op.system, op.ensemble).value -
                                         metric_length(big, op.ensemble).value)});
    }
    rec.record(suite, "truncation_convergence", convergence <= 1e-7, convergence, 1e-7);

    // Closed forms are compared on the levels the basis resolves: a level
    // counts when doubling D leaves it unchanged.
    const auto& big_model = big.model();
    double closed_form = 0.0, metric = 0.0, parity = 0.0;
    std::size_t fewest_cd = trusted + 1, fewest_metric = trusted + 1;
    for (double t : uniform_grid(tau, 41)) {
        const double w = op.system.protocol().value(t)(0);
        const double rate = op.system.protocol().derivative(t)(0);
        const Spectrum s = spectrum(op.system.h_cd(t));
        const Spectrum s_big = spectrum(big.h_cd(t));
        std::size_t resolved = 0;
        for (std::size_t n = 0; n <= trusted; ++n, ++resolved) {
            const auto i = static_cast<Eigen::Index>(n);
            if (std::abs(s.eigenvalues(i) - s_big.eigenvalues(i)) > 1e-9 * std::max(1.0, s.eigenvalues(i))) break;
            closed_form = std::max(closed_form,
                                   std::abs(s.eigenvalues(i) - ho::cd_exact_eigensystem(w, rate, n, config.mass).energy));
        }
        fewest_cd = std::min(fewest_cd, resolved);
        RVector lambda(1);
        lambda << w;
        std::vector<std::size_t> levels(trusted + 1);
        std::iota(levels.begin(), levels.end(), std::size_t{0});
        const auto tensors = qgt(model, lambda, levels);
        const auto tensors_big = qgt(big_model, lambda, levels);
        resolved = 0;
        for (std::size_t n = 0; n <= trusted; ++n, ++resolved) {
            const double g = tensors[n].g(0, 0);
            if (std::abs(g - tensors_big[n].g(0, 0)) > 1e-10 * g) break;
            metric = std::max(metric, std::abs(g - ho::ho_metric(w, n)) / ho::ho_metric(w, n));
        }
        fewest_metric = std::min(fewest_metric, resolved);
        const TransitionMatrix tm = transition_matrix(op.system, op.ensemble, t);
        for (Eigen::Index n = 0; n < tm.entries.rows(); ++n)
            for (Eigen::Index m = 0; m < tm.entries.cols(); ++m)
                if ((n + m) % 2 == 1) parity = std::max(parity, tm.entries(n, m));
    }
    rec.record(suite, "closed_form_cd_spectrum", closed_form <= 1e-7 && fewest_cd >= 5, closed_form, 1e-7);
    rec.record(suite, "closed_form_cd_spectrum_levels", fewest_cd >= 5, static_cast<double>(fewest_cd), 5.0);
    rec.record(suite, "metric_closed_form", metric <= 1e-8 && fewest_metric >= 5, metric, 1e-8);
    rec.record(suite, "metric_closed_form_levels", fewest_metric >= 5, static_cast<double>(fewest_metric), 5.0);
    rec.record(suite, "parity_superselection", parity <= 1e-10, parity, 1e-10);

    // Certificate with the closed-form H1 (scaled by the mutation hook).
    auto mutated = std::make_shared<ho::HarmonicOscillator>(config.fock_dim, config.omega_i, config.mass);
    mutated->set_auxiliary_scale(config.auxiliary_scale);
    const DrivenSystem certified(mutated, op.system.protocol());
    std::vector<std::size_t> levels;
    for (std::size_t n = 0; n <= std::min<std::size_t>(10, trusted); ++n) levels.push_back(n);
    const CertificateReport cert = transitionless_certificate(certified, levels, uniform_grid(tau, 21));
    double worst = 1.0;
    for (const auto& e : cert.entries) worst = std::min({worst, e.min_overlap, e.final_fidelity});
    rec.record(suite, "transitionless_certificate", cert.pass(), 1.0 - worst, 1e-6);

    ion::IonConfig ion;
    ion.detuning = std::max(config.nu, std::max(config.omega_i, config.omega_f));
    const ion::IonWaveforms w = ion::ion_waveforms(op.system.protocol(), uniform_grid(tau, 201), ion);
    rec.record(suite, "ion_roundtrip", w.roundtrip_error <= 1e-12, w.roundtrip_error, 1e-12);
}

void ising_suite(Recorder& rec) {
    const std::string suite = "models-ising";
    double energy = 0.0, metric = 0.0, overlap = 0.0;
    for (std::size_t n : {4u, 8u, 12u}) {
        const ising::ExactChain chain(n);
        for (double lambda : {0.3, 0.8, 1.5, 2.0}) {
            RVector l(1), l2(1);
            l << lambda;
            l2 << lambda + 0.05;
            const Spectrum s = spectrum(chain.hamiltonian(l));
            energy = std::max(energy, std::abs(s.eigenvalues(0) - ising::ground_energy(lambda, n)));
            metric = std::max(metric, std::abs(qgt(chain, l, 0).g(0, 0) - ising::ground_metric(lambda, n)));
            const Spectrum s2 = spectrum(chain.hamiltonian(l2));
            overlap = std::max(overlap, std::abs(std::abs(s.eigenvectors.col(0).dot(s2.eigenvectors.col(0))) -
                                                 ising::ground_overlap(lambda, lambda + 0.05, n)));
        }
    }
    rec.record(suite, "free_fermion_energy", energy <= 1e-8, energy, 1e-8);
    rec.record(suite, "free_fermion_metric", metric <= 1e-8, metric, 1e-8);
    rec.record(suite, "free_fermion_overlap", overlap <= 1e-8, overlap, 1e-8);

    double critical = 0.0;
    for (std::size_t n = 4; n <= 4096; n *= 2) {
        const double exact = static_cast<double>(n) * static_cast<double>(n - 1) / 32.0;
        critical = std::max(critical, std::abs(ising::ground_metric(1.0, n) - exact) / exact);
    }
    rec.record(suite, "critical_metric_identity", critical <= 1e-10, critical, 1e-10);

    double protocol = 0.0;
    for (std::size_t n : {32u, 256u}) {
        const double path = ising::integrated_cost(n, 1.0).value;
        protocol = std::max({protocol, std::abs(ising::integrated_cost(n, ising::sweep(1.0, 1.0)).value - path) / path,
                             std::abs(ising::integrated_cost(n, ising::sweep_quintic(1.0, 2.0)).value - path) / path});
    }
    rec.record(suite, "protocol_independence", protocol <= 1e-6, protocol, 1e-6);

    double negative = 0.0, ends = 0.0;
    const auto traj = ising::cd_excess_trajectory(64, ising::sweep(1.0, 1.0), uniform_grid(1.0, 401));
    for (const auto& e : traj) negative = std::max(negative, -e.excess_variance);
    ends = std::max(traj.front().excess_variance, traj.back().excess_variance);
    rec.record(suite, "excess_nonnegative", negative <= 0.0, negative, 0.0);
    rec.record(suite, "excess_endpoints", ends == 0.0, ends, 0.0);
}

}  // namespace

CommandResult run_verify(const RunConfig& config) {
    Recorder rec;
    std::mt19937_64 rng(config.seed);

    ho::HOConfig hc;
    hc.omega_i = config.omega_i;
    hc.omega_f = config.omega_f;
    hc.tau = config.tau;
    hc.fock_dim = config.fock_dim;
    hc.mass = config.mass;
    hc.require_bound_cd_spectrum();
    const DrivenSystem system = ho::make_system(hc);
    // Throws ErrorCode::truncation when the basis cannot hold the thermal state.
    const OperatingPoint op{system, thermal_ensemble(system, config.beta)};

    cd_core_suite(rec, rng);
    work_stats_suite(rec, rng, config.cases);
    geometry_suite(rec, rng, config.cases, op);
    ho_suite(rec, config, op);
    ising_suite(rec);

    CommandResult result;
    result.passed = rec.all;
    result.lines = rec.lines;
    result.report = {{"checks", rec.checks}, {"passed", rec.all}};
    result.files.push_back(write_json("verify_report", result.report, config).string());
    return result;
}

CommandResult run_command(const RunConfig& config) {
    if (config.command == "ho-figure1") return run_ho_figure1(config);
    if (config.command == "ising-figure2") return run_ising_figure2(config);
    if (config.command == "ion-waveforms") return run_ion_waveforms(config);
    if (config.command == "verify") return run_verify(config);
    fail(ErrorCode::config, "unknown command '" + config.command + "'");
}

}  // namespace cdwork::app
