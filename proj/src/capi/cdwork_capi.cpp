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

#include "cdwork/cdwork.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "../app/commands.hpp"
#include "cdwork/counterdiabatic.hpp"
#include "cdwork/errors.hpp"
#include "cdwork/geometry.hpp"
#include "cdwork/models/harmonic.hpp"
#include "cdwork/models/ising.hpp"
#include "cdwork/version.hpp"
#include "cdwork/work_stats.hpp"

struct cdwork_session {
    std::string report = "{}";
    std::vector<std::string> lines;
};

struct cdwork_ho {
    std::shared_ptr<cdwork::ho::HarmonicOscillator> model;
    cdwork::DrivenSystem system;
    cdwork::ThermalEnsemble ensemble;
};

namespace {

thread_local std::string last_error;

template <class F>
cdwork_status guarded(F&& body) noexcept {
    try {
        last_error.clear();
        body();
        return CDWORK_OK;
    } catch (const cdwork::Error& e) {
        last_error = e.what();
        return static_cast<cdwork_status>(static_cast<int>(e.code()));
    } catch (const nlohmann::json::exception& e) {
        last_error = e.what();
        return CDWORK_CONFIG;
    } catch (const std::exception& e) {
        last_error = e.what();
        return CDWORK_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return CDWORK_INTERNAL;
    }
}

void require(bool condition, const char* what) {
    if (!condition) cdwork::fail(cdwork::ErrorCode::invalid_argument, what);
}

nlohmann::json parse_document(const char* config_json) {
    if (config_json == nullptr || *config_json == '\0') return nlohmann::json::object();
    try {
        return nlohmann::json::parse(config_json);
    } catch (const nlohmann::json::parse_error& e) {
        cdwork::fail(cdwork::ErrorCode::config, std::string("config is not valid JSON: ") + e.what());
    }
}

}  // namespace

extern "C" {

const char* cdwork_version(void) { return cdwork::kVersion; }

const char* cdwork_status_name(cdwork_status status) {
    if (status == CDWORK_INTERNAL) return "internal";
    if (status < CDWORK_OK || status > CDWORK_IO) return "unknown";
    return cdwork::to_string(static_cast<cdwork::ErrorCode>(status));
}

const char* cdwork_last_error(void) { return last_error.c_str(); }

cdwork_status cdwork_session_create(cdwork_session** out) {
    return guarded([&] {
        require(out != nullptr, "out is null");
        *out = new cdwork_session();
    });
}

void cdwork_session_destroy(cdwork_session* session) { delete session; }

cdwork_status cdwork_run(cdwork_session* session, const char* command, const char* config_json, int* passed) {
    return guarded([&] {
        require(session != nullptr && command != nullptr, "session and command are required");
        const auto config = cdwork::app::parse_run_config(command, parse_document(config_json));
        const auto result = cdwork::app::run_command(config);
        session->report = result.report.dump(2);
        session->lines = result.lines;
        if (passed != nullptr) *passed = result.passed ? 1 : 0;
    });
}

const char* cdwork_session_report(const cdwork_session* session) {
    return session == nullptr ? "" : session->report.c_str();
}

size_t cdwork_session_line_count(const cdwork_session* session) {
    return session == nullptr ? 0 : session->lines.size();
}

const char* cdwork_session_line(const cdwork_session* session, size_t index) {
    if (session == nullptr || index >= session->lines.size()) return nullptr;
    return session->lines[index].c_str();
}

cdwork_status cdwork_config_hash(const char* command, const char* config_json, char* buffer, size_t buffer_size) {
    return guarded([&] {
        require(command != nullptr && buffer != nullptr, "command and buffer are required");
        const std::string hash = cdwork::app::config_hash(cdwork::app::parse_run_config(command, parse_document(config_json)));
        require(buffer_size > hash.size(), "buffer too small");
        std::memcpy(buffer, hash.c_str(), hash.size() + 1);
    });
}

cdwork_status cdwork_ho_create(double omega_i, double omega_f, double tau, size_t fock_dim, double beta,
                               cdwork_ho** out) {
    return guarded([&] {
        require(out != nullptr, "out is null");
        cdwork::ho::HOConfig config;
        config.omega_i = omega_i;
        config.omega_f = omega_f;
        config.tau = tau;
        config.fock_dim = fock_dim;
        config.validate();
        auto model = std::make_shared<cdwork::ho::HarmonicOscillator>(fock_dim, omega_i);
        cdwork::DrivenSystem system(model, cdwork::ho::ramp(omega_i, omega_f, tau));
        auto ensemble = cdwork::thermal_ensemble(system, beta);
        *out = new cdwork_ho{std::move(model), std::move(system), std::move(ensemble)};
    });
}

void cdwork_ho_destroy(cdwork_ho* ho) { delete ho; }

cdwork_status cdwork_ho_set_auxiliary_scale(cdwork_ho* ho, double scale) {
    return guarded([&] {
        require(ho != nullptr, "handle is null");
        ho->model->set_auxiliary_scale(scale);
    });
}

cdwork_status cdwork_ho_work_moments(const cdwork_ho* ho, double t, cdwork_work_moments* out) {
    return guarded([&] {
        require(ho != nullptr && out != nullptr, "handle and out are required");
        require(t >= 0.0 && t <= ho->system.duration(), "t outside [0, tau]");
        const auto snap = cdwork::work_snapshot(ho->system, ho->ensemble, t);
        const auto cd = cdwork::work_distribution(snap, ho->ensemble, cdwork::WorkTag::counterdiabatic);
        const auto ad = cdwork::work_distribution(snap, ho->ensemble, cdwork::WorkTag::adiabatic);
        out->mean_cd = cdwork::mean_work(cd);
        out->mean_adiabatic = cdwork::mean_work(ad);
        out->variance_cd = cdwork::variance_work(cd);
        out->variance_adiabatic = cdwork::variance_work(ad);
        out->excess_direct = cdwork::excess_variance_direct(snap, ho->ensemble);
        out->excess_geometric = cdwork::excess_variance_geometric(ho->system, ho->ensemble, t);
    });
}

cdwork_status cdwork_ho_speed_limit(const cdwork_ho* ho, size_t grid_points, cdwork_speed_limit* out) {
    return guarded([&] {
        require(ho != nullptr && out != nullptr, "handle and out are required");
        require(grid_points >= 3, "grid_points must be at least 3");
        cdwork::SpeedLimitOptions options;
        options.grid_points = grid_points;
        const auto r = cdwork::speed_limit_report(ho->system, ho->ensemble, options);
        *out = {r.metric_length,  r.bures_length,    r.eta_length,     r.mean_excess_fluctuation,
                r.mean_energy_fluctuation, r.excess_bound, r.energy_bound, r.equality_holds ? 1 : 0,
                r.chain_holds ? 1 : 0, r.ordering_holds ? 1 : 0};
    });
}

cdwork_status cdwork_ho_certificate(const cdwork_ho* ho, size_t max_level, int with_auxiliary, size_t grid_points,
                                    double* worst_fidelity) {
    return guarded([&] {
        require(ho != nullptr && worst_fidelity != nullptr, "handle and out are required");
        require(grid_points >= 2, "grid_points must be at least 2");
        std::vector<std::size_t> levels;
        for (std::size_t n = 0; n <= max_level; ++n) levels.push_back(n);
        const auto report = cdwork::transitionless_certificate(ho->system, levels,
                                                               cdwork::uniform_grid(ho->system.duration(), grid_points),
                                                               with_auxiliary != 0);
        double worst = 1.0;
        for (const auto& e : report.entries) worst = std::min(worst, e.final_fidelity);
        *worst_fidelity = worst;
    });
}

cdwork_status cdwork_ising_ground_metric(size_t sites, double lambda, double* out) {
    return guarded([&] {
        require(out != nullptr, "out is null");
        require(sites >= 4 && sites % 2 == 0, "sites must be even and at least 4");
        *out = cdwork::ising::ground_metric(lambda, sites);
    });
}

cdwork_status cdwork_ising_cost(size_t sites, double delta, double* out) {
    return guarded([&] {
        require(out != nullptr, "out is null");
        require(sites >= 4 && sites % 2 == 0, "sites must be even and at least 4");
        *out = cdwork::ising::integrated_cost(sites, delta).value;
    });
}

cdwork_status cdwork_ising_scaling(const size_t* sites, size_t count, double delta, double* exponent,
                                   double* residual_rms) {
    return guarded([&] {
        require(sites != nullptr && exponent != nullptr && residual_rms != nullptr, "null argument");
        const auto fit = cdwork::ising::scaling_fit(std::vector<std::size_t>(sites, sites + count), delta);
        *exponent = fit.exponent;
        *residual_rms = fit.residual_rms;
    });
}

}  // extern "C"
