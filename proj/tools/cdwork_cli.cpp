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

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cdwork/cdwork.h"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

struct Flags {
    std::optional<double> omega_i, omega_f, tau, delta, nu, auxiliary_scale;
    std::optional<std::string> beta, out, format, config;
    std::optional<std::size_t> fock_dim, grid, cases;
    std::optional<unsigned long long> seed;
    std::vector<double> tau_list, tau_sweep;
    std::vector<std::size_t> n_list;
};

bool use_color() { return std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO) == 1; }

void print_line(const std::string& line, bool color) {
    if (!color) {
        std::cout << line << '\n';
        return;
    }
    const char* code = nullptr;
    if (line.rfind("PASS", 0) == 0) code = "\033[32m";
    else if (line.rfind("FAIL", 0) == 0) code = "\033[31m";
    else if (line.rfind("WARN", 0) == 0) code = "\033[33m";
    if (code == nullptr) std::cout << line << '\n';
    else std::cout << code << line.substr(0, 4) << "\033[0m" << line.substr(4) << '\n';
}

void add_physics_flags(CLI::App* sub, Flags& f) {
    sub->add_option("--omega-i", f.omega_i, "initial trap frequency");
    sub->add_option("--omega-f", f.omega_f, "final trap frequency");
    sub->add_option("--beta", f.beta, "inverse temperature, or inf");
    sub->add_option("--tau", f.tau, "ramp duration");
    sub->add_option("--tau-list", f.tau_list, "durations for the per-tau datasets")->delimiter(',');
    sub->add_option("--tau-sweep", f.tau_sweep, "durations for the speed-limit sweep")->delimiter(',');
    sub->add_option("--fock-dim", f.fock_dim, "Fock basis dimension");
    sub->add_option("--grid", f.grid, "time grid points");
    sub->add_option("--n-list", f.n_list, "Ising ring sizes")->delimiter(',');
    sub->add_option("--delta", f.delta, "Ising sweep half-width around the critical point");
    sub->add_option("--nu", f.nu, "ion detuning nu");
    sub->add_option("--seed", f.seed, "seed for randomized suites");
    sub->add_option("--cases", f.cases, "random cases per property");
    sub->add_option("--auxiliary-scale", f.auxiliary_scale, "scale of the closed-form auxiliary term");
    sub->add_option("--out", f.out, "output directory");
    sub->add_option("--format", f.format, "csv or json");
    sub->add_option("--config", f.config, "JSON config file; flags override its values");
}

template <class T>
void put(nlohmann::json& doc, const char* key, const std::optional<T>& value) {
    if (value) doc[key] = *value;
}

template <class T>
void put(nlohmann::json& doc, const char* key, const std::vector<T>& value) {
    if (!value.empty()) doc[key] = value;
}

nlohmann::json merged_config(const Flags& f) {
    nlohmann::json doc = nlohmann::json::object();
    if (f.config) {
        std::ifstream in(*f.config);
        if (!in) throw std::runtime_error("cannot read config file '" + *f.config + "'");
        doc = nlohmann::json::parse(in);
        if (!doc.is_object()) throw std::runtime_error("config file must hold a JSON object");
    }
    put(doc, "omega_i", f.omega_i);
    put(doc, "omega_f", f.omega_f);
    put(doc, "tau", f.tau);
    put(doc, "delta", f.delta);
    put(doc, "nu", f.nu);
    put(doc, "auxiliary_scale", f.auxiliary_scale);
    put(doc, "out", f.out);
    put(doc, "format", f.format);
    put(doc, "fock_dim", f.fock_dim);
    put(doc, "grid", f.grid);
    put(doc, "cases", f.cases);
    put(doc, "seed", f.seed);
    put(doc, "tau_list", f.tau_list);
    put(doc, "tau_sweep", f.tau_sweep);
    put(doc, "n_list", f.n_list);
    if (f.beta) {
        if (*f.beta == "inf" || *f.beta == "infinity") doc["beta"] = "inf";
        else doc["beta"] = std::stod(*f.beta);
    }
    return doc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Counterdiabatic work statistics: figure data and verification suites"};
    app.set_version_flag("--version", cdwork_version());
    app.require_subcommand(1);
    Flags flags;
    for (const char* name : {"ho-figure1", "ising-figure2", "ion-waveforms", "verify"}) {
        add_physics_flags(app.add_subcommand(name, ""), flags);
    }
    app.get_subcommand("ho-figure1")->description("oscillator ramp: mean work, variances, excess, speed limit");
    app.get_subcommand("ising-figure2")->description("Ising ring: excess fluctuations and critical scaling");
    app.get_subcommand("ion-waveforms")->description("trapped-ion control waveforms for the oscillator ramp");
    app.get_subcommand("verify")->description("run every property suite and report per invariant");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    std::string document;
    try {
        document = merged_config(flags).dump();
    } catch (const std::exception& e) {
        std::cerr << "error: config: " << e.what() << '\n';
        return kExitConfig;
    }

    cdwork_session* session = nullptr;
    if (cdwork_session_create(&session) != CDWORK_OK) {
        std::cerr << "error: " << cdwork_last_error() << '\n';
        return kExitFailure;
    }
    int passed = 0;
    const cdwork_status status = cdwork_run(session, command.c_str(), document.c_str(), &passed);
    if (status != CDWORK_OK) {
        std::cerr << "error: " << cdwork_status_name(status) << ": " << cdwork_last_error() << '\n';
        cdwork_session_destroy(session);
        return status == CDWORK_CONFIG ? kExitConfig : kExitFailure;
    }
    const bool color = use_color();
    for (std::size_t i = 0; i < cdwork_session_line_count(session); ++i) print_line(cdwork_session_line(session, i), color);
    cdwork_session_destroy(session);
    return passed ? kExitOk : kExitFailure;
}
