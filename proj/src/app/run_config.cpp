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

#include "run_config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>

#include "cdwork/errors.hpp"

namespace cdwork::app {

namespace {

using nlohmann::json;

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys{
        "omega_i", "omega_f", "beta", "tau", "tau_list", "tau_sweep", "fock_dim", "grid", "n_list",
        "delta", "seed", "out", "format", "cases", "auxiliary_scale", "nu", "trap_frequency", "mass",
        "lamb_dicke", "raman_detuning", "two_photon_detuning", "rabi1", "validity_threshold"};
    return keys;
}

[[noreturn]] void bad(const std::string& key, const std::string& why) {
    fail(ErrorCode::config, "config key '" + key + "': " + why);
}

double number(const json& v, const std::string& key) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string() && (v.get<std::string>() == "inf" || v.get<std::string>() == "infinity"))
        return std::numeric_limits<double>::infinity();
    bad(key, "expected a number");
}

std::uint64_t count(const json& v, const std::string& key) {
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(v.get<std::int64_t>());
    bad(key, "expected a non-negative integer");
}

std::vector<double> number_list(const json& v, const std::string& key) {
    if (!v.is_array()) bad(key, "expected a list of numbers");
    std::vector<double> out;
    for (const auto& x : v) out.push_back(number(x, key));
    return out;
}

void positive(double v, const std::string& key) {
    if (!(v > 0.0) || std::isnan(v)) bad(key, "must be positive");
}

void positive_finite(double v, const std::string& key) {
    if (!(v > 0.0) || !std::isfinite(v)) bad(key, "must be positive and finite");
}

}  // namespace

RunConfig parse_run_config(const std::string& command, const json& doc) {
    static const std::set<std::string> commands{"ho-figure1", "ising-figure2", "ion-waveforms", "verify"};
    if (!commands.count(command)) fail(ErrorCode::config, "unknown command '" + command + "'");
    if (!doc.is_null() && !doc.is_object()) fail(ErrorCode::config, "config must be a JSON object");

    RunConfig c;
    c.command = command;
    if (command == "ho-figure1") {
        c.tau_list = {0.8, 1.6, 3.0};
        for (int i = 1; i <= 15; ++i) c.tau_sweep.push_back(i / 5.0);
    } else if (command == "ising-figure2") {
        c.tau = 1.0;
        c.tau_list = {0.5, 1.0, 2.0};
        c.n_list = {32, 64, 128, 256, 512, 1024};
    } else if (command == "ion-waveforms") {
        c.tau_list = {};
    }

    if (doc.is_object()) {
        for (const auto& [key, value] : doc.items()) {
            if (!known_keys().count(key)) fail(ErrorCode::config, "unknown config key '" + key + "'");
            if (key == "omega_i") c.omega_i = number(value, key);
            else if (key == "omega_f") c.omega_f = number(value, key);
            else if (key == "beta") c.beta = number(value, key);
            else if (key == "tau") c.tau = number(value, key);
            else if (key == "tau_list") c.tau_list = number_list(value, key);
            else if (key == "tau_sweep") c.tau_sweep = number_list(value, key);
            else if (key == "fock_dim") c.fock_dim = count(value, key);
            else if (key == "grid") c.grid = count(value, key);
            else if (key == "n_list") {
                if (!value.is_array()) bad(key, "expected a list of integers");
                c.n_list.clear();
                for (const auto& x : value) c.n_list.push_back(count(x, key));
            }
            else if (key == "delta") c.delta = number(value, key);
            else if (key == "seed") c.seed = count(value, key);
            else if (key == "out") {
                if (!value.is_string()) bad(key, "expected a string");
                c.out = value.get<std::string>();
            } else if (key == "format") {
                if (!value.is_string()) bad(key, "expected a string");
                c.format = value.get<std::string>();
            }
            else if (key == "cases") c.cases = count(value, key);
            else if (key == "auxiliary_scale") c.auxiliary_scale = number(value, key);
            else if (key == "nu") c.nu = number(value, key);
            else if (key == "trap_frequency") c.trap_frequency = number(value, key);
            else if (key == "mass") c.mass = number(value, key);
            else if (key == "lamb_dicke") c.lamb_dicke = number(value, key);
            else if (key == "raman_detuning") c.raman_detuning = number(value, key);
            else if (key == "two_photon_detuning") c.two_photon_detuning = number(value, key);
            else if (key == "rabi1") c.rabi1 = number(value, key);
            else if (key == "validity_threshold") c.validity_threshold = number(value, key);
        }
    }

    positive_finite(c.omega_i, "omega_i");
    positive_finite(c.omega_f, "omega_f");
    positive(c.beta, "beta");
    positive_finite(c.tau, "tau");
    positive_finite(c.mass, "mass");
    positive_finite(c.nu, "nu");
    positive_finite(c.trap_frequency, "trap_frequency");
    positive_finite(c.lamb_dicke, "lamb_dicke");
    positive_finite(c.raman_detuning, "raman_detuning");
    positive_finite(c.two_photon_detuning, "two_photon_detuning");
    positive_finite(c.rabi1, "rabi1");
    positive_finite(c.validity_threshold, "validity_threshold");
    positive_finite(c.auxiliary_scale, "auxiliary_scale");
    if ((c.command == "ho-figure1" || c.command == "ising-figure2") && c.tau_list.empty()) bad("tau_list", "must not be empty");
    for (double t : c.tau_list) positive_finite(t, "tau_list");
    if (c.command == "ho-figure1" && c.tau_sweep.empty()) bad("tau_sweep", "must not be empty");
    for (double t : c.tau_sweep) positive_finite(t, "tau_sweep");
    if (c.fock_dim < 40) bad("fock_dim", "must be at least 40");
    if (c.fock_dim > 2000) bad("fock_dim", "must be at most 2000");
    if (c.grid < 3) bad("grid", "must be at least 3");
    if (c.command == "ising-figure2") {
        positive_finite(c.delta, "delta");
        if (c.n_list.empty()) bad("n_list", "must not be empty");
        for (auto n : c.n_list)
            if (n < 4 || n % 2 != 0) bad("n_list", "sizes must be even and at least 4");
    }
    if (c.format != "csv" && c.format != "json") bad("format", "must be 'csv' or 'json'");
    if (c.out.empty()) bad("out", "must not be empty");
    if (c.command == "verify" && c.cases == 0) bad("cases", "must be positive");
    return c;
}

nlohmann::json to_json(const RunConfig& c) {
    json j;
    j["command"] = c.command;
    j["omega_i"] = c.omega_i;
    j["omega_f"] = c.omega_f;
    j["beta"] = std::isinf(c.beta) ? json("inf") : json(c.beta);
    j["tau"] = c.tau;
    j["tau_list"] = c.tau_list;
    j["tau_sweep"] = c.tau_sweep;
    j["fock_dim"] = c.fock_dim;
    j["grid"] = c.grid;
    j["n_list"] = c.n_list;
    j["delta"] = c.delta;
    j["seed"] = c.seed;
    j["out"] = c.out;
    j["format"] = c.format;
    j["cases"] = c.cases;
    j["auxiliary_scale"] = c.auxiliary_scale;
    j["nu"] = c.nu;
    j["trap_frequency"] = c.trap_frequency;
    j["mass"] = c.mass;
    j["lamb_dicke"] = c.lamb_dicke;
    j["raman_detuning"] = c.raman_detuning;
    j["two_photon_detuning"] = c.two_photon_detuning;
    j["rabi1"] = c.rabi1;
    j["validity_threshold"] = c.validity_threshold;
    return j;
}

std::string config_hash(const RunConfig& config) {
    const std::string text = to_json(config).dump();
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace cdwork::app
