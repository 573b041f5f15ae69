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

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace cdwork::app {

/// Resolved settings of one CLI run. Unset list fields take command defaults.
struct RunConfig {
    std::string command;
    double omega_i = 1.0;
    double omega_f = 3.0;
    double beta = 1.0;          ///< +inf selects the ground state
    double tau = 0.8;
    std::vector<double> tau_list;
    std::vector<double> tau_sweep;
    std::size_t fock_dim = 120;
    std::size_t grid = 401;
    std::vector<std::size_t> n_list;
    double delta = 1.0;
    std::uint64_t seed = 20260101;
    std::string out = "out";
    std::string format = "csv";
    std::size_t cases = 20;
    double auxiliary_scale = 1.0;
    // ion-waveforms
    double nu = 3.0;
    double trap_frequency = 3.0;
    double mass = 1.0;
    double lamb_dicke = 0.1;
    double raman_detuning = 1000.0;
    double two_photon_detuning = 1000.0;
    double rabi1 = 100.0;
    double validity_threshold = 10.0;
};

/// Builds a RunConfig from a JSON object. Unknown keys, wrong types and
/// out-of-range values throw ErrorCode::config with the offending key named.
RunConfig parse_run_config(const std::string& command, const nlohmann::json& document);

/// Canonical JSON of every resolved field (sorted keys).
nlohmann::json to_json(const RunConfig& config);

/// FNV-1a 64-bit over the canonical JSON, as 16 hex digits.
std::string config_hash(const RunConfig& config);

}  // namespace cdwork::app
