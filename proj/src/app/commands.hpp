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

#include <string>
#include <vector>

#include "json.hpp"
#include "run_config.hpp"

namespace cdwork::app {

/// Outcome of a subcommand. `passed` is false when a physics check failed;
/// errors are reported by throwing cdwork::Error instead.
struct CommandResult {
    bool passed = true;
    nlohmann::json report;
    std::vector<std::string> files;
    std::vector<std::string> lines; ///< one human-readable line per check
};

CommandResult run_ho_figure1(const RunConfig& config);
CommandResult run_ising_figure2(const RunConfig& config);
CommandResult run_ion_waveforms(const RunConfig& config);
CommandResult run_verify(const RunConfig& config);

CommandResult run_command(const RunConfig& config);

}  // namespace cdwork::app
