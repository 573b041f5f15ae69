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

#include "cdwork/models/ion.hpp"
#include "commands.hpp"
#include "output.hpp"

namespace cdwork::app {

CommandResult run_ion_waveforms(const RunConfig& config) {
    CommandResult result;
    ion::IonConfig ion;
    ion.trap_frequency = config.trap_frequency;
    ion.detuning = config.nu;
    ion.mass = config.mass;
    ion.lamb_dicke = config.lamb_dicke;
    ion.raman_detuning = config.raman_detuning;
    ion.two_photon_detuning = config.two_photon_detuning;
    ion.rabi1 = config.rabi1;
    ion.validity_threshold = config.validity_threshold;

    const ion::IonWaveforms w =
        ion::ion_waveforms(ho::ramp(config.omega_i, config.omega_f, config.tau), uniform_grid(config.tau, config.grid), ion);

    Table table("ion_waveforms", {"t", "omega", "omega_dot", "Omega", "re_Omega_eff1", "im_Omega_eff1", "Omega_eff2",
                                  "validity_ratio", "Omega2", "Omega3", "phi3"});
    for (const auto& s : w.samples)
        table.add_row({s.t, s.omega, s.omega_rate, s.potential, s.coupling1.real(), s.coupling1.imag(), s.coupling2,
                       s.validity_ratio, s.rabi2, s.rabi3, s.phase3});
    result.files.push_back(write_table(table, config).string());

    const bool roundtrip_ok = w.roundtrip_error <= 1e-12 * std::max(1.0, config.nu);
    result.report = {{"effective_mass", w.effective_mass},
                     {"min_validity_ratio", json_number(w.min_validity_ratio)},
                     {"validity_threshold", config.validity_threshold},
                     {"validity_warning", w.validity_warning},
                     {"roundtrip_error", w.roundtrip_error}};
    result.files.push_back(write_json("ion_report", result.report, config).string());
    result.passed = roundtrip_ok;
    result.lines.push_back(std::string(roundtrip_ok ? "PASS " : "FAIL ") + "omega round trip, max error " +
                           format_number(w.roundtrip_error));
    if (w.validity_warning)
        result.lines.push_back("WARN ValidityWarning: adiabatic-elimination ratio " +
                               format_number(w.min_validity_ratio) + " below " +
                               format_number(config.validity_threshold));
    else
        result.lines.push_back("INFO min adiabatic-elimination ratio " + format_number(w.min_validity_ratio));
    return result;
}

}  // namespace cdwork::app
