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

#include <vector>

#include "cdwork/models/harmonic.hpp"

namespace cdwork::ion {

/// Raman configuration that realizes the driven oscillator. omega_hf and
/// omega_e are carried for bookkeeping only.
struct IonConfig {
    double trap_frequency = 3.0;   ///< omega_0
    double detuning = 3.0;         ///< nu
    double mass = 1.0;
    double lamb_dicke = 0.1;       ///< eta
    double raman_detuning = 1000.0; ///< Delta
    double two_photon_detuning = 1000.0; ///< delta in the validity constraint
    double rabi1 = 100.0;          ///< Omega_1, held constant
    double validity_threshold = 10.0;
    double hyperfine_splitting = 0.0; ///< omega_hf
    double excited_energy = 0.0;      ///< omega_e

    [[nodiscard]] double effective_mass() const noexcept { return mass * trap_frequency / detuning; }
    void validate() const;
};

struct WaveformSample {
    double t = 0.0;
    double omega = 0.0;
    double omega_rate = 0.0;
    double potential = 0.0;        ///< Omega(t) = (nu^2 - omega^2) / 2 nu
    Complex coupling1;             ///< Omega_eff,1 = -Omega + i omega_dot / 2 omega
    double coupling2 = 0.0;        ///< Omega_eff,2 = Omega
    double rabi2 = 0.0;
    double rabi3 = 0.0;
    double phase3 = 0.0;
    double validity_ratio = 0.0;   ///< delta / (eta Omega_1 Omega_2 / Delta), +inf where Omega = 0
};

struct IonWaveforms {
    std::vector<WaveformSample> samples;
    double effective_mass = 0.0;
    double min_validity_ratio = 0.0;
    bool validity_warning = false;  ///< min ratio below validity_threshold
    double roundtrip_error = 0.0;   ///< max |sqrt(nu (nu - 2 Omega)) - omega|
};

/// Throws ErrorCode::invalid_detuning if omega(t)^2 > nu^2 anywhere on the grid.
IonWaveforms ion_waveforms(const Protocol& protocol, const std::vector<double>& grid, const IonConfig& config);

/// omega = sqrt(nu (nu - 2 Omega)).
double frequency_from_potential(double nu, double potential) noexcept;

}  // namespace cdwork::ion
