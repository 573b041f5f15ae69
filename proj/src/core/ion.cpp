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

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cdwork/errors.hpp"

namespace cdwork::ion {

void IonConfig::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v)) fail(ErrorCode::config, std::string("ion: ") + name + " must be positive");
    };
    positive(trap_frequency, "trap frequency");
    positive(detuning, "detuning nu");
    positive(mass, "mass");
    positive(lamb_dicke, "Lamb-Dicke parameter");
    positive(raman_detuning, "Raman detuning");
    positive(two_photon_detuning, "two-photon detuning");
    positive(rabi1, "Rabi frequency Omega_1");
    positive(validity_threshold, "validity threshold");
}

double frequency_from_potential(double nu, double potential) noexcept {
    return std::sqrt(nu * (nu - 2.0 * potential));
}

IonWaveforms ion_waveforms(const Protocol& protocol, const std::vector<double>& grid, const IonConfig& config) {
    config.validate();
    if (protocol.dimension() != 1) fail(ErrorCode::invalid_argument, "ion_waveforms: protocol must be scalar");
    const double nu = config.detuning;
    IonWaveforms out;
    out.effective_mass = config.effective_mass();
    out.min_validity_ratio = std::numeric_limits<double>::infinity();
    out.samples.reserve(grid.size());
    for (double t : grid) {
        WaveformSample s;
        s.t = t;
        s.omega = protocol.value(t)(0);
        s.omega_rate = protocol.derivative(t)(0);
        if (!(s.omega > 0.0)) fail(ErrorCode::invalid_argument, "ion_waveforms: omega must stay positive");
        if (s.omega * s.omega > nu * nu * (1.0 + 1e-12)) {
            std::ostringstream msg;
            msg << "ion_waveforms: omega(" << t << ") = " << s.omega << " exceeds the detuning nu = " << nu
                << "; the induced potential would change sign";
            fail(ErrorCode::invalid_detuning, msg.str());
        }
        s.potential = std::max(0.0, (nu * nu - s.omega * s.omega) / (2.0 * nu));
        s.coupling1 = Complex(-s.potential, s.omega_rate / (2.0 * s.omega));
        s.coupling2 = s.potential;

        const double sideband = 2.0 * std::sqrt((nu + config.two_photon_detuning) * s.potential);
        s.rabi2 = sideband * config.raman_detuning / (config.lamb_dicke * config.rabi1);
        s.rabi3 = std::abs(s.coupling1) * config.raman_detuning / (config.lamb_dicke * config.lamb_dicke * config.rabi1);
        s.phase3 = std::abs(s.coupling1) > 0.0 ? -std::arg(s.coupling1) : 0.0;
        s.validity_ratio = sideband > 0.0 ? config.two_photon_detuning / sideband
                                          : std::numeric_limits<double>::infinity();

        out.min_validity_ratio = std::min(out.min_validity_ratio, s.validity_ratio);
        out.roundtrip_error =
            std::max(out.roundtrip_error, std::abs(frequency_from_potential(nu, s.potential) - s.omega));
        out.samples.push_back(s);
    }
    out.validity_warning = out.min_validity_ratio < config.validity_threshold;
    return out;
}

}  // namespace cdwork::ion
