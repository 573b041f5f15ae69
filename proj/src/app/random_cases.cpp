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

#include "random_cases.hpp"

#include <cmath>
#include <limits>

namespace cdwork::app {

namespace {

Protocol shaped(const std::string& shape, double from, double to, double tau) {
    if (shape == "log") return ho::log_ramp(from, to, tau);
    if (shape == "cubic") return scalar_protocol(from, to, tau, smoothstep3, smoothstep3_rate);
    return ho::ramp(from, to, tau);
}

}  // namespace

HOCase random_ho_case(std::mt19937_64& rng, std::size_t fock_dim) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    static const char* shapes[] = {"quintic", "cubic", "log"};
    HOCase c{{}, 1.0, shapes[std::uniform_int_distribution<int>(0, 2)(rng)], constant_protocol(RVector::Ones(1), 1.0)};
    c.config.fock_dim = fock_dim;
    c.config.omega_i = 0.7 + 0.8 * unit(rng);
    c.config.omega_f = c.config.omega_i * std::exp(std::log(3.0) * (2.0 * unit(rng) - 1.0));
    c.beta = unit(rng) < 0.2 ? std::numeric_limits<double>::infinity() : (1.0 + 3.0 * unit(rng)) / c.config.omega_i;
    c.config.tau = 0.5 + 2.5 * unit(rng);
    c.protocol = shaped(c.shape, c.config.omega_i, c.config.omega_f, c.config.tau);
    const double strength = ho::drive_strength(c.protocol);
    if (strength > 0.9) {
        c.config.tau *= std::sqrt(strength / 0.9) * 1.01;
        c.protocol = shaped(c.shape, c.config.omega_i, c.config.omega_f, c.config.tau);
    }
    return c;
}

}  // namespace cdwork::app
