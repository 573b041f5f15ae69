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

#include <random>
#include <string>

#include "cdwork/models/harmonic.hpp"

namespace cdwork::app {

/// One randomized oscillator drive for the property suites.
struct HOCase {
    ho::HOConfig config;
    double beta = 1.0;
    std::string shape;  ///< "quintic", "cubic" or "log"
    Protocol protocol;
};

/// beta omega_i >= 1 (or beta = inf) keeps the thermal prefix inside the
/// trusted third of a 96-level basis; tau is stretched until
/// omega_dot^2 / 4 omega^4 <= 0.9 so H_CD stays bound.
HOCase random_ho_case(std::mt19937_64& rng, std::size_t fock_dim = 96);

}  // namespace cdwork::app
