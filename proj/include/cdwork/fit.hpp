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

#include <cstddef>
#include <span>

namespace cdwork {

/// Ordinary least squares of log y = log c + exponent * log x.
struct PowerLawFit {
    double exponent = 0.0;
    double exponent_stderr = 0.0;
    double coefficient = 0.0;
    double coefficient_stderr = 0.0;
    double residual_rms = 0.0; ///< RMS of natural-log deviations
    std::size_t points = 0;
};

PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y);

/// Least squares for y = c x^exponent with the exponent held fixed (in log space).
PowerLawFit fit_coefficient(std::span<const double> x, std::span<const double> y, double exponent);

}  // namespace cdwork
