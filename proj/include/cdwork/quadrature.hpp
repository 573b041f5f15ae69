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
#include <functional>
#include <span>

namespace cdwork {

struct QuadratureOptions {
    double relative_tolerance = 1e-8;
    double absolute_floor = 1e-14;
    std::size_t max_nodes = std::size_t{1} << 15;
    std::size_t max_depth = 40;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t nodes = 0;
};

/// Adaptive Simpson with Richardson correction. Throws
/// ErrorCode::quadrature_not_converged when the node cap is hit or a subinterval
/// exceeds max_depth before meeting its share of the tolerance.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  const QuadratureOptions& options = {});

/// Composite Simpson on samples over a uniform grid; an even number of
/// intervals is required (odd counts fall back to a trailing 3/8 panel).
double composite_simpson(std::span<const double> samples, double a, double b);

}  // namespace cdwork
