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

#include <functional>
#include <vector>

#include "cdwork/linalg.hpp"

namespace cdwork {

/// Smooth parameter path lambda(t), t in [0, tau], with an analytic rate.
///
/// Invariants enforced by the factories below: value(0) and value(tau) are
/// the exact endpoints and derivative vanishes at both ends, so the
/// counterdiabatic term is switched off at the start and end of the drive.
class Protocol {
public:
    using Path = std::function<RVector(double)>;

    Protocol(double duration, RVector initial, RVector final, Path value, Path derivative);

    [[nodiscard]] std::size_t dimension() const noexcept { return static_cast<std::size_t>(initial_.size()); }
    [[nodiscard]] double duration() const noexcept { return duration_; }
    [[nodiscard]] const RVector& initial() const noexcept { return initial_; }
    [[nodiscard]] const RVector& final() const noexcept { return final_; }

    /// lambda(t); t is clamped to [0, tau] and the endpoints are returned verbatim.
    [[nodiscard]] RVector value(double t) const;
    [[nodiscard]] RVector derivative(double t) const;

    /// Same path traversed in a different time: lambda'(t) = lambda(t tau / new_duration).
    [[nodiscard]] Protocol rescaled(double new_duration) const;

private:
    double duration_;
    RVector initial_;
    RVector final_;
    Path value_;
    Path derivative_;
};

/// One-parameter path lambda(t) = from + (to - from) u(t / tau) with a
/// scalar shape u(s), u(0) = 0, u(1) = 1, and its derivative du/ds.
Protocol scalar_protocol(double from, double to, double tau, std::function<double(double)> shape,
                         std::function<double(double)> shape_rate);

/// u(s) = 10 s^3 - 15 s^4 + 6 s^5 (zero first and second derivatives at the ends).
double smoothstep5(double s) noexcept;
double smoothstep5_rate(double s) noexcept;

/// u(s) = 3 s^2 - 2 s^3.
double smoothstep3(double s) noexcept;
double smoothstep3_rate(double s) noexcept;

Protocol constant_protocol(const RVector& value, double tau);

/// Uniform grid of `points` times spanning [0, tau].
std::vector<double> uniform_grid(double tau, std::size_t points);

}  // namespace cdwork
