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

#include "cdwork/protocol.hpp"

#include <algorithm>

#include "cdwork/errors.hpp"

namespace cdwork {

Protocol::Protocol(double duration, RVector initial, RVector final, Path value, Path derivative)
    : duration_(duration), initial_(std::move(initial)), final_(std::move(final)), value_(std::move(value)),
      derivative_(std::move(derivative)) {
    if (!(duration_ > 0.0)) fail(ErrorCode::invalid_argument, "Protocol: duration must be positive");
    if (initial_.size() != final_.size() || initial_.size() == 0)
        fail(ErrorCode::invalid_argument, "Protocol: endpoint dimensions differ");
}

RVector Protocol::value(double t) const {
    if (t <= 0.0) return initial_;
    if (t >= duration_) return final_;
    return value_(t);
}

RVector Protocol::derivative(double t) const {
    if (t <= 0.0 || t >= duration_) return RVector::Zero(initial_.size());
    return derivative_(t);
}

Protocol Protocol::rescaled(double new_duration) const {
    const double factor = duration_ / new_duration;
    auto value = value_;
    auto derivative = derivative_;
    return {new_duration, initial_, final_, [value, factor](double t) { return value(t * factor); },
            [derivative, factor](double t) -> RVector { return derivative(t * factor) * factor; }};
}

Protocol scalar_protocol(double from, double to, double tau, std::function<double(double)> shape,
                         std::function<double(double)> shape_rate) {
    const double span = to - from;
    RVector a(1), b(1);
    a << from;
    b << to;
    return {tau, a, b,
            [=](double t) {
                RVector v(1);
                v << from + span * shape(t / tau);
                return v;
            },
            [=](double t) {
                RVector v(1);
                v << span * shape_rate(t / tau) / tau;
                return v;
            }};
}

double smoothstep5(double s) noexcept { return s * s * s * (10.0 - 15.0 * s + 6.0 * s * s); }
double smoothstep5_rate(double s) noexcept { return 30.0 * s * s * (1.0 - s) * (1.0 - s); }
double smoothstep3(double s) noexcept { return s * s * (3.0 - 2.0 * s); }
double smoothstep3_rate(double s) noexcept { return 6.0 * s * (1.0 - s); }

Protocol constant_protocol(const RVector& value, double tau) {
    return {tau, value, value, [value](double) { return value; },
            [n = value.size()](double) -> RVector { return RVector::Zero(n); }};
}

std::vector<double> uniform_grid(double tau, std::size_t points) {
    if (points < 2) fail(ErrorCode::invalid_argument, "uniform_grid: need at least two points");
    std::vector<double> grid(points);
    const double last = static_cast<double>(points - 1);
    for (std::size_t k = 0; k < points; ++k) grid[k] = tau * (static_cast<double>(k) / last);
    grid.back() = tau;
    return grid;
}

}  // namespace cdwork
