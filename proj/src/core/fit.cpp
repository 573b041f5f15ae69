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

#include "cdwork/fit.hpp"

#include <cmath>

#include "cdwork/errors.hpp"

namespace cdwork {

namespace {

void check_inputs(std::span<const double> x, std::span<const double> y, std::size_t minimum) {
    if (x.size() != y.size()) fail(ErrorCode::invalid_argument, "power-law fit: x and y differ in length");
    if (x.size() < minimum) fail(ErrorCode::invalid_argument, "power-law fit: too few points");
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!(x[i] > 0.0) || !(y[i] > 0.0))
            fail(ErrorCode::invalid_argument, "power-law fit: data must be strictly positive");
}

}  // namespace

PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y) {
    check_inputs(x, y, 3);
    const auto n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = std::log(x[i]) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(y[i]) - my);
    }
    if (sxx == 0.0) fail(ErrorCode::invalid_argument, "power-law fit: x values are all equal");

    PowerLawFit fit;
    fit.points = x.size();
    fit.exponent = sxy / sxx;
    const double intercept = my - fit.exponent * mx;
    fit.coefficient = std::exp(intercept);
    double ssr = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = std::log(y[i]) - intercept - fit.exponent * std::log(x[i]);
        ssr += r * r;
    }
    fit.residual_rms = std::sqrt(ssr / n);
    const double s2 = ssr / (n - 2.0);
    fit.exponent_stderr = std::sqrt(s2 / sxx);
    fit.coefficient_stderr = fit.coefficient * std::sqrt(s2 * (1.0 / n + mx * mx / sxx));
    return fit;
}

PowerLawFit fit_coefficient(std::span<const double> x, std::span<const double> y, double exponent) {
    check_inputs(x, y, 2);
    const auto n = static_cast<double>(x.size());
    double intercept = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) intercept += std::log(y[i]) - exponent * std::log(x[i]);
    intercept /= n;
    double ssr = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = std::log(y[i]) - intercept - exponent * std::log(x[i]);
        ssr += r * r;
    }
    PowerLawFit fit;
    fit.points = x.size();
    fit.exponent = exponent;
    fit.coefficient = std::exp(intercept);
    fit.residual_rms = std::sqrt(ssr / n);
    fit.coefficient_stderr = fit.coefficient * std::sqrt(ssr / (n - 1.0) / n);
    return fit;
}

}  // namespace cdwork
