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

#include "cdwork/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "cdwork/errors.hpp"

namespace cdwork {

namespace {

struct Panel {
    double a, b;
    double fa, fm, fb;
    double flm, frm;  // quarter points
    double value;     // Richardson-corrected
    double error;
    std::size_t depth;
};

Panel make_panel(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
                 std::size_t depth) {
    Panel p{a, b, fa, fm, fb, 0.0, 0.0, 0.0, 0.0, depth};
    const double h = b - a;
    p.flm = f(a + 0.25 * h);
    p.frm = f(a + 0.75 * h);
    const double coarse = h / 6.0 * (fa + 4.0 * fm + fb);
    const double fine = h / 12.0 * (fa + 4.0 * p.flm + 2.0 * fm + 4.0 * p.frm + fb);
    p.value = fine + (fine - coarse) / 15.0;
    p.error = std::abs(fine - coarse) / 15.0;
    if (!std::isfinite(p.value)) fail(ErrorCode::quadrature_not_converged, "adaptive_simpson: non-finite integrand");
    return p;
}

struct ByError {
    bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  const QuadratureOptions& options) {
    QuadratureResult result;
    if (a == b) return result;
    if (!(a < b)) {
        QuadratureResult flipped = adaptive_simpson(f, b, a, options);
        flipped.value = -flipped.value;
        return flipped;
    }

    constexpr int initial_panels = 8;
    std::priority_queue<Panel, std::vector<Panel>, ByError> queue;
    const double h = (b - a) / initial_panels;
    double left = f(a);
    std::size_t nodes = 1;
    for (int i = 0; i < initial_panels; ++i) {
        const double x0 = a + i * h;
        const double x1 = (i + 1 == initial_panels) ? b : a + (i + 1) * h;
        const double fm = f(0.5 * (x0 + x1));
        const double right = f(x1);
        queue.push(make_panel(f, x0, x1, left, fm, right, 0));
        nodes += 4;
        left = right;
    }

    auto totals = [&queue]() {
        // Recomputed from scratch so the reduction order is fixed.
        auto copy = queue;
        std::vector<Panel> panels;
        while (!copy.empty()) {
            panels.push_back(copy.top());
            copy.pop();
        }
        std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
        double value = 0.0, error = 0.0;
        for (const auto& p : panels) {
            value += p.value;
            error += p.error;
        }
        return std::pair{value, error};
    };

    double value = 0.0, error = 0.0;
    {
        auto [v, e] = totals();
        value = v;
        error = e;
    }
    while (error > std::max(options.relative_tolerance * std::abs(value), options.absolute_floor)) {
        Panel worst = queue.top();
        if (worst.depth >= options.max_depth || nodes + 4 > options.max_nodes) {
            std::ostringstream msg;
            msg << "adaptive_simpson: tolerance " << options.relative_tolerance << " not reached on [" << a << ", " << b
                << "] (estimate " << value << ", error " << error << ", nodes " << nodes << ", worst panel at ["
                << worst.a << ", " << worst.b << "] depth " << worst.depth << ")";
            fail(ErrorCode::quadrature_not_converged, msg.str());
        }
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Panel l = make_panel(f, worst.a, mid, worst.fa, worst.flm, worst.fm, worst.depth + 1);
        Panel r = make_panel(f, mid, worst.b, worst.fm, worst.frm, worst.fb, worst.depth + 1);
        nodes += 4;
        value += l.value + r.value - worst.value;
        error += l.error + r.error - worst.error;
        queue.push(l);
        queue.push(r);
        if (error <= std::max(options.relative_tolerance * std::abs(value), options.absolute_floor)) {
            auto [v, e] = totals();
            value = v;
            error = e;
        }
    }
    auto [v, e] = totals();
    result.value = v;
    result.error_estimate = e;
    result.nodes = nodes;
    return result;
}

double composite_simpson(std::span<const double> y, double a, double b) {
    const std::size_t n = y.size();
    if (n < 2) fail(ErrorCode::invalid_argument, "composite_simpson: need at least two samples");
    const std::size_t intervals = n - 1;
    const double h = (b - a) / static_cast<double>(intervals);
    if (intervals == 1) return 0.5 * h * (y[0] + y[1]);
    if (intervals == 2) return h / 3.0 * (y[0] + 4.0 * y[1] + y[2]);

    const std::size_t simpson_end = (intervals % 2 == 0) ? intervals : intervals - 3;
    double sum = 0.0;
    for (std::size_t i = 0; i < simpson_end; i += 2) sum += y[i] + 4.0 * y[i + 1] + y[i + 2];
    sum *= h / 3.0;
    if (simpson_end != intervals) {
        const std::size_t i = simpson_end;
        sum += 3.0 * h / 8.0 * (y[i] + 3.0 * y[i + 1] + 3.0 * y[i + 2] + y[i + 3]);
    }
    return sum;
}

}  // namespace cdwork
