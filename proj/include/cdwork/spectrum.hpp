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

#include "cdwork/linalg.hpp"

namespace cdwork {

enum class GaugeConvention {
    /// In every eigenvector the entry of largest magnitude is real and positive
    /// (ties resolved in favour of the lowest index).
    largest_entry_real_positive,
};

/// Instantaneous eigensystem of a Hermitian operator.
struct Spectrum {
    RVector eigenvalues;   ///< ascending
    CMatrix eigenvectors;  ///< column n <-> eigenvalues(n)
    GaugeConvention gauge = GaugeConvention::largest_entry_real_positive;
    double norm = 0.0;             ///< max |eigenvalue|
    bool degenerate_gauge = false; ///< two eigenvalues closer than kDegeneracyTolerance * norm

    static constexpr double kDegeneracyTolerance = 1e-9;

    [[nodiscard]] std::size_t dimension() const noexcept { return static_cast<std::size_t>(eigenvalues.size()); }
    [[nodiscard]] auto vector(std::size_t n) const { return eigenvectors.col(static_cast<Eigen::Index>(n)); }
};

/// Deterministic gauge-fixed diagonalization. Real-symmetric input takes a
/// real solver path; the result is identical in content either way.
Spectrum spectrum(const HermitianOperator& h);

/// Applies the gauge convention to the columns of `vectors` in place.
void fix_gauge(CMatrix& vectors);

/// max_n ||H v_n - e_n v_n||.
double spectral_residual(const HermitianOperator& h, const Spectrum& s);

/// v_n^dag H v_n for every column. Accurate to rounding relative to |e_n|
/// rather than to ||H||, which matters for differences of nearby levels.
RVector rayleigh_quotients(const HermitianOperator& h, const Spectrum& s);

/// exp(-i H dt) applied through the spectrum of H.
CMatrix evolution_operator(const Spectrum& s, double dt);

}  // namespace cdwork
