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

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace cdwork {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

/// Dense Hermitian matrix (hbar = 1, energies in model units).
///
/// Construction checks ||A - A^dagger||_F <= 1e-12 ||A||_F and throws
/// ErrorCode::non_hermitian_input otherwise. The stored matrix is the
/// symmetrized (A + A^dagger)/2 so downstream solvers see exact symmetry.
class HermitianOperator {
public:
    static constexpr double kSymmetryTolerance = 1e-12;

    HermitianOperator() = default;
    explicit HermitianOperator(CMatrix entries);
    explicit HermitianOperator(const RMatrix& entries);

    static HermitianOperator zero(std::size_t dimension);

    [[nodiscard]] const CMatrix& matrix() const noexcept { return m_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return static_cast<std::size_t>(m_.rows()); }
    [[nodiscard]] double frobenius_norm() const { return m_.norm(); }
    /// True when every imaginary part is exactly zero.
    [[nodiscard]] bool is_real() const noexcept { return real_; }

    HermitianOperator& operator+=(const HermitianOperator& other);
    HermitianOperator& operator*=(double factor);
    friend HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b) { return a += b; }
    friend HermitianOperator operator*(HermitianOperator a, double f) { return a *= f; }
    friend HermitianOperator operator*(double f, HermitianOperator a) { return a *= f; }

private:
    struct Unchecked {};
    HermitianOperator(CMatrix entries, Unchecked);
    CMatrix m_;
    bool real_ = true;
};

/// Relative Frobenius asymmetry ||A - A^dagger|| / ||A|| (0 for A = 0).
double hermiticity_defect(const CMatrix& a);

}  // namespace cdwork
