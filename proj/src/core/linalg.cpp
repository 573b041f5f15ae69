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

#include "cdwork/linalg.hpp"

#include <string>

#include "cdwork/errors.hpp"

namespace cdwork {

double hermiticity_defect(const CMatrix& a) {
    const double scale = a.norm();
    if (scale == 0.0) return 0.0;
    return (a - a.adjoint()).norm() / scale;
}

HermitianOperator::HermitianOperator(CMatrix entries) {
    if (entries.rows() != entries.cols())
        fail(ErrorCode::invalid_argument, "HermitianOperator: matrix is not square");
    const double defect = hermiticity_defect(entries);
    if (defect > kSymmetryTolerance)
        fail(ErrorCode::non_hermitian_input, "HermitianOperator: relative asymmetry " + std::to_string(defect));
    m_ = (entries + entries.adjoint()) * 0.5;
    real_ = m_.imag().isZero(0.0);
}

HermitianOperator::HermitianOperator(const RMatrix& entries) : HermitianOperator(CMatrix(entries.cast<Complex>())) {}

HermitianOperator::HermitianOperator(CMatrix entries, Unchecked) : m_(std::move(entries)) {
    real_ = m_.imag().isZero(0.0);
}

HermitianOperator HermitianOperator::zero(std::size_t dimension) {
    const auto d = static_cast<Eigen::Index>(dimension);
    return {CMatrix::Zero(d, d), Unchecked{}};
}

HermitianOperator& HermitianOperator::operator+=(const HermitianOperator& other) {
    if (other.dimension() != dimension())
        fail(ErrorCode::invalid_argument, "HermitianOperator: dimension mismatch");
    m_ += other.m_;
    real_ = real_ && other.real_;
    return *this;
}

HermitianOperator& HermitianOperator::operator*=(double factor) {
    m_ *= factor;
    return *this;
}

}  // namespace cdwork
