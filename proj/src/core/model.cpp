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

#include "cdwork/model.hpp"

#include <cmath>

#include "cdwork/counterdiabatic.hpp"
#include "cdwork/errors.hpp"

namespace cdwork {

HermitianOperator ParametricModel::parameter_derivative(const RVector& lambda, std::size_t mu) const {
    const auto index = static_cast<Eigen::Index>(mu);
    const double h = 1e-5 * (1.0 + std::abs(lambda(index)));
    RVector up = lambda, down = lambda;
    up(index) += h;
    down(index) -= h;
    return HermitianOperator(CMatrix((hamiltonian(up).matrix() - hamiltonian(down).matrix()) / (2.0 * h)));
}

DrivenSystem::DrivenSystem(std::shared_ptr<const ParametricModel> model, Protocol protocol)
    : model_(std::move(model)), protocol_(std::move(protocol)) {
    if (!model_) fail(ErrorCode::invalid_argument, "DrivenSystem: null model");
    if (protocol_.dimension() != model_->parameter_count())
        fail(ErrorCode::invalid_argument, "DrivenSystem: protocol dimension does not match the model");
}

HermitianOperator DrivenSystem::h0(double t) const { return model_->hamiltonian(protocol_.value(t)); }

HermitianOperator DrivenSystem::h0_rate(double t) const {
    const RVector lambda = protocol_.value(t);
    const RVector rate = protocol_.derivative(t);
    HermitianOperator sum = HermitianOperator::zero(model_->dimension());
    for (std::size_t mu = 0; mu < model_->parameter_count(); ++mu) {
        const double r = rate(static_cast<Eigen::Index>(mu));
        if (r != 0.0) sum += model_->parameter_derivative(lambda, mu) * r;
    }
    return sum;
}

HermitianOperator DrivenSystem::h1(double t) const {
    const RVector lambda = protocol_.value(t);
    const RVector rate = protocol_.derivative(t);
    if (auto analytic = model_->analytic_auxiliary(lambda, rate)) return *std::move(analytic);
    if (rate.isZero(0.0)) return HermitianOperator::zero(model_->dimension());
    return cd_auxiliary(spectrum(model_->hamiltonian(lambda)), h0_rate(t));
}

HermitianOperator DrivenSystem::h_cd(double t) const { return h0(t) + h1(t); }

}  // namespace cdwork
