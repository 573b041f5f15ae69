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

#include <memory>
#include <optional>

#include "cdwork/linalg.hpp"
#include "cdwork/protocol.hpp"
#include "cdwork/spectrum.hpp"

namespace cdwork {

/// A Hermitian family H0(lambda) over an N-dimensional parameter space.
class ParametricModel {
public:
    virtual ~ParametricModel() = default;

    [[nodiscard]] virtual std::size_t dimension() const = 0;
    [[nodiscard]] virtual std::size_t parameter_count() const = 0;
    [[nodiscard]] virtual HermitianOperator hamiltonian(const RVector& lambda) const = 0;

    /// dH0/dlambda^mu. The default is a centered difference with step 1e-5 (1 + |lambda^mu|)
    /// for models that do not provide an analytic form.
    [[nodiscard]] virtual HermitianOperator parameter_derivative(const RVector& lambda, std::size_t mu) const;

    /// Counterdiabatic term in closed form, if the model knows one.
    [[nodiscard]] virtual std::optional<HermitianOperator> analytic_auxiliary(const RVector& /*lambda*/,
                                                                             const RVector& /*rate*/) const {
        return std::nullopt;
    }

    /// Levels whose eigenpairs are unaffected by basis truncation (a truncated
    /// Fock basis trusts only its lower part). The top `dimension() - 2 *
    /// trusted_levels()` rows are never consulted as measurement targets.
    [[nodiscard]] virtual std::size_t trusted_levels() const { return dimension(); }
};

/// Forwards every member of another model except analytic_auxiliary(), so
/// H1 is built from the spectrum of H0 by cd_auxiliary().
class SpectralAuxiliaryModel final : public ParametricModel {
public:
    explicit SpectralAuxiliaryModel(std::shared_ptr<const ParametricModel> inner) : inner_(std::move(inner)) {}

    [[nodiscard]] std::size_t dimension() const override { return inner_->dimension(); }
    [[nodiscard]] std::size_t parameter_count() const override { return inner_->parameter_count(); }
    [[nodiscard]] HermitianOperator hamiltonian(const RVector& lambda) const override {
        return inner_->hamiltonian(lambda);
    }
    [[nodiscard]] HermitianOperator parameter_derivative(const RVector& lambda, std::size_t mu) const override {
        return inner_->parameter_derivative(lambda, mu);
    }
    [[nodiscard]] std::size_t trusted_levels() const override { return inner_->trusted_levels(); }

private:
    std::shared_ptr<const ParametricModel> inner_;
};

/// A parametric model driven along a protocol: H0(t) = H0(lambda(t)).
class DrivenSystem {
public:
    DrivenSystem(std::shared_ptr<const ParametricModel> model, Protocol protocol);

    [[nodiscard]] const ParametricModel& model() const noexcept { return *model_; }
    [[nodiscard]] std::shared_ptr<const ParametricModel> model_ptr() const noexcept { return model_; }
    [[nodiscard]] const Protocol& protocol() const noexcept { return protocol_; }
    [[nodiscard]] double duration() const noexcept { return protocol_.duration(); }
    [[nodiscard]] std::size_t dimension() const { return model_->dimension(); }

    [[nodiscard]] HermitianOperator h0(double t) const;
    /// dH0/dt = sum_mu dH0/dlambda^mu * dlambda^mu/dt.
    [[nodiscard]] HermitianOperator h0_rate(double t) const;
    /// Analytic auxiliary term when available, otherwise cd_auxiliary().
    [[nodiscard]] HermitianOperator h1(double t) const;
    [[nodiscard]] HermitianOperator h_cd(double t) const;

    [[nodiscard]] DrivenSystem with_protocol(Protocol protocol) const { return {model_, std::move(protocol)}; }

private:
    std::shared_ptr<const ParametricModel> model_;
    Protocol protocol_;
};

}  // namespace cdwork
