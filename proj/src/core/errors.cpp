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

#include "cdwork/errors.hpp"

namespace cdwork {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::ok: return "ok";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::non_hermitian_input: return "NonHermitianInput";
    case ErrorCode::degeneracy: return "DegeneracyError";
    case ErrorCode::step_not_converged: return "StepNotConverged";
    case ErrorCode::truncation: return "TruncationError";
    case ErrorCode::quadrature_not_converged: return "QuadratureNotConverged";
    case ErrorCode::supercritical_drive: return "SupercriticalDrive";
    case ErrorCode::invalid_detuning: return "InvalidDetuning";
    case ErrorCode::not_a_state: return "NotAState";
    case ErrorCode::config: return "ConfigError";
    case ErrorCode::io: return "IOError";
    }
    return "unknown";
}

}  // namespace cdwork
