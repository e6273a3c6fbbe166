// Copyright 2026 The tfd-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Closed-form single-mode thermofield expectations. Nothing here touches the
// simulator; these are the reference values it is checked against.

#pragma once

#include "tfd/detail/validate.hpp"

#include <cmath>
#include <stdexcept>

namespace tfd::oracle {

struct OracleExpectations {
    double mx = 0.0;
    double my = 0.0;
    double mz = 0.0;
};

/// tanh(beta omega / 2).
inline double magnetization_z(double beta, double omega) {
    detail::require_thermal_inputs(beta, omega);
    return std::tanh(0.5 * beta * omega);
}

/// cos(theta) = e^{beta omega/2} / sqrt(e^{beta omega} + 1), evaluated as
/// 1 / sqrt(1 + e^{-beta omega}) so that beta -> inf stays finite.
inline double transverse_amplitude(double beta, double omega) {
    detail::require_thermal_inputs(beta, omega);
    return 1.0 / std::sqrt(1.0 + std::exp(-beta * omega));
}

/// |+0̃> prepared then evolved to time t.
inline OracleExpectations expectations_plus_state(double beta, double omega, double t) {
    const double amp = transverse_amplitude(beta, omega);
    return {amp * std::cos(omega * t), amp * std::sin(omega * t), 0.5 * (magnetization_z(beta, omega) - 1.0)};
}

enum class ZEigenstate { Vacuum, Excited };

/// |00̃> or |11̃> under the thermal rotation: no transverse signal, mz = +/- tanh.
inline OracleExpectations expectations_z_eigenstates(ZEigenstate kind, double beta, double omega) {
    const double m = magnetization_z(beta, omega);
    switch (kind) {
        case ZEigenstate::Vacuum: return {0.0, 0.0, m};
        case ZEigenstate::Excited: return {0.0, 0.0, -m};
    }
    throw std::invalid_argument("tfd: invalid eigenstate kind");
}

}  // namespace tfd::oracle
