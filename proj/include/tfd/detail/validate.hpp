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

#pragma once

#include <cmath>
#include <stdexcept>

namespace tfd::detail {

// beta may be +inf (zero temperature); omega must be finite and positive.
inline void require_thermal_inputs(double beta, double omega) {
    if (std::isnan(beta) || beta < 0.0) throw std::invalid_argument("tfd: beta must be >= 0");
    if (!std::isfinite(omega) || !(omega > 0.0)) throw std::invalid_argument("tfd: omega must be finite and > 0");
}

}  // namespace tfd::detail
