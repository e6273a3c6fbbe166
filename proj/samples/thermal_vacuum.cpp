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

// Prepares a single-mode thermal vacuum with the gate-level circuit, prints
// its amplitudes and the reduced physical state, then follows <Mx(t)> of the
// |+0̃> state for one Larmor period.

#include "tfd/tfd.hpp"

#include <cstdio>
#include <numbers>

int main() {
    const tfd::ThermalParams p(1.0, 0.5);
    const tfd::Circuit circuit = tfd::bogoliubov_circuit(p, 1);
    const tfd::StateVector vacuum = tfd::apply_circuit(tfd::StateVector(2), circuit);

    std::printf("theta = %.15g, %zu gates\n", p.theta(), circuit.size());
    for (std::size_t i = 0; i < vacuum.dim(); ++i) {
        std::printf("  amp[%zu] = %+.12f %+.12fi\n", i, vacuum[i].real(), vacuum[i].imag());
    }
    const tfd::DenseOperator rho = tfd::partial_trace(vacuum, {0});
    std::printf("rho_phys = diag(%.12f, %.12f), Gibbs distance %.2e\n", rho(0, 0).real(), rho(1, 1).real(),
                tfd::reduced_gibbs_distance(vacuum, p, 0));

    const double period = 2.0 * std::numbers::pi / p.omega();
    const auto series = tfd::magnetization_series(tfd::InitialStateKind::PlusThermal, p,
                                                  tfd::linear_grid(0.0, period, 9));
    for (std::size_t k = 0; k < series.size(); ++k) {
        std::printf("  t=%6.3f  mx=%+.6f  my=%+.6f  mz=%+.6f\n", series.times[k], series.mx[k], series.my[k],
                    series.mz[k]);
    }
    std::printf("amplitude %.12f (closed form %.12f)\n", tfd::oscillation_amplitude(series),
                tfd::oracle::transverse_amplitude(p.beta(), p.omega()));
    return 0;
}
