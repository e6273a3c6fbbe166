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

// Thermal Bogoliubov transformation: angle, generator, vacuum and circuit.

#pragma once

#include "tfd/detail/validate.hpp"
#include "tfd/fermion.hpp"
#include "tfd/pauli.hpp"
#include "tfd/qstate.hpp"

#include <cmath>
#include <vector>

namespace tfd {

inline constexpr std::size_t kMaxThermalModes = 4;

/// tan(theta) = exp(-beta * omega / 2); theta lies in [0, pi/4].
inline double thermal_angle(double beta, double omega) {
    detail::require_thermal_inputs(beta, omega);
    return std::atan(std::exp(-0.5 * beta * omega));
}

/// Excited-level population exp(-beta omega) / (1 + exp(-beta omega)).
inline double fermi_dirac_occupation(double beta, double omega) {
    detail::require_thermal_inputs(beta, omega);
    const double w = std::exp(-beta * omega);
    return w / (1.0 + w);
}

/// Inverse temperature and mode energy; theta is always derived from them.
class ThermalParams {
public:
    ThermalParams(double beta, double omega) : beta_(beta), omega_(omega), theta_(thermal_angle(beta, omega)) {}

    [[nodiscard]] double beta() const { return beta_; }
    [[nodiscard]] double omega() const { return omega_; }
    [[nodiscard]] double theta() const { return theta_; }

private:
    double beta_;
    double omega_;
    double theta_;
};

inline void require_mode_count(std::size_t n_modes, std::size_t max_modes = kMaxThermalModes) {
    if (n_modes < 1 || n_modes > max_modes) {
        throw std::invalid_argument("tfd: n_modes must be between 1 and " + std::to_string(max_modes));
    }
}

inline std::size_t tilde_wire(std::size_t mode, std::size_t n_modes) { return mode + n_modes; }

struct BogoliubovGenerator {
    FermiSum fermionic;  // theta * sum_i (a_i^dag ã_i^dag - a_i ã_i)
    PauliSum spin;       // sum_i -i theta/2 (X_i X̃_i - Y_i Ỹ_i)
};

/// Builds both forms independently; the spin form is not derived from the fermionic one.
inline BogoliubovGenerator build_generator(const ThermalParams& p, std::size_t n_modes) {
    using namespace std::complex_literals;
    require_mode_count(n_modes, kMaxWires / 2);
    const std::size_t total = 2 * n_modes;
    const double theta = p.theta();

    FermiSum fermionic(total);
    PauliSum spin(total);
    for (std::size_t i = 0; i < n_modes; ++i) {
        const std::size_t t = tilde_wire(i, n_modes);
        fermionic.add(theta, {{i, true}, {t, true}});
        fermionic.add(-theta, {{i, false}, {t, false}});
        spin.add(-0.5i * theta, PauliWord{{i, Pauli::X}, {t, Pauli::X}});
        spin.add(0.5i * theta, PauliWord{{i, Pauli::Y}, {t, Pauli::Y}});
    }
    return {std::move(fermionic), collect_terms(spin)};
}

/// Spin generator with Z on the wires strictly between each pair (i, i + n).
///
/// This is exactly -i * jw(fermionic) for any n. For n = 1 there are no
/// interior wires and it coincides with the string-free spin form.
inline PauliSum string_dressed_spin(const ThermalParams& p, std::size_t n_modes) {
    const PauliSum bare = build_generator(p, n_modes).spin;
    PauliSum out(bare.num_wires());
    for (const auto& t : bare.terms()) {
        PauliWord w = t.word;
        const std::size_t lo = w.letters().begin()->first, hi = w.letters().rbegin()->first;
        for (std::size_t k = lo + 1; k < hi; ++k) w.set(k, Pauli::Z);
        out.add(t.coefficient, std::move(w));
    }
    return out;
}

/// U(beta) = exp(G_spin) on 2n wires.
inline DenseOperator thermal_unitary(const ThermalParams& p, std::size_t n_modes) {
    return unitary_from_generator(pauli_sum_to_matrix(build_generator(p, n_modes).spin));
}

/// U(beta)|0...0>; for one mode, cos(theta)|00> - i sin(theta)|11>.
inline StateVector prepare_thermal_vacuum(const ThermalParams& p, std::size_t n_modes) {
    require_mode_count(n_modes);
    return apply_unitary(StateVector(2 * n_modes), thermal_unitary(p, n_modes));
}

/// Gate-level U(beta), 10 gates per mode pair.
///
/// Conjugating by CNOT(i -> ĩ) turns (X X̃ - Y Ỹ)/2 into X_i |0><0|_ĩ, so the
/// pair unitary is CNOT . [RX_i(2 theta) controlled on ĩ = 0] . CNOT. The
/// zero-control is X-wrapped, and the controlled RX is H . CRZ . H with
/// CRZ(phi) = RZ(phi/2) CNOT RZ(-phi/2) CNOT. No global phase is introduced.
inline Circuit bogoliubov_circuit(const ThermalParams& p, std::size_t n_modes) {
    require_mode_count(n_modes);
    const double theta = p.theta();
    Circuit c(2 * n_modes);
    for (std::size_t i = 0; i < n_modes; ++i) {
        const std::size_t t = tilde_wire(i, n_modes);
        c.add(Gate::cnot(i, t));
        c.add(Gate::x(t));
        c.add(Gate::h(i));
        c.add(Gate::rz(i, theta));
        c.add(Gate::cnot(t, i));
        c.add(Gate::rz(i, -theta));
        c.add(Gate::cnot(t, i));
        c.add(Gate::h(i));
        c.add(Gate::x(t));
        c.add(Gate::cnot(i, t));
    }
    return c;
}

/// diag(1 - f, f) with f the Fermi-Dirac occupation.
inline DenseOperator gibbs_state(const ThermalParams& p) {
    const double f = fermi_dirac_occupation(p.beta(), p.omega());
    Matrix rho = Matrix::Zero(2, 2);
    rho(0, 0) = 1.0 - f;
    rho(1, 1) = f;
    return DenseOperator(std::move(rho));
}

/// Trace distance between the reduced state of physical wire `mode` and the Gibbs state.
inline double reduced_gibbs_distance(const StateVector& state, const ThermalParams& p, std::size_t mode) {
    if (state.num_wires() % 2 != 0) throw std::invalid_argument("tfd: thermofield state needs an even wire count");
    const std::size_t n_modes = state.num_wires() / 2;
    if (mode >= n_modes) throw std::out_of_range("tfd: mode index out of range");
    return trace_distance(partial_trace(state, {mode}), gibbs_state(p));
}

}  // namespace tfd
