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

// Real-time evolution under the doubled Hamiltonian and magnetization readout.

#pragma once

#include "tfd/fermion.hpp"
#include "tfd/pauli.hpp"
#include "tfd/qstate.hpp"
#include "tfd/thermal.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

namespace tfd {

/// H_T = -omega * sum_i (n_i - ñ_i), JW-mapped. Equal to (omega/2) sum_i (Z_i - Z̃_i).
///
/// The sign is chosen so that exp(-i H_T t) precesses the physical spin with
/// <Y(t)> = +cos(theta) sin(omega t).
class TfdHamiltonian {
public:
    TfdHamiltonian(double omega, std::size_t n_modes)
        : omega_(omega), n_modes_(n_modes), pauli_(build(omega, n_modes)), matrix_(pauli_sum_to_matrix(pauli_)),
          spectrum_(matrix_) {}

    [[nodiscard]] double omega() const { return omega_; }
    [[nodiscard]] std::size_t n_modes() const { return n_modes_; }
    [[nodiscard]] std::size_t num_wires() const { return 2 * n_modes_; }
    [[nodiscard]] const PauliSum& pauli() const { return pauli_; }
    [[nodiscard]] const DenseOperator& matrix() const { return matrix_; }
    [[nodiscard]] const HermitianSpectrum& spectrum() const { return spectrum_; }

private:
    static PauliSum build(double omega, std::size_t n_modes) {
        if (!std::isfinite(omega) || !(omega > 0.0)) throw std::invalid_argument("tfd: omega must be finite and > 0");
        require_mode_count(n_modes);
        const std::size_t total = 2 * n_modes;
        FermiSum h(total);
        for (std::size_t i = 0; i < n_modes; ++i) {
            const std::size_t t = tilde_wire(i, n_modes);
            h.add(-omega, {{i, true}, {i, false}});
            h.add(omega, {{t, true}, {t, false}});
        }
        return jordan_wigner(h);
    }

    double omega_;
    std::size_t n_modes_;
    PauliSum pauli_;
    DenseOperator matrix_;
    HermitianSpectrum spectrum_;
};

inline TfdHamiltonian build_tfd_hamiltonian(double omega, std::size_t n_modes) { return {omega, n_modes}; }

enum class InitialStateKind { ThermalVacuum, ExcitedThermal, PlusThermal };

inline InitialStateKind parse_initial_state(std::string_view s) {
    if (s == "vacuum" || s == "thermal-vacuum") return InitialStateKind::ThermalVacuum;
    if (s == "excited" || s == "excited-thermal") return InitialStateKind::ExcitedThermal;
    if (s == "plus" || s == "plus-thermal") return InitialStateKind::PlusThermal;
    throw std::invalid_argument("tfd: unknown initial state '" + std::string(s) + "'");
}

inline const char* initial_state_name(InitialStateKind k) {
    switch (k) {
        case InitialStateKind::ThermalVacuum: return "vacuum";
        case InitialStateKind::ExcitedThermal: return "excited";
        case InitialStateKind::PlusThermal: return "plus";
    }
    return "?";
}

/// Pre-state then U(beta): |0..0>, X on every wire, or H on the physical wires.
inline StateVector prepare_initial_state(InitialStateKind kind, const ThermalParams& p, std::size_t n_modes) {
    require_mode_count(n_modes);
    StateVector pre(2 * n_modes);
    switch (kind) {
        case InitialStateKind::ThermalVacuum: break;
        case InitialStateKind::ExcitedThermal:
            for (std::size_t w = 0; w < 2 * n_modes; ++w) pre = apply_gate(std::move(pre), Gate::x(w));
            break;
        case InitialStateKind::PlusThermal:
            for (std::size_t w = 0; w < n_modes; ++w) pre = apply_gate(std::move(pre), Gate::h(w));
            break;
        default: throw std::invalid_argument("tfd: invalid initial state kind");
    }
    return apply_unitary(pre, thermal_unitary(p, n_modes));
}

/// exp(-i H_T t)|state>, exact.
inline StateVector evolve_to(const StateVector& state, const TfdHamiltonian& h, double t) {
    if (state.num_wires() != h.num_wires()) throw std::invalid_argument("tfd: state/Hamiltonian dimension mismatch");
    return apply_unitary(state, h.spectrum().propagator(t));
}

struct Magnetization {
    double mx = 0.0;
    double my = 0.0;
    double mz = 0.0;
};

/// Sum_i X_i, Y_i, Z_i over the physical wires 0..n-1 of a 2n-wire register.
struct MagnetizationObservables {
    DenseOperator x, y, z;

    explicit MagnetizationObservables(std::size_t n_modes)
        : x(sum_of(n_modes, Pauli::X)), y(sum_of(n_modes, Pauli::Y)), z(sum_of(n_modes, Pauli::Z)) {}

    [[nodiscard]] Magnetization measure(const StateVector& s) const {
        return {expectation(s, x), expectation(s, y), expectation(s, z)};
    }

private:
    static DenseOperator sum_of(std::size_t n_modes, Pauli letter) {
        PauliSum s(2 * n_modes);
        for (std::size_t i = 0; i < n_modes; ++i) s.add(1.0, PauliWord::single(i, letter));
        return pauli_sum_to_matrix(s);
    }
};

inline Magnetization measure_magnetization(const StateVector& s, std::size_t n_modes) {
    return MagnetizationObservables(n_modes).measure(s);
}

struct TimeSeries {
    double omega = 0.0;
    std::size_t n_modes = 1;
    std::vector<double> times;
    std::vector<double> mx, my, mz;

    [[nodiscard]] std::size_t size() const { return times.size(); }
};

inline void require_time_grid(const std::vector<double>& times) {
    if (times.empty()) throw std::invalid_argument("tfd: time grid is empty");
    for (std::size_t k = 0; k < times.size(); ++k) {
        if (!std::isfinite(times[k])) throw std::invalid_argument("tfd: time grid has a non-finite entry");
        if (k > 0 && !(times[k] > times[k - 1])) throw std::invalid_argument("tfd: time grid must be ascending");
    }
}

inline TimeSeries magnetization_series(InitialStateKind kind, const ThermalParams& p, const std::vector<double>& times,
                                       std::size_t n_modes = 1) {
    require_time_grid(times);
    const StateVector initial = prepare_initial_state(kind, p, n_modes);
    const TfdHamiltonian h(p.omega(), n_modes);
    const MagnetizationObservables obs(n_modes);

    TimeSeries out;
    out.omega = p.omega();
    out.n_modes = n_modes;
    out.times = times;
    for (double t : times) {
        const Magnetization m = obs.measure(evolve_to(initial, h, t));
        out.mx.push_back(m.mx);
        out.my.push_back(m.my);
        out.mz.push_back(m.mz);
    }
    return out;
}

/// Max of sqrt(mx^2 + my^2) over the samples; the series must cover a full Larmor period.
inline double oscillation_amplitude(const TimeSeries& s) {
    if (s.times.empty()) throw std::invalid_argument("tfd: empty series");
    const double span = (s.times.back() - s.times.front()) * s.omega;
    if (span < 2.0 * std::numbers::pi) throw std::invalid_argument("tfd: series shorter than one Larmor period");
    double amp = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k) amp = std::max(amp, std::hypot(s.mx[k], s.my[k]));
    return amp;
}

// ---------------------------------------------------------------------------
// Grids
// ---------------------------------------------------------------------------

/// k * dt for k = 0, 1, ... while below t_max (arange semantics), optionally with t_max appended.
inline std::vector<double> time_grid(double dt, double t_max, bool include_endpoint = false) {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("tfd: dt must be > 0");
    if (!(t_max > 0.0) || !std::isfinite(t_max)) throw std::invalid_argument("tfd: t_max must be > 0");
    const auto count = static_cast<std::size_t>(std::ceil(t_max / dt));
    std::vector<double> t;
    t.reserve(count + 1);
    for (std::size_t k = 0; k < count; ++k) t.push_back(static_cast<double>(k) * dt);
    if (include_endpoint && (t.empty() || t.back() < t_max)) t.push_back(t_max);
    return t;
}

/// `steps` evenly spaced points from lo to hi inclusive (linspace semantics).
inline std::vector<double> linear_grid(double lo, double hi, std::size_t steps) {
    if (steps == 0) throw std::invalid_argument("tfd: grid needs at least one point");
    if (!std::isfinite(lo) || !std::isfinite(hi) || hi < lo) throw std::invalid_argument("tfd: invalid grid bounds");
    std::vector<double> g;
    g.reserve(steps);
    if (steps == 1) return {lo};
    const double step = (hi - lo) / static_cast<double>(steps - 1);
    for (std::size_t k = 0; k + 1 < steps; ++k) g.push_back(lo + static_cast<double>(k) * step);
    g.push_back(hi);
    return g;
}

}  // namespace tfd
