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

// Experiment commands behind the `tfd` executable. Each command writes a CSV
// (header line, comma separated, LF endings, %.15g floats) and reports the
// worst deviation from the closed-form prediction.

#pragma once

#include "tfd/tfd.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace tfd::cli {

inline constexpr double kExactGate = 1e-9;
inline constexpr double kShotSigmas = 5.0;
inline constexpr const char* kOutputDirEnv = "TFD_OUTPUT_DIR";

struct RunConfig {
    double omega = 0.5;
    std::size_t n_modes = 1;

    double beta = 1.0;
    double beta_min = 0.1;
    double beta_max = 5.0;
    std::size_t beta_steps = 50;
    std::vector<double> betas{0.01, 1.0, 10.0};

    double dt = 0.1;
    double t_max = 10.0;
    bool endpoint = false;
    InitialStateKind state = InitialStateKind::PlusThermal;

    std::optional<std::uint64_t> shots;
    std::uint64_t seed = 0;

    std::string out;
    std::string plot_script;
};

struct CommandResult {
    bool passed = true;
    double max_error = 0.0;
    std::size_t rows = 0;
};

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

/// --out if given, otherwise $TFD_OUTPUT_DIR/<default_name> (or ./<default_name>).
inline std::filesystem::path resolve_output(const std::string& out, const std::string& default_name) {
    if (!out.empty()) return out;
    const char* dir = std::getenv(kOutputDirEnv);
    return std::filesystem::path(dir && *dir ? dir : ".") / default_name;
}

namespace detail {

// Sum over physical wires of per-wire shot means in one basis. Streams are
// keyed by (row, basis, wire) so every cell is reproducible on its own.
inline double shot_sum(const StateVector& s, std::size_t n_modes, MeasurementBasis basis, std::uint64_t shots,
                       std::uint64_t seed, std::uint64_t row) {
    double total = 0.0;
    for (std::size_t w = 0; w < n_modes; ++w) {
        const std::uint64_t stream = derive_seed(seed, {row, static_cast<std::uint64_t>(basis), w});
        total += sample_shots(s, w, basis, shots, stream).mean();
    }
    return total;
}

inline Magnetization measure(const StateVector& s, const MagnetizationObservables& obs, const RunConfig& cfg,
                             std::uint64_t row) {
    if (!cfg.shots) return obs.measure(s);
    return {shot_sum(s, cfg.n_modes, MeasurementBasis::X, *cfg.shots, cfg.seed, row),
            shot_sum(s, cfg.n_modes, MeasurementBasis::Y, *cfg.shots, cfg.seed, row),
            shot_sum(s, cfg.n_modes, MeasurementBasis::Z, *cfg.shots, cfg.seed, row)};
}

// Binomial standard error of a sum of n identical per-wire estimates whose total mean is `total`.
inline double shot_sigma(double total, std::size_t n_modes, std::uint64_t shots) {
    const double m = total / static_cast<double>(n_modes);
    return std::sqrt(static_cast<double>(n_modes) * std::max(0.0, 1.0 - m * m) / static_cast<double>(shots));
}

inline bool within_gate(double measured, double theory, const RunConfig& cfg) {
    const double err = std::abs(measured - theory);
    if (!cfg.shots) return err <= kExactGate;
    return err <= kShotSigmas * shot_sigma(theory, cfg.n_modes, *cfg.shots) + 1e-12;
}

inline void validate_common(const RunConfig& cfg) {
    if (!std::isfinite(cfg.omega) || !(cfg.omega > 0.0)) throw std::invalid_argument("omega must be > 0");
    require_mode_count(cfg.n_modes);
    if (cfg.shots && *cfg.shots == 0) throw std::invalid_argument("shots must be >= 1");
}

}  // namespace detail

/// beta, mx, my, mz, mz_theory, abs_err over the beta grid.
inline CommandResult magnetization(const RunConfig& cfg, std::ostream& csv) {
    detail::validate_common(cfg);
    const std::vector<double> grid = linear_grid(cfg.beta_min, cfg.beta_max, cfg.beta_steps);
    if (grid.front() < 0.0) throw std::invalid_argument("beta must be >= 0");
    const MagnetizationObservables obs(cfg.n_modes);
    const double n = static_cast<double>(cfg.n_modes);

    CommandResult r;
    csv << "beta,mx,my,mz,mz_theory,abs_err\n";
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const ThermalParams p(grid[k], cfg.omega);
        const StateVector s = prepare_thermal_vacuum(p, cfg.n_modes);
        const Magnetization m = detail::measure(s, obs, cfg, k);
        const double theory = n * oracle::magnetization_z(p.beta(), p.omega());
        const double err = std::abs(m.mz - theory);
        r.max_error = std::max(r.max_error, err);
        r.passed = r.passed && detail::within_gate(m.mz, theory, cfg);
        csv << fmt(p.beta()) << ',' << fmt(m.mx) << ',' << fmt(m.my) << ',' << fmt(m.mz) << ',' << fmt(theory) << ','
            << fmt(err) << '\n';
        ++r.rows;
    }
    return r;
}

inline oracle::OracleExpectations theory_for(InitialStateKind kind, double beta, double omega, double t,
                                             std::size_t n_modes) {
    oracle::OracleExpectations e;
    switch (kind) {
        case InitialStateKind::ThermalVacuum:
            e = oracle::expectations_z_eigenstates(oracle::ZEigenstate::Vacuum, beta, omega);
            break;
        case InitialStateKind::ExcitedThermal:
            e = oracle::expectations_z_eigenstates(oracle::ZEigenstate::Excited, beta, omega);
            break;
        case InitialStateKind::PlusThermal: e = oracle::expectations_plus_state(beta, omega, t); break;
    }
    const double n = static_cast<double>(n_modes);
    return {n * e.mx, n * e.my, n * e.mz};
}

/// t, mx, my, mz, mx_theory, my_theory, mz_theory for one beta and initial state.
inline CommandResult evolve(const RunConfig& cfg, std::ostream& csv) {
    detail::validate_common(cfg);
    const ThermalParams p(cfg.beta, cfg.omega);
    const std::vector<double> times = time_grid(cfg.dt, cfg.t_max, cfg.endpoint);
    const StateVector initial = prepare_initial_state(cfg.state, p, cfg.n_modes);
    const TfdHamiltonian h(cfg.omega, cfg.n_modes);
    const MagnetizationObservables obs(cfg.n_modes);

    CommandResult r;
    csv << "t,mx,my,mz,mx_theory,my_theory,mz_theory\n";
    for (std::size_t k = 0; k < times.size(); ++k) {
        const double t = times[k];
        const Magnetization m = detail::measure(evolve_to(initial, h, t), obs, cfg, k);
        const auto e = theory_for(cfg.state, p.beta(), p.omega(), t, cfg.n_modes);
        r.max_error = std::max({r.max_error, std::abs(m.mx - e.mx), std::abs(m.my - e.my), std::abs(m.mz - e.mz)});
        r.passed = r.passed && detail::within_gate(m.mx, e.mx, cfg) && detail::within_gate(m.my, e.my, cfg) &&
                   detail::within_gate(m.mz, e.mz, cfg);
        csv << fmt(t) << ',' << fmt(m.mx) << ',' << fmt(m.my) << ',' << fmt(m.mz) << ',' << fmt(e.mx) << ','
            << fmt(e.my) << ',' << fmt(e.mz) << '\n';
        ++r.rows;
    }
    return r;
}

/// Long format beta, t, mx, amplitude, amplitude_theory for PlusThermal at each beta.
inline CommandResult beta_sweep(const RunConfig& cfg, std::ostream& csv) {
    detail::validate_common(cfg);
    if (cfg.betas.empty()) throw std::invalid_argument("beta list is empty");
    const std::vector<double> times = time_grid(cfg.dt, cfg.t_max, cfg.endpoint);
    const double n = static_cast<double>(cfg.n_modes);

    CommandResult r;
    csv << "beta,t,mx,amplitude,amplitude_theory\n";
    for (double beta : cfg.betas) {
        const ThermalParams p(beta, cfg.omega);
        const TimeSeries s = magnetization_series(InitialStateKind::PlusThermal, p, times, cfg.n_modes);
        const double amp = oscillation_amplitude(s);
        const double theory = n * oracle::transverse_amplitude(beta, cfg.omega);
        const double err = std::abs(amp - theory);
        r.max_error = std::max(r.max_error, err);
        r.passed = r.passed && err <= kExactGate;
        for (std::size_t k = 0; k < s.size(); ++k) {
            csv << fmt(beta) << ',' << fmt(s.times[k]) << ',' << fmt(s.mx[k]) << ',' << fmt(amp) << ',' << fmt(theory)
                << '\n';
            ++r.rows;
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyOptions {
    std::size_t max_car_modes = 3;
    bool inject_jw_fault = false;  // debug hook: drop the JW string everywhere
};

struct CheckRow {
    std::string name;
    double value;
    double tolerance;
    bool passed;
};

struct VerifyReport {
    std::vector<CheckRow> rows;

    [[nodiscard]] bool passed() const {
        for (const auto& r : rows) {
            if (!r.passed) return false;
        }
        return true;
    }
};

namespace detail {

struct ParamDraws {
    explicit ParamDraws(std::uint64_t seed) : rng(seed) {}
    double uniform(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53; }
    std::mt19937_64 rng;
};

}  // namespace detail

inline VerifyReport verify(const VerifyOptions& opt) {
    using namespace std::complex_literals;
    const JwString string = opt.inject_jw_fault ? JwString::Omitted : JwString::Standard;
    VerifyReport rep;

    for (std::size_t n = 1; n <= opt.max_car_modes; ++n) {
        const CarReport car = car_check(n, string);
        rep.rows.push_back({"CAR n_modes=" + std::to_string(n) + " (" + std::to_string(car.num_wires) + " wires)",
                            car.worst_anticommutator(), 1e-12, car.passed()});
    }

    // Without the string, cross-mode operators commute instead of anticommuting.
    const CarReport control = car_check(1, JwString::Omitted);
    rep.rows.push_back({"JW string removed: cross-mode commutator", control.cross_commutator, 1e-12,
                        control.cross_commutator < 1e-12 && !control.passed()});

    detail::ParamDraws draws(20260415);
    double dual = 0.0;
    double dressed = 0.0;
    double circuit = 0.0;
    for (int k = 0; k < 20; ++k) {
        const ThermalParams p(draws.uniform(0.0, 10.0), draws.uniform(0.1, 3.0));
        {
            const BogoliubovGenerator g = build_generator(p, 1);
            const Matrix fermi = pauli_sum_to_matrix(jordan_wigner(g.fermionic, string)).matrix();
            dual = std::max(dual, max_abs(pauli_sum_to_matrix(g.spin).matrix() - (-1i) * fermi));
        }
        {
            // Two modes: the JW image carries Z on the interior wires of each pair.
            const BogoliubovGenerator g = build_generator(p, 2);
            const Matrix fermi = pauli_sum_to_matrix(jordan_wigner(g.fermionic, string)).matrix();
            dressed = std::max(dressed, max_abs(pauli_sum_to_matrix(string_dressed_spin(p, 2)).matrix() - (-1i) * fermi));
        }
        circuit = std::max(circuit, global_phase_distance(circuit_to_matrix(bogoliubov_circuit(p, 1)), thermal_unitary(p, 1)));
    }
    rep.rows.push_back({"generator: spin vs -i * JW(fermionic), 20 draws", dual, 1e-12, dual < 1e-12});
    rep.rows.push_back({"generator, 2 modes: dressed spin vs -i * JW", dressed, 1e-12, dressed < 1e-12});

    for (std::size_t n = 2; n <= kMaxThermalModes; ++n) {
        const ThermalParams p(0.7 * static_cast<double>(n), 0.5);
        circuit = std::max(circuit, global_phase_distance(circuit_to_matrix(bogoliubov_circuit(p, n)), thermal_unitary(p, n)));
    }
    rep.rows.push_back({"circuit vs exp(G_spin) up to global phase", circuit, 1e-9, circuit < 1e-9});

    double gibbs = 0.0;
    for (double beta : linear_grid(0.0, 10.0, 11)) {
        const ThermalParams p(beta, 0.5);
        for (std::size_t n = 1; n <= kMaxThermalModes; ++n) {
            const StateVector s = prepare_thermal_vacuum(p, n);
            for (std::size_t i = 0; i < n; ++i) gibbs = std::max(gibbs, reduced_gibbs_distance(s, p, i));
        }
    }
    rep.rows.push_back({"reduced state vs Gibbs, trace distance", gibbs, 1e-12, gibbs < 1e-12});
    return rep;
}

inline void print_report(const VerifyReport& rep, std::ostream& os) {
    char line[160];
    for (const auto& r : rep.rows) {
        std::snprintf(line, sizeof line, "%-4s %-52s value=%-12.3e tol=%.0e\n", r.passed ? "PASS" : "FAIL",
                      r.name.c_str(), r.value, r.tolerance);
        os << line;
    }
}

// ---------------------------------------------------------------------------
// Output helpers
// ---------------------------------------------------------------------------

/// gnuplot script that locates the CSV relative to the script's own directory.
inline std::string plot_script_text(const std::filesystem::path& csv, const std::filesystem::path& script,
                                    const std::string& command) {
    namespace fs = std::filesystem;
    const fs::path script_dir = fs::absolute(script).parent_path();
    const std::string rel = fs::absolute(csv).lexically_relative(script_dir).generic_string();
    std::ostringstream s;
    s << "# gnuplot script; run from this file's directory\n"
      << "set datafile separator ','\n"
      << "set key autotitle columnhead\n"
      << "set grid\n";
    if (command == "magnetization") {
        s << "set xlabel 'beta'\nset ylabel 'magnetization'\n"
          << "plot '" << rel << "' using 1:2 with lines, '' using 1:3 with lines, '' using 1:4 with lines, "
          << "'' using 1:5 with lines dashtype 2\n";
    } else if (command == "evolve") {
        s << "set xlabel 't'\nset ylabel 'magnetization'\n"
          << "plot '" << rel << "' using 1:2 with lines, '' using 1:3 with lines, '' using 1:4 with lines\n";
    } else {
        s << "set xlabel 't'\nset ylabel 'mx'\n"
          << "plot for [b in system(\"tail -n +2 " << rel << " | cut -d, -f1 | uniq\")] '" << rel
          << "' using 2:($1 == b+0 ? $3 : 1/0) with lines title 'beta='.b\n";
    }
    return s.str();
}

}  // namespace tfd::cli
