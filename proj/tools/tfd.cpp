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

// tfd: thermofield experiments from the command line.
//
//   tfd magnetization [--beta-min --beta-max --beta-steps] [--shots N --seed S]
//   tfd evolve        [--beta --state plus|vacuum|excited --dt --t-max --endpoint]
//   tfd beta-sweep    [--betas 0.01,1,10 --dt --t-max]
//   tfd verify        [--n-modes 3] [--inject-jw-fault]
//
// Exit status: 0 all checks pass, 1 a check failed, 2 usage or I/O error.

#include "commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using tfd::cli::CommandResult;
using tfd::cli::RunConfig;

using CommandFn = CommandResult (*)(const RunConfig&, std::ostream&);

int run_csv_command(const std::string& name, CommandFn fn, const RunConfig& cfg) {
    namespace fs = std::filesystem;
    const auto start = std::chrono::steady_clock::now();
    std::ostringstream csv;
    CommandResult r;
    try {
        r = fn(cfg, csv);
    } catch (const std::exception& e) {
        std::cerr << name << ": " << e.what() << '\n';
        return 2;
    }

    const fs::path out = tfd::cli::resolve_output(cfg.out, name + ".csv");
    {
        std::ofstream f(out, std::ios::binary | std::ios::trunc);
        if (!f || !(f << csv.str()) || !f.flush()) {
            std::cerr << name << ": cannot write " << out.string() << '\n';
            return 2;
        }
    }
    if (!cfg.plot_script.empty()) {
        std::ofstream f(cfg.plot_script, std::ios::binary | std::ios::trunc);
        if (!f || !(f << tfd::cli::plot_script_text(out, cfg.plot_script, name))) {
            std::cerr << name << ": cannot write " << cfg.plot_script << '\n';
            return 2;
        }
    }

    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s: %s rows=%zu max_abs_err=%.3e mode=%s runtime_ms=%.1f out=%s\n", name.c_str(),
                r.passed ? "PASS" : "FAIL", r.rows, r.max_error, cfg.shots ? "shots" : "exact", ms,
                out.string().c_str());
    return r.passed ? 0 : 1;
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--omega", cfg.omega, "mode energy omega")->capture_default_str();
    cmd->add_option("--n-modes", cfg.n_modes, "number of physical modes (1-4)")->capture_default_str();
    cmd->add_option("--out", cfg.out, "CSV output path (default $TFD_OUTPUT_DIR/<command>.csv)");
    cmd->add_option("--plot-script", cfg.plot_script, "also write a gnuplot script for the CSV");
}

void add_shots(CLI::App* cmd, RunConfig& cfg, std::uint64_t& shots) {
    cmd->add_option("--shots", shots, "sample this many shots per observable instead of exact expectations");
    cmd->add_option("--seed", cfg.seed, "seed for shot sampling")->capture_default_str();
}

void add_time_grid(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--dt", cfg.dt, "time step")->capture_default_str();
    cmd->add_option("--t-max", cfg.t_max, "end of the time grid (exclusive unless --endpoint)")->capture_default_str();
    cmd->add_flag("--endpoint", cfg.endpoint, "append t-max itself to the time grid");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thermofield-dynamics statevector experiments"};
    app.require_subcommand(1);

    RunConfig mag_cfg, evo_cfg, sweep_cfg;
    sweep_cfg.t_max = 20.0;
    std::uint64_t mag_shots = 0, evo_shots = 0;
    std::string state_name = "plus";

    auto* mag = app.add_subcommand("magnetization", "<Mx>, <My>, <Mz> of the thermal vacuum over a beta grid");
    add_common(mag, mag_cfg);
    mag->add_option("--beta-min", mag_cfg.beta_min)->capture_default_str();
    mag->add_option("--beta-max", mag_cfg.beta_max)->capture_default_str();
    mag->add_option("--beta-steps", mag_cfg.beta_steps)->capture_default_str();
    add_shots(mag, mag_cfg, mag_shots);

    auto* evo = app.add_subcommand("evolve", "magnetization time series of a prepared thermofield state");
    add_common(evo, evo_cfg);
    evo->add_option("--beta", evo_cfg.beta, "inverse temperature")->capture_default_str();
    evo->add_option("--state", state_name, "initial state: plus, vacuum or excited")
        ->check(CLI::IsMember({"plus", "vacuum", "excited"}))
        ->capture_default_str();
    add_time_grid(evo, evo_cfg);
    add_shots(evo, evo_cfg, evo_shots);

    auto* sweep = app.add_subcommand("beta-sweep", "<Mx(t)> and precession amplitude for several beta values");
    add_common(sweep, sweep_cfg);
    sweep->add_option("--betas", sweep_cfg.betas, "comma separated inverse temperatures")
        ->delimiter(',')
        ->capture_default_str();
    add_time_grid(sweep, sweep_cfg);

    tfd::cli::VerifyOptions verify_opt;
    auto* ver = app.add_subcommand("verify", "run the algebraic and state-preparation invariant checks");
    ver->add_option("--n-modes", verify_opt.max_car_modes, "largest mode count for the CAR suite (1-3)")
        ->check(CLI::Range(1, 3))
        ->capture_default_str();
    ver->add_flag("--inject-jw-fault", verify_opt.inject_jw_fault, "debug: drop the Jordan-Wigner string");

    CLI11_PARSE(app, argc, argv);

    if (mag->parsed()) {
        if (mag->count("--shots")) mag_cfg.shots = mag_shots;
        return run_csv_command("magnetization", &tfd::cli::magnetization, mag_cfg);
    }
    if (evo->parsed()) {
        if (evo->count("--shots")) evo_cfg.shots = evo_shots;
        evo_cfg.state = tfd::parse_initial_state(state_name);
        return run_csv_command("evolve", &tfd::cli::evolve, evo_cfg);
    }
    if (sweep->parsed()) return run_csv_command("beta-sweep", &tfd::cli::beta_sweep, sweep_cfg);

    const auto start = std::chrono::steady_clock::now();
    const auto report = tfd::cli::verify(verify_opt);
    tfd::cli::print_report(report, std::cout);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::printf("verify: %s checks=%zu runtime_ms=%.1f\n", report.passed() ? "PASS" : "FAIL", report.rows.size(), ms);
    return report.passed() ? 0 : 1;
}
