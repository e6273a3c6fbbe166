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

#include "commands.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <map>
#include <sstream>

using namespace tfd;
using namespace tfd::cli;

namespace {

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    [[nodiscard]] std::size_t col(const std::string& name) const {
        for (std::size_t k = 0; k < header.size(); ++k) {
            if (header[k] == name) return k;
        }
        throw std::out_of_range("no column " + name);
    }
    [[nodiscard]] double at(std::size_t row, const std::string& name) const { return rows.at(row).at(col(name)); }
};

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
}

Csv parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Csv c;
    std::getline(in, line);
    c.header = split(line);
    while (std::getline(in, line)) {
        std::vector<double> row;
        for (const auto& cell : split(line)) row.push_back(std::stod(cell));
        EXPECT_EQ(row.size(), c.header.size());
        c.rows.push_back(std::move(row));
    }
    return c;
}

template <typename Fn>
std::pair<CommandResult, Csv> run(Fn fn, const RunConfig& cfg, std::string* raw = nullptr) {
    std::ostringstream out;
    const CommandResult r = fn(cfg, out);
    if (raw) *raw = out.str();
    return {r, parse(out.str())};
}

}  // namespace

// --- magnetization ------------------------------------------------------------

TEST(CliMagnetization, DefaultGridIsExact) {
    const auto [r, csv] = run(magnetization, RunConfig{});
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.rows, 50u);
    EXPECT_LT(r.max_error, 1e-10);
    EXPECT_EQ(csv.header, (std::vector<std::string>{"beta", "mx", "my", "mz", "mz_theory", "abs_err"}));
    ASSERT_EQ(csv.rows.size(), 50u);
    EXPECT_EQ(csv.at(0, "beta"), 0.1);
    EXPECT_EQ(csv.at(49, "beta"), 5.0);
    for (std::size_t k = 0; k < 50; ++k) {
        EXPECT_LE(std::abs(csv.at(k, "mx")), 1e-12);
        EXPECT_LE(std::abs(csv.at(k, "my")), 1e-12);
        EXPECT_NEAR(csv.at(k, "mz"), std::tanh(0.25 * csv.at(k, "beta")), 1e-10);
    }
}

TEST(CliMagnetization, SinglePoint) {
    RunConfig cfg;
    cfg.beta_min = cfg.beta_max = 5.0;
    cfg.beta_steps = 1;
    const auto [r, csv] = run(magnetization, cfg);
    ASSERT_EQ(csv.rows.size(), 1u);
    EXPECT_NEAR(csv.at(0, "mz"), std::tanh(1.25), 1e-12);
}

TEST(CliMagnetization, ShotModeIsWithinGateAndReproducible) {
    RunConfig cfg;
    cfg.beta_min = cfg.beta_max = 1.0;
    cfg.beta_steps = 1;
    cfg.shots = 10000;
    cfg.seed = 7;
    std::string first, second;
    const auto [r1, csv] = run(magnetization, cfg, &first);
    run(magnetization, cfg, &second);
    EXPECT_TRUE(r1.passed);
    const double m = std::tanh(0.25);
    EXPECT_LE(std::abs(csv.at(0, "mz") - m), 5.0 * std::sqrt((1 - m * m) / 1e4));
    EXPECT_EQ(first, second);

    cfg.seed = 8;
    std::string other;
    run(magnetization, cfg, &other);
    EXPECT_NE(first, other);
}

TEST(CliMagnetization, RejectsBadConfig) {
    std::ostringstream sink;
    RunConfig cfg;
    cfg.omega = 0.0;
    EXPECT_THROW(magnetization(cfg, sink), std::invalid_argument);
    cfg = RunConfig{};
    cfg.beta_min = -1.0;
    EXPECT_THROW(magnetization(cfg, sink), std::invalid_argument);
    cfg = RunConfig{};
    cfg.shots = 0;
    EXPECT_THROW(magnetization(cfg, sink), std::invalid_argument);
    cfg = RunConfig{};
    cfg.n_modes = 5;
    EXPECT_THROW(magnetization(cfg, sink), std::invalid_argument);
}

// --- evolve -------------------------------------------------------------------

TEST(CliEvolve, DefaultSeries) {
    const auto [r, csv] = run(evolve, RunConfig{});
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(csv.rows.size(), 100u);
    EXPECT_LE(r.max_error, 1e-9);
    EXPECT_EQ(csv.header, (std::vector<std::string>{"t", "mx", "my", "mz", "mx_theory", "my_theory", "mz_theory"}));
    for (std::size_t k = 0; k < csv.rows.size(); ++k) EXPECT_NEAR(csv.at(k, "mz"), csv.at(0, "mz"), 1e-12);
}

TEST(CliEvolve, VacuumHasNoTransverseSignal) {
    RunConfig cfg;
    cfg.state = InitialStateKind::ThermalVacuum;
    const auto [r, csv] = run(evolve, cfg);
    EXPECT_TRUE(r.passed);
    for (std::size_t k = 0; k < csv.rows.size(); ++k) {
        EXPECT_LE(std::abs(csv.at(k, "mx")) + std::abs(csv.at(k, "my")), 1e-12);
    }
}

TEST(CliEvolve, FullPeriodWithEndpointReturnsToStart) {
    RunConfig cfg;
    cfg.t_max = 4 * std::numbers::pi;  // one period at omega = 0.5
    cfg.endpoint = true;
    const auto [r, csv] = run(evolve, cfg);
    EXPECT_TRUE(r.passed);
    EXPECT_NEAR(csv.at(csv.rows.size() - 1, "t"), cfg.t_max, 1e-12);
    EXPECT_NEAR(csv.at(csv.rows.size() - 1, "mx"), csv.at(0, "mx"), 1e-9);
    EXPECT_NEAR(csv.at(csv.rows.size() - 1, "my"), csv.at(0, "my"), 1e-9);
}

TEST(CliEvolve, ShotModeStaysWithinGate) {
    RunConfig cfg;
    cfg.shots = 4000;
    cfg.seed = 3;
    cfg.t_max = 2.0;
    const auto [r, csv] = run(evolve, cfg);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(csv.rows.size(), 20u);
}

// --- beta-sweep ---------------------------------------------------------------

TEST(CliBetaSweep, AmplitudesFollowTheClosedForm) {
    RunConfig cfg;
    cfg.t_max = 20.0;
    const auto [r, csv] = run(beta_sweep, cfg);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(csv.header, (std::vector<std::string>{"beta", "t", "mx", "amplitude", "amplitude_theory"}));
    ASSERT_EQ(csv.rows.size(), 3 * 200u);

    std::map<double, double> amp;
    for (std::size_t k = 0; k < csv.rows.size(); ++k) amp[csv.at(k, "beta")] = csv.at(k, "amplitude");
    ASSERT_EQ(amp.size(), 3u);
    EXPECT_LT(amp[0.01], amp[1.0]);
    EXPECT_LT(amp[1.0], amp[10.0]);
    EXPECT_NEAR(amp[0.01], 1.0 / std::numbers::sqrt2, 1e-3);
    EXPECT_NEAR(amp[10.0], std::cos(std::atan(std::exp(-2.5))), 1e-9);
    EXPECT_NEAR(amp[10.0], 1.0, 1e-2);
}

TEST(CliBetaSweep, ShortWindowIsAnError) {
    std::ostringstream sink;
    EXPECT_THROW(beta_sweep(RunConfig{}, sink), std::invalid_argument);  // [0, 10) is under one period
    RunConfig cfg;
    cfg.betas.clear();
    EXPECT_THROW(beta_sweep(cfg, sink), std::invalid_argument);
}

// --- verify -------------------------------------------------------------------

TEST(CliVerify, AllChecksPass) {
    const VerifyReport rep = verify(VerifyOptions{});
    EXPECT_TRUE(rep.passed());
    for (const auto& row : rep.rows) EXPECT_TRUE(row.passed) << row.name << " value=" << row.value;
    std::ostringstream text;
    print_report(rep, text);
    EXPECT_NE(text.str().find("CAR n_modes=3 (6 wires)"), std::string::npos);
}

TEST(CliVerify, InjectedStringFaultIsCaught) {
    VerifyOptions opt;
    opt.inject_jw_fault = true;
    const VerifyReport rep = verify(opt);
    EXPECT_FALSE(rep.passed());
    std::size_t car_failures = 0;
    for (const auto& row : rep.rows) {
        if (row.name.rfind("CAR", 0) == 0) car_failures += row.passed ? 0 : 1;
    }
    EXPECT_EQ(car_failures, 3u);
}

// --- output plumbing ----------------------------------------------------------

TEST(CliOutput, ResolveUsesExplicitPathThenEnvironment) {
    EXPECT_EQ(resolve_output("x/y.csv", "d.csv"), std::filesystem::path("x/y.csv"));
    ::setenv(kOutputDirEnv, "/tmp/tfd-out", 1);
    EXPECT_EQ(resolve_output("", "d.csv"), std::filesystem::path("/tmp/tfd-out/d.csv"));
    ::unsetenv(kOutputDirEnv);
    EXPECT_EQ(resolve_output("", "d.csv"), std::filesystem::path("./d.csv"));
}

TEST(CliOutput, PlotScriptReferencesCsvRelativeToScript) {
    const std::string s = plot_script_text("/data/run/out.csv", "/data/plots/mag.gp", "magnetization");
    EXPECT_NE(s.find("'../run/out.csv'"), std::string::npos);
    EXPECT_NE(s.find("set datafile separator ','"), std::string::npos);
    EXPECT_NE(plot_script_text("/a/e.csv", "/a/e.gp", "evolve").find("'e.csv'"), std::string::npos);
}
