/*
 * Copyright 2026 The DFI Authors
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

#ifndef DFI_CLI_HPP
#define DFI_CLI_HPP

#include <chrono>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <dfi/game.hpp>
#include <dfi/solver.hpp>

namespace dfi::cli {

enum ExitCode : int {
    kSolved = 0,
    kVerificationFailed = 1,
    kInputError = 2,
    kInvalidFlags = 3,
    kResourceLimit = 4,
};

enum class SolverKind { Dfi, DfiBasic, Zielonka, Bfl };

std::optional<SolverKind> parse_solver_kind(std::string_view name);
std::string_view solver_name(SolverKind kind);

/** dfi and zlk produce strategies; dfi-basic and bfl produce regions only. */
bool produces_strategy(SolverKind kind);

struct RunConfig
{
    SolverKind solver = SolverKind::Dfi;
    bool preprocess = true;
    unsigned workers = 1;
    bool in_place = false;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct RunOutcome
{
    Solution solution;
    /** Counters of the DFI run on the residual game; absent for other solvers. */
    std::optional<SolverStats> stats;
};

/**
 * Preprocess (if enabled), solve the residual and compose. Solutions of
 * region-only solvers carry strategies for preprocessed vertices only.
 * Throws SolveTimeout, RecursionDepthExceeded or BudgetExceeded on limits.
 */
RunOutcome run_solver(const ParityGame& game, const RunConfig& config);

enum class BenchOutcome { Solved, Timeout, Error };

std::string_view outcome_name(BenchOutcome outcome);

struct BenchRecord
{
    std::string game;
    std::string solver;
    bool preprocess = false;
    /** Mean over repetitions; the timeout itself for timed out rows. */
    double time_s = 0.0;
    BenchOutcome outcome = BenchOutcome::Solved;
    std::size_t n = 0;
    std::size_t edges = 0;
    Priority d = 0;
    std::optional<SolverStats> counters;
};

struct BenchOptions
{
    std::vector<SolverKind> solvers{SolverKind::Dfi, SolverKind::Zielonka};
    double timeout_seconds = 1800.0;
    unsigned repetitions = 5;
    unsigned parallel_games = 1;
    unsigned workers = 1;
};

/**
 * Benchmark every *.pg and *.gm file in <dir> (sorted by file name) with each
 * solver, with and without preprocessing. Rows are ordered by game, solver,
 * then preprocessing off before on, regardless of parallel_games.
 */
std::vector<BenchRecord> run_bench(const std::filesystem::path& dir, const BenchOptions& options);

/** game,solver,preprocess,time_s,outcome,n,edges,d,passes,additions,resets,freezes */
std::string_view bench_csv_header();
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

/** Entry point of the dfi executable; returns the process exit code. */
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace dfi::cli

#endif
