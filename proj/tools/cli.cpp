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

#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <cstdlib>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include <dfi/fixpoint.hpp>
#include <dfi/formats.hpp>
#include <dfi/generator.hpp>
#include <dfi/preprocess.hpp>
#include <dfi/verifier.hpp>
#include <dfi/zielonka.hpp>

namespace dfi::cli {

namespace {

constexpr std::pair<SolverKind, std::string_view> kSolverNames[] = {
    {SolverKind::Dfi, "dfi"},
    {SolverKind::DfiBasic, "dfi-basic"},
    {SolverKind::Zielonka, "zlk"},
    {SolverKind::Bfl, "bfl"},
};

/** Solve one (residual) game without preprocessing. */
Solution solve_direct(const ParityGame& game, const RunConfig& config, std::optional<SolverStats>& stats)
{
    const std::size_t n = game.vertex_count();
    switch (config.solver) {
    case SolverKind::Dfi:
    case SolverKind::DfiBasic: {
        SolverOptions options;
        options.mode = config.solver == SolverKind::Dfi ? SolverMode::Freezing : SolverMode::Basic;
        options.pass_semantics = config.in_place ? PassSemantics::InPlace : PassSemantics::Snapshot;
        options.workers = config.workers;
        options.deadline = config.deadline;
        auto result = solve(game, options);
        stats = result.stats;
        if (config.solver == SolverKind::DfiBasic) result.solution.strategy.clear();
        return std::move(result.solution);
    }
    case SolverKind::Zielonka: {
        ZielonkaOptions options;
        options.deadline = config.deadline;
        return solve_zielonka(game, options);
    }
    case SolverKind::Bfl: {
        BflOptions options;
        options.deadline = config.deadline;
        const VertexSet even = bfl_win0(game, options);
        Solution sol;
        sol.winner.resize(n);
        for (Vertex v = 0; v < n; ++v) sol.winner[v] = even.contains(v) ? Player::Even : Player::Odd;
        return sol;
    }
    }
    throw std::logic_error("unknown solver");
}

/** Region-only solutions get an all-empty strategy vector so they fit the Solution shape. */
Solution normalized(Solution sol)
{
    if (sol.strategy.size() != sol.winner.size()) sol.strategy.assign(sol.winner.size(), std::nullopt);
    return sol;
}

struct InputError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

ParityGame load_game(const std::string& path)
{
    try {
        if (path == "-") return parse_pgsolver(std::cin);
        std::ifstream in(path);
        if (!in) throw InputError(path + ": cannot open file");
        return parse_pgsolver(in);
    } catch (const ParseError& e) {
        throw InputError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.what());
    } catch (const ValidationError& e) {
        throw InputError(path + ": " + e.what());
    }
}

Solution load_solution(const std::string& path, const ParityGame& game)
{
    try {
        std::ifstream in(path);
        if (!in) throw InputError(path + ": cannot open file");
        return parse_solution(in, game);
    } catch (const ParseError& e) {
        throw InputError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.what());
    }
}

/** Write through <out> or, if <path> is set, to that file. */
template <typename Fn>
void emit(const std::string& path, std::ostream& out, Fn&& fn)
{
    if (path.empty()) {
        fn(out);
        return;
    }
    std::ofstream file(path);
    if (!file) throw InputError(path + ": cannot open file for writing");
    fn(file);
    if (!file) throw InputError(path + ": write failed");
}

void print_stats(std::ostream& err, const SolverStats& s)
{
    err << "passes: " << s.passes << '\n'
        << "evaluations: " << s.evaluations << '\n'
        << "distraction_additions: " << s.distraction_additions << '\n'
        << "resets: " << s.resets << '\n'
        << "freezes: " << s.freezes << '\n'
        << "thaws: " << s.thaws << '\n'
        << "wall_seconds: " << s.wall_seconds << '\n'
        << "working_state_bytes: " << s.working_state_bytes << '\n';
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

std::vector<BenchRecord> bench_game(const std::filesystem::path& path, const BenchOptions& options)
{
    std::vector<BenchRecord> rows;
    const std::string name = path.filename().string();
    std::optional<ParityGame> game;
    try {
        game = load_game(path.string());
    } catch (const InputError&) {
    }
    for (SolverKind kind : options.solvers) {
        for (bool pre : {false, true}) {
            BenchRecord row;
            row.game = name;
            row.solver = std::string(solver_name(kind));
            row.preprocess = pre;
            if (!game) {
                row.outcome = BenchOutcome::Error;
                rows.push_back(std::move(row));
                continue;
            }
            row.n = game->vertex_count();
            row.edges = game->edge_count();
            row.d = game->max_priority();

            RunConfig config;
            config.solver = kind;
            config.preprocess = pre;
            config.workers = options.workers;
            double total = 0.0;
            try {
                for (unsigned rep = 0; rep < options.repetitions; ++rep) {
                    const auto start = std::chrono::steady_clock::now();
                    config.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                                  std::chrono::duration<double>(options.timeout_seconds));
                    auto outcome = run_solver(*game, config);
                    const auto stop = std::chrono::steady_clock::now();
                    if (stop > *config.deadline) throw SolveTimeout();
                    total += std::chrono::duration<double>(stop - start).count();
                    row.counters = outcome.stats;
                }
                row.time_s = total / options.repetitions;
            } catch (const SolveTimeout&) {
                row.outcome = BenchOutcome::Timeout;
                row.time_s = options.timeout_seconds;
                row.counters.reset();
            } catch (const std::exception&) {
                row.outcome = BenchOutcome::Error;
                row.time_s = 0.0;
                row.counters.reset();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

int cmd_solve(const std::string& input, const std::string& solver, bool no_preprocess, bool verify_flag,
              unsigned workers, bool in_place, bool print_counters, std::optional<double> timeout,
              const std::string& output, std::ostream& out, std::ostream& err)
{
    RunConfig config;
    config.solver = *parse_solver_kind(solver);
    config.preprocess = !no_preprocess;
    config.workers = workers;
    config.in_place = in_place;
    if (in_place && workers != 1) {
        err << "error: --in-place requires --workers 1\n";
        return kInvalidFlags;
    }
    if (in_place && config.solver != SolverKind::Dfi && config.solver != SolverKind::DfiBasic) {
        err << "error: --in-place applies to the dfi solvers only\n";
        return kInvalidFlags;
    }
    if (verify_flag && !produces_strategy(config.solver)) {
        err << "error: --verify needs strategies; " << solver << " computes regions only\n";
        return kInvalidFlags;
    }
    if (timeout) {
        if (*timeout <= 0) {
            err << "error: --timeout must be positive\n";
            return kInvalidFlags;
        }
        config.deadline = std::chrono::steady_clock::now() +
                          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(*timeout));
    }

    const ParityGame game = load_game(input);
    RunOutcome result;
    try {
        result = run_solver(game, config);
    } catch (const SolveTimeout& e) {
        err << "error: " << e.what() << '\n';
        return kResourceLimit;
    } catch (const RecursionDepthExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kResourceLimit;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kResourceLimit;
    }

    if (print_counters && result.stats) print_stats(err, *result.stats);

    int code = kSolved;
    if (verify_flag) {
        const auto report = verify(game, result.solution);
        for (const auto& violation : report.violations) err << describe(game, violation) << '\n';
        if (!report.ok()) code = kVerificationFailed;
    }
    emit(output, out, [&](std::ostream& os) {
        if (produces_strategy(config.solver)) {
            write_solution(os, game, result.solution);
        } else {
            write_regions(os, game, result.solution.winner);
        }
    });
    return code;
}

std::optional<unsigned> parse_worker_count(const char* text)
{
    char* end = nullptr;
    errno = 0;
    const unsigned long value = std::strtoul(text, &end, 10);
    if (errno != 0 || *end != '\0' || end == text || value < 1 || value > 1024) return std::nullopt;
    return static_cast<unsigned>(value);
}

} // namespace

std::optional<SolverKind> parse_solver_kind(std::string_view name)
{
    for (const auto& [kind, text] : kSolverNames)
        if (text == name) return kind;
    return std::nullopt;
}

std::string_view solver_name(SolverKind kind)
{
    for (const auto& [k, text] : kSolverNames)
        if (k == kind) return text;
    return "?";
}

bool produces_strategy(SolverKind kind)
{
    return kind == SolverKind::Dfi || kind == SolverKind::Zielonka;
}

RunOutcome run_solver(const ParityGame& game, const RunConfig& config)
{
    RunOutcome outcome;
    if (!config.preprocess) {
        outcome.solution = normalized(solve_direct(game, config, outcome.stats));
        return outcome;
    }
    outcome.solution = solve_with_preprocessing(game, [&](const ParityGame& residual) {
        if (residual.empty()) {
            if (config.solver == SolverKind::Dfi || config.solver == SolverKind::DfiBasic) outcome.stats = SolverStats{};
            return Solution{};
        }
        return solve_direct(residual, config, outcome.stats);
    });
    outcome.solution = normalized(std::move(outcome.solution));
    return outcome;
}

std::string_view outcome_name(BenchOutcome outcome)
{
    switch (outcome) {
    case BenchOutcome::Solved:
        return "solved";
    case BenchOutcome::Timeout:
        return "timeout";
    case BenchOutcome::Error:
        return "error";
    }
    return "?";
}

std::vector<BenchRecord> run_bench(const std::filesystem::path& dir, const BenchOptions& options)
{
    std::vector<std::filesystem::path> games;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        const auto ext = entry.path().extension();
        if (entry.is_regular_file() && (ext == ".pg" || ext == ".gm")) games.push_back(entry.path());
    }
    std::sort(games.begin(), games.end());

    std::vector<std::vector<BenchRecord>> per_game(games.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < games.size();) per_game[i] = bench_game(games[i], options);
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(options.parallel_games, games.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::vector<BenchRecord> rows;
    for (auto& g : per_game)
        for (auto& r : g) rows.push_back(std::move(r));
    return rows;
}

std::string_view bench_csv_header()
{
    return "game,solver,preprocess,time_s,outcome,n,edges,d,passes,additions,resets,freezes";
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records)
{
    out << bench_csv_header() << '\n';
    char time[64];
    for (const auto& r : records) {
        std::snprintf(time, sizeof time, "%.6f", r.time_s);
        out << csv_field(r.game) << ',' << r.solver << ',' << (r.preprocess ? 1 : 0) << ',' << time << ','
            << outcome_name(r.outcome) << ',' << r.n << ',' << r.edges << ',' << r.d << ',';
        if (r.counters) {
            out << r.counters->passes << ',' << r.counters->distraction_additions << ',' << r.counters->resets << ','
                << r.counters->freezes;
        } else {
            out << ",,,";
        }
        out << '\n';
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    unsigned default_workers = 1;
    if (const char* env = std::getenv("DFI_WORKERS"); env && *env) {
        const auto parsed = parse_worker_count(env);
        if (!parsed) {
            err << "error: DFI_WORKERS must be an integer in [1, 1024]\n";
            return kInvalidFlags;
        }
        default_workers = *parsed;
    }

    CLI::App app{"Parity game solver based on distraction fixpoint iteration", "dfi"};
    app.require_subcommand(1);

    std::vector<std::string> solver_names;
    for (const auto& [kind, text] : kSolverNames) solver_names.emplace_back(text);

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Solve a game in PGSolver format");
    std::string solve_input;
    std::string solve_solver = "dfi";
    std::string solve_output;
    bool no_preprocess = false;
    bool verify_flag = false;
    bool in_place = false;
    bool print_counters = false;
    unsigned workers = default_workers;
    std::optional<double> timeout;
    solve_cmd->add_option("game", solve_input, "Game file, or - for standard input")->required();
    solve_cmd->add_option("--solver", solve_solver, "dfi, dfi-basic, zlk or bfl")
        ->check(CLI::IsMember(solver_names));
    solve_cmd->add_flag("--no-preprocess", no_preprocess, "Skip self-loop and cycle preprocessing");
    solve_cmd->add_flag("--verify", verify_flag, "Verify the solution; exit 1 on violations");
    solve_cmd->add_option("--workers", workers, "Worker threads for dfi (default: $DFI_WORKERS or 1)")
        ->check(CLI::Range(1u, 1024u));
    solve_cmd->add_flag("--in-place", in_place, "In-place pass semantics (single worker)");
    solve_cmd->add_flag("--stats", print_counters, "Print solver counters to standard error");
    solve_cmd->add_option("--timeout", timeout, "Give up after this many seconds (exit 4)");
    solve_cmd->add_option("-o,--output", solve_output, "Write the solution to this file");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check a solution against a game");
    std::string verify_game;
    std::string verify_solution;
    verify_cmd->add_option("game", verify_game, "Game file")->required();
    verify_cmd->add_option("solution", verify_solution, "Solution file")->required();

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded random game");
    GenParams params;
    std::string gen_output;
    gen_cmd->add_option("--n", params.n, "Vertex count")->required();
    gen_cmd->add_option("--d", params.max_priority, "Maximum priority");
    gen_cmd->add_option("--seed", params.seed, "Seed of the SplitMix64 stream");
    gen_cmd->add_option("--min-degree", params.min_outdegree, "Minimum outdegree");
    gen_cmd->add_option("--max-degree", params.max_outdegree, "Maximum outdegree");
    gen_cmd->add_option("--self-loops", params.self_loop_probability, "Self-loop probability");
    gen_cmd->add_option("-o,--output", gen_output, "Write the game to this file");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Time solvers on every game in a directory (CSV)");
    std::string bench_dir;
    std::vector<std::string> bench_solvers{"dfi", "zlk"};
    BenchOptions bench;
    bench.workers = default_workers;
    bench_cmd->add_option("dir", bench_dir, "Directory of .pg/.gm games")->required()->check(CLI::ExistingDirectory);
    bench_cmd->add_option("--solvers", bench_solvers, "Solvers to run")
        ->delimiter(',')
        ->check(CLI::IsMember(solver_names));
    bench_cmd->add_option("--timeout", bench.timeout_seconds, "Timeout per run in seconds")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--repetitions", bench.repetitions, "Runs per row; the mean is reported")
        ->check(CLI::Range(1u, 1000000u));
    bench_cmd->add_option("--parallel-games", bench.parallel_games, "Games solved concurrently")
        ->check(CLI::Range(1u, 1024u));
    bench_cmd->add_option("--workers", bench.workers, "Worker threads for dfi (default: $DFI_WORKERS or 1)")
        ->check(CLI::Range(1u, 1024u));

    // stats
    auto* stats_cmd = app.add_subcommand("stats", "Print size statistics of a game");
    std::string stats_input;
    stats_cmd->add_option("game", stats_input, "Game file, or - for standard input")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSolved : kInvalidFlags;
    }

    try {
        if (*solve_cmd) {
            return cmd_solve(solve_input, solve_solver, no_preprocess, verify_flag, workers, in_place,
                             print_counters, timeout, solve_output, out, err);
        }
        if (*verify_cmd) {
            const ParityGame game = load_game(verify_game);
            const Solution sol = load_solution(verify_solution, game);
            const auto report = verify(game, sol);
            for (const auto& violation : report.violations) out << describe(game, violation) << '\n';
            return report.ok() ? kSolved : kVerificationFailed;
        }
        if (*gen_cmd) {
            ParityGame game;
            try {
                game = random_game(params);
            } catch (const InvalidParams& e) {
                err << "error: " << e.what() << '\n';
                return kInvalidFlags;
            }
            emit(gen_output, out, [&](std::ostream& os) { write_pgsolver(os, game); });
            return kSolved;
        }
        if (*bench_cmd) {
            bench.solvers.clear();
            for (const auto& name : bench_solvers) bench.solvers.push_back(*parse_solver_kind(name));
            write_bench_csv(out, run_bench(bench_dir, bench));
            return kSolved;
        }
        if (*stats_cmd) {
            const ParityGame game = load_game(stats_input);
            const GameStats s = stats(game);
            char avg[64];
            std::snprintf(avg, sizeof avg, "%.3f", s.average_outdegree);
            out << "vertices: " << s.vertices << '\n'
                << "edges: " << s.edges << '\n'
                << "max priority: " << s.max_priority << '\n'
                << "distinct priorities: " << s.distinct_priorities << '\n'
                << "average outdegree: " << avg << '\n';
            return kSolved;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidFlags;
    }
    return kInvalidFlags;
}

} // namespace dfi::cli
