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

#ifndef DFI_SOLVER_HPP
#define DFI_SOLVER_HPP

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include <dfi/game.hpp>
#include <dfi/packed_array.hpp>
#include <dfi/vertex_set.hpp>

namespace dfi {

/**
 * Estimated winner of <v> under distraction flags <z>: the player of v's
 * priority parity, or its opponent when v is flagged as a distraction.
 */
inline Player winner_of(const ParityGame& game, Vertex v, const VertexSet& z)
{
    return static_cast<Player>((game.priority(v) & 1u) ^ static_cast<unsigned>(z.contains(v)));
}

struct OnestepResult
{
    Player winner;
    std::optional<Vertex> successor;

    bool operator==(const OnestepResult&) const = default;
};

/**
 * Who wins <v> in one step under <z>: its owner if some successor is
 * currently won by the owner (the first such successor, in stored order, is
 * returned), otherwise the opponent with no successor.
 */
OnestepResult onestep(const ParityGame& game, Vertex v, const VertexSet& z);

enum class SolverMode {
    Basic,    ///< regions only, resets every lower vertex on change
    Freezing, ///< freezes lower vertices won by the opponent and records strategies
};

enum class PassSemantics {
    Snapshot, ///< evaluate a whole level against the flags as they were at pass start
    InPlace,  ///< flag each new distraction immediately; single-threaded
};

/**
 * Hooks into a running solve, for instrumentation and tests. Vertices are
 * indices of the priority-sorted game the solver runs on. With more than one
 * worker, on_evaluate may be called concurrently.
 */
class SolverObserver
{
public:
    virtual ~SolverObserver() = default;
    virtual void on_pass(Priority /*level*/) {}
    virtual void on_evaluate(Vertex /*v*/, Priority /*level*/) {}
    virtual void on_distraction(Vertex /*v*/, Priority /*level*/) {}
    /** <winner> is the estimated winner of v at the instant it is frozen. */
    virtual void on_freeze(Vertex /*v*/, Priority /*vertex_priority*/, Priority /*level*/, Player /*winner*/) {}
    virtual void on_thaw(Vertex /*v*/, Priority /*level*/) {}
    /** v lost its distraction flag because the fixpoint at <level> changed. */
    virtual void on_reset(Vertex /*v*/, Priority /*level*/) {}
};

struct SolverOptions
{
    SolverMode mode = SolverMode::Freezing;
    PassSemantics pass_semantics = PassSemantics::Snapshot;
    unsigned workers = 1;
    bool collect_counters = true;
    /** Smallest vertex range handed to one worker (rounded up to 64). */
    std::size_t min_chunk = 4096;
    /** Checked once per pass; SolveTimeout is thrown when passed. */
    std::optional<std::chrono::steady_clock::time_point> deadline;
    SolverObserver* observer = nullptr;
};

/** Throws std::invalid_argument on bad options. */
void validate(const SolverOptions& options);

struct SolverStats
{
    std::uint64_t passes = 0;
    std::uint64_t evaluations = 0;
    std::uint64_t distraction_additions = 0;
    std::uint64_t resets = 0;
    std::uint64_t freezes = 0;
    std::uint64_t thaws = 0;
    double wall_seconds = 0.0;
    /** Hash of the sequence of flag and freeze updates. */
    std::uint64_t trace_digest = 0;
    std::size_t working_state_bytes = 0;
};

struct SolveResult
{
    Solution solution;
    SolverStats stats;
};

class SolveTimeout : public std::runtime_error
{
public:
    SolveTimeout() : std::runtime_error("solver deadline exceeded") {}
};

/**
 * Distraction fixpoint iteration on a priority-sorted game.
 *
 * The solver walks the priority levels from low to high. At each level it
 * looks for vertices whose one-step outcome contradicts their priority's
 * parity and flags them as distractions; after such a change it restarts
 * from the lowest level, first resetting every lower vertex. In freezing
 * mode, lower vertices already won by the opponent of the current parity
 * are frozen instead of reset: they keep their flag and strategy until the
 * level that froze them reaches its fixpoint.
 *
 * Working state is one flag bit per vertex, a packed freeze level of
 * bits_for(d+2) bits and a packed strategy of bits_for(n+1) bits (freezing
 * mode only).
 */
class DfiSolver
{
public:
    /** <game> must be sorted by priority and outlive the solver. */
    explicit DfiSolver(const ParityGame& game, SolverOptions options = {});
    ~DfiSolver();
    DfiSolver(const DfiSolver&) = delete;
    DfiSolver& operator=(const DfiSolver&) = delete;

    /** Run to completion. May be called once. */
    SolveResult run();

    /** Bytes held by the flag, freeze and strategy arrays. */
    std::size_t working_state_bytes() const;

    /** n * (1 + ceil(log2(d+2)) + ceil(log2 n)) */
    static std::uint64_t nominal_working_state_bits(std::uint64_t n, std::uint64_t d);

private:
    struct Level
    {
        Priority priority;
        Vertex begin;
        Vertex end;
    };
    struct ChunkResult;
    class Pool;

    template <typename Fn>
    void for_chunks(Vertex begin, Vertex end, std::vector<ChunkResult>& results, Fn&& fn);

    bool evaluate_level(std::size_t li);
    void freeze_or_reset(std::size_t li);
    void thaw(std::size_t li);
    Solution extract() const;
    void check_deadline() const;
    void mix(std::uint64_t value);

    const ParityGame& game_;
    SolverOptions options_;
    std::vector<Level> levels_;
    std::vector<std::uint64_t> frozen_at_;

    VertexSet z_;
    PackedArray frozen_;
    PackedArray strategy_;
    Vertex none_ = 0;

    SolverStats stats_;
    std::unique_ptr<Pool> pool_;
    bool done_ = false;
};

/**
 * Solve any validated game; sorts internally when needed and reports the
 * solution in the game's own vertex order. In basic mode only regions are
 * computed and no strategies are returned.
 */
SolveResult solve(const ParityGame& game, const SolverOptions& options = {});

/** Regions via the basic algorithm. */
WinnerMap solve_basic(const ParityGame& game);

} // namespace dfi

#endif
