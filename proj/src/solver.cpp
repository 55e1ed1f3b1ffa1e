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

#include <dfi/solver.hpp>

#include <algorithm>
#include <bit>

#include "worker_pool.hpp"

namespace dfi {

OnestepResult onestep(const ParityGame& game, Vertex v, const VertexSet& z)
{
    const Player own = game.owner(v);
    for (Vertex u : game.successors(v)) {
        if (winner_of(game, u, z) == own) return {own, u};
    }
    return {opponent(own), std::nullopt};
}

void validate(const SolverOptions& options)
{
    if (options.workers < 1) throw std::invalid_argument("workers must be at least 1");
    if (options.pass_semantics == PassSemantics::InPlace && options.workers != 1) {
        throw std::invalid_argument("in-place passes are single-threaded; use workers = 1");
    }
}

struct DfiSolver::ChunkResult
{
    std::vector<Vertex> changes;
    std::uint64_t evaluations = 0;
    std::uint64_t freezes = 0;
    std::uint64_t thaws = 0;
};

class DfiSolver::Pool : public detail::WorkerPool
{
public:
    using WorkerPool::WorkerPool;
};

namespace {

constexpr std::uint64_t ceil_log2(std::uint64_t x) noexcept
{
    return x <= 1 ? 0 : static_cast<std::uint64_t>(std::bit_width(x - 1));
}

} // namespace

std::uint64_t DfiSolver::nominal_working_state_bits(std::uint64_t n, std::uint64_t d)
{
    return n * (1 + ceil_log2(d + 2) + ceil_log2(n));
}

DfiSolver::DfiSolver(const ParityGame& game, SolverOptions options)
    : game_(game), options_(std::move(options))
{
    validate(options_);
    if (!game_.is_sorted_by_priority()) throw std::invalid_argument("DfiSolver needs a priority-sorted game");

    const auto n = static_cast<Vertex>(game_.vertex_count());
    for (Vertex v = 0; v < n;) {
        const Priority p = game_.priority(v);
        Vertex e = v;
        while (e < n && game_.priority(e) == p) ++e;
        levels_.push_back({p, v, e});
        v = e;
    }
    frozen_at_.assign(levels_.size(), 0);

    z_ = VertexSet(n);
    if (options_.mode == SolverMode::Freezing) {
        none_ = n;
        frozen_ = PackedArray(n, bits_for(std::uint64_t{game_.max_priority()} + 2));
        strategy_ = PackedArray(n, bits_for(std::uint64_t{n} + 1), none_);
    }
    if (options_.workers > 1) pool_ = std::make_unique<Pool>(options_.workers);
}

DfiSolver::~DfiSolver() = default;

std::size_t DfiSolver::working_state_bytes() const
{
    return z_.allocated_bytes() + frozen_.allocated_bytes() + strategy_.allocated_bytes();
}

void DfiSolver::mix(std::uint64_t value)
{
    // FNV-1a over 64-bit words
    stats_.trace_digest = (stats_.trace_digest ^ value) * 0x100000001b3ull;
}

void DfiSolver::check_deadline() const
{
    if (options_.deadline && std::chrono::steady_clock::now() > *options_.deadline) throw SolveTimeout();
}

template <typename Fn>
void DfiSolver::for_chunks(Vertex begin, Vertex end, std::vector<ChunkResult>& results, Fn&& fn)
{
    for (auto& r : results) r = ChunkResult{};
    if (end <= begin) {
        results.clear();
        return;
    }
    const std::size_t range = end - begin;
    if (!pool_ || range < options_.min_chunk) {
        results.resize(1);
        fn(begin, end, results[0]);
        return;
    }
    const std::size_t spread = (range + options_.workers * 4 - 1) / (options_.workers * 4);
    const std::size_t chunk = (std::max({options_.min_chunk, spread, std::size_t{64}}) + 63) / 64 * 64;
    const std::size_t first = begin / chunk;
    const std::size_t last = (end - 1) / chunk;
    results.resize(last - first + 1);
    pool_->run(results.size(), [&](std::size_t i) {
        const std::size_t k = first + i;
        const auto lo = static_cast<Vertex>(std::max<std::size_t>(begin, k * chunk));
        const auto hi = static_cast<Vertex>(std::min<std::size_t>(end, (k + 1) * chunk));
        fn(lo, hi, results[i]);
    });
}

bool DfiSolver::evaluate_level(std::size_t li)
{
    check_deadline();
    const Level level = levels_[li];
    const Player alpha = parity_of(level.priority);
    const bool freezing = options_.mode == SolverMode::Freezing;
    SolverObserver* obs = options_.observer;
    const auto prio = game_.priorities();
    const auto owner = game_.owners();

    ++stats_.passes;
    if (obs) obs->on_pass(level.priority);

    auto eligible = [&](Vertex v) {
        return !z_.contains(v) && (!freezing || frozen_.get(v) == 0);
    };
    auto step = [&](Vertex v) -> std::pair<Player, Vertex> {
        const Player own = owner[v];
        for (Vertex u : game_.successors(v)) {
            if (static_cast<Player>((prio[u] & 1u) ^ static_cast<unsigned>(z_.contains(u))) == own) {
                return {own, u};
            }
        }
        return {opponent(own), none_};
    };

    std::vector<ChunkResult> chunks;
    if (options_.pass_semantics == PassSemantics::InPlace) {
        chunks.resize(1);
        auto& r = chunks[0];
        for (Vertex v = level.begin; v < level.end; ++v) {
            if (!eligible(v)) continue;
            ++r.evaluations;
            if (obs) obs->on_evaluate(v, level.priority);
            const auto [w, s] = step(v);
            if (freezing) strategy_.set(v, s);
            if (w != alpha) {
                z_.insert(v);
                r.changes.push_back(v);
            }
        }
    } else {
        for_chunks(level.begin, level.end, chunks, [&](Vertex lo, Vertex hi, ChunkResult& r) {
            for (Vertex v = lo; v < hi; ++v) {
                if (!eligible(v)) continue;
                ++r.evaluations;
                if (obs) obs->on_evaluate(v, level.priority);
                const auto [w, s] = step(v);
                if (freezing) strategy_.set(v, s);
                if (w != alpha) r.changes.push_back(v);
            }
        });
    }

    bool changed = false;
    for (const auto& r : chunks) {
        stats_.evaluations += r.evaluations;
        for (Vertex v : r.changes) {
            if (options_.pass_semantics == PassSemantics::Snapshot) z_.insert(v);
            ++stats_.distraction_additions;
            if (obs) obs->on_distraction(v, level.priority);
            mix(v);
            changed = true;
        }
    }
    if (changed) mix(0x8000000000000000ull | level.priority);
    return changed;
}

void DfiSolver::freeze_or_reset(std::size_t li)
{
    const Level level = levels_[li];
    const Player opp = opponent(parity_of(level.priority));
    const std::uint64_t mark = std::uint64_t{level.priority} + 1;
    const bool freezing = options_.mode == SolverMode::Freezing;
    SolverObserver* obs = options_.observer;
    const auto prio = game_.priorities();

    ++stats_.resets;
    std::vector<ChunkResult> chunks;
    for_chunks(0, level.begin, chunks, [&](Vertex lo, Vertex hi, ChunkResult& r) {
        for (Vertex v = lo; v < hi; ++v) {
            if (!freezing) {
                if (z_.contains(v)) {
                    z_.erase(v);
                    if (obs) obs->on_reset(v, level.priority);
                }
                continue;
            }
            if (frozen_.get(v) != 0) continue;
            const auto w = static_cast<Player>((prio[v] & 1u) ^ static_cast<unsigned>(z_.contains(v)));
            if (w == opp) {
                frozen_.set(v, mark);
                ++r.freezes;
                if (obs) obs->on_freeze(v, prio[v], level.priority, w);
            } else if (z_.contains(v)) {
                z_.erase(v);
                if (obs) obs->on_reset(v, level.priority);
            }
        }
    });
    std::uint64_t freezes = 0;
    for (const auto& r : chunks) freezes += r.freezes;
    frozen_at_[li] += freezes;
    stats_.freezes += freezes;
    mix(freezes);
}

void DfiSolver::thaw(std::size_t li)
{
    if (frozen_at_[li] == 0) return;
    const Level level = levels_[li];
    const std::uint64_t mark = std::uint64_t{level.priority} + 1;
    SolverObserver* obs = options_.observer;
    std::vector<ChunkResult> chunks;
    for_chunks(0, level.begin, chunks, [&](Vertex lo, Vertex hi, ChunkResult& r) {
        for (Vertex v = lo; v < hi; ++v) {
            if (frozen_.get(v) == mark) {
                frozen_.set(v, 0);
                ++r.thaws;
                if (obs) obs->on_thaw(v, level.priority);
            }
        }
    });
    for (const auto& r : chunks) stats_.thaws += r.thaws;
    frozen_at_[li] = 0;
}

Solution DfiSolver::extract() const
{
    const std::size_t n = game_.vertex_count();
    Solution sol;
    sol.winner.resize(n);
    sol.strategy.assign(n, std::nullopt);
    for (Vertex v = 0; v < n; ++v) {
        sol.winner[v] = winner_of(game_, v, z_);
        if (options_.mode == SolverMode::Freezing && game_.owner(v) == sol.winner[v]) {
            const auto s = strategy_.get(v);
            if (s != none_) sol.strategy[v] = static_cast<Vertex>(s);
        }
    }
    return sol;
}

SolveResult DfiSolver::run()
{
    if (done_) throw std::logic_error("DfiSolver::run called twice");
    done_ = true;
    const auto start = std::chrono::steady_clock::now();
    const bool freezing = options_.mode == SolverMode::Freezing;

    std::size_t li = 0;
    while (li < levels_.size()) {
        if (evaluate_level(li)) {
            freeze_or_reset(li);
            li = 0;
        } else {
            if (freezing) thaw(li);
            ++li;
        }
    }

    SolveResult result;
    result.solution = extract();
    stats_.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    stats_.working_state_bytes = working_state_bytes();
    result.stats = stats_;
    return result;
}

SolveResult solve(const ParityGame& game, const SolverOptions& options)
{
    validate(options);
    if (game.is_sorted_by_priority()) {
        DfiSolver solver(game, options);
        return solver.run();
    }
    const auto [sorted, perm] = sort_by_priority(game);
    DfiSolver solver(sorted, options);
    auto result = solver.run();
    result.solution = unsort(result.solution, perm);
    return result;
}

WinnerMap solve_basic(const ParityGame& game)
{
    SolverOptions options;
    options.mode = SolverMode::Basic;
    return solve(game, options).solution.winner;
}

} // namespace dfi
