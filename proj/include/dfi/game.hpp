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

#ifndef DFI_GAME_HPP
#define DFI_GAME_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <dfi/player.hpp>

namespace dfi {

/**
 * An immutable parity game.
 *
 * Successors are stored in a single array (CSR layout) in the order they were
 * given; that order is significant, as solvers pick the first qualifying
 * successor when choosing strategies. Every vertex keeps the identifier it had
 * in its source file so that solutions can be written back in external terms.
 *
 * Construction does not validate. Call validate() before handing a game to a
 * solver.
 */
class ParityGame
{
public:
    ParityGame();

    /**
     * Build a game from per-vertex data. If <original_id> is empty the dense
     * index is used as identifier; if <labels> is empty no vertex is labelled.
     */
    ParityGame(std::vector<Priority> priority,
               std::vector<Player> owner,
               const std::vector<std::vector<Vertex>>& successors,
               std::vector<std::uint64_t> original_id = {},
               std::vector<std::optional<std::string>> labels = {});

    std::size_t vertex_count() const noexcept { return priority_.size(); }
    std::size_t edge_count() const noexcept { return targets_.size(); }
    bool empty() const noexcept { return priority_.empty(); }

    Priority priority(Vertex v) const { return priority_[v]; }
    Player owner(Vertex v) const { return owner_[v]; }
    std::uint64_t original_id(Vertex v) const { return original_id_[v]; }
    const std::optional<std::string>& label(Vertex v) const { return labels_[v]; }

    std::span<const Vertex> successors(Vertex v) const
    {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }

    /**
     * Predecessors of <v>. Built once on first use and shared by all copies
     * of this game; safe to call from several threads.
     * Out-of-range targets of an unvalidated game are ignored.
     */
    std::span<const Vertex> predecessors(Vertex v) const;

    std::span<const Priority> priorities() const noexcept { return priority_; }
    std::span<const Player> owners() const noexcept { return owner_; }

    /** Highest priority in the game (0 for the empty game). */
    Priority max_priority() const noexcept { return max_priority_; }

    /** Whether vertex indices are ordered by nondecreasing priority. */
    bool is_sorted_by_priority() const noexcept;

    bool has_edge(Vertex from, Vertex to) const;

    /** Structural equality; the predecessor cache is not compared. */
    friend bool operator==(const ParityGame& a, const ParityGame& b);

private:
    struct PredecessorCache;

    std::vector<Priority> priority_;
    std::vector<Player> owner_;
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> targets_;
    std::vector<std::uint64_t> original_id_;
    std::vector<std::optional<std::string>> labels_;
    Priority max_priority_ = 0;
    std::shared_ptr<PredecessorCache> preds_;
};

/**
 * Raised by validate(). Vertices are reported by their original identifier;
 * for DanglingEdge the target is the raw out-of-range value.
 */
class ValidationError : public std::runtime_error
{
public:
    enum class Kind { SinkVertex, DanglingEdge, DuplicateEdge };

    ValidationError(Kind kind, std::uint64_t vertex, std::uint64_t target = 0);

    Kind kind() const noexcept { return kind_; }
    std::uint64_t vertex() const noexcept { return vertex_; }
    std::uint64_t target() const noexcept { return target_; }

private:
    Kind kind_;
    std::uint64_t vertex_;
    std::uint64_t target_;
};

/**
 * Check left-totality, edge targets and duplicate edges.
 * Throws ValidationError on the first violation (in vertex order).
 */
void validate(const ParityGame& game);

/**
 * A bijection between the external (input) vertex order and the internal
 * priority-sorted order: forward[external] = internal, backward[internal] = external.
 */
struct SortPermutation
{
    std::vector<Vertex> forward;
    std::vector<Vertex> backward;
};

/**
 * Reorder vertices so that <new_index>[v] is the new position of v.
 * Edges are remapped; successor order within a vertex is kept.
 */
ParityGame permute(const ParityGame& game, std::span<const Vertex> new_index);

/** Stable sort of the vertices by priority. */
std::pair<ParityGame, SortPermutation> sort_by_priority(const ParityGame& game);

struct GameStats
{
    std::size_t vertices = 0;
    std::size_t edges = 0;
    Priority max_priority = 0;
    std::size_t distinct_priorities = 0;
    double average_outdegree = 0.0;
};

GameStats stats(const ParityGame& game);

/** Winning player per vertex. */
using WinnerMap = std::vector<Player>;

/**
 * Winning regions plus positional strategies. strategy[v] is set exactly for
 * the vertices whose owner wins them; region-only solvers leave it empty.
 */
struct Solution
{
    WinnerMap winner;
    std::vector<std::optional<Vertex>> strategy;

    bool operator==(const Solution&) const = default;
};

/** Translate a solution of the sorted game back to external vertex order. */
Solution unsort(const Solution& internal, const SortPermutation& perm);

} // namespace dfi

#endif
