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

#ifndef DFI_GRAPH_HPP
#define DFI_GRAPH_HPP

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <dfi/game.hpp>

namespace dfi {

/**
 * A subgame given by a mask of live vertices. Edges of the subgame are the
 * edges between live vertices; a restriction need not be left-total.
 */
struct Restriction
{
    std::vector<bool> alive;

    static Restriction full(std::size_t n) { return Restriction{std::vector<bool>(n, true)}; }
    static Restriction of(std::size_t n, std::span<const Vertex> members);

    bool contains(Vertex v) const { return alive[v]; }
    std::size_t count() const;
};

struct Attractor
{
    /** Membership per vertex of the whole game. */
    std::vector<bool> members;
    /** Vertices in insertion order, starting with the target set. */
    std::vector<Vertex> order;
    /** Attractor strategy; set only for vertices of the attracting player. */
    std::vector<std::optional<Vertex>> strategy;
};

/**
 * Attr_<player>(<target>) inside <restriction>: everything from which
 * <player> can force a visit to <target>. Backward search with per-vertex
 * counters of live successors, O(edges).
 *
 * Each attracted vertex of <player> gets the first successor (in stored
 * order) inside the attractor; so does each <player>-vertex of the target
 * with a successor inside the final attractor.
 */
Attractor attract(const ParityGame& game, const Restriction& restriction, Player player,
                  std::span<const Vertex> target);

/**
 * Strongly connected components of the subgame, listed in reverse
 * topological order (a component appears before any component that can
 * reach it).
 */
std::vector<std::vector<Vertex>> sccs(const ParityGame& game, const Restriction& restriction);

/**
 * SCCs of an arbitrary graph over [0, n) given by a successor callback.
 * Vertices with alive[v] == false are skipped, as are edges into them.
 */
std::vector<std::vector<Vertex>> sccs(std::size_t n, const std::vector<bool>& alive,
                                      const std::function<std::span<const Vertex>(Vertex)>& successors);

/** A component is cyclic iff it has more than one vertex or a self-loop. */
bool is_cyclic(std::span<const Vertex> component, const std::function<bool(Vertex, Vertex)>& has_edge);

/**
 * The subgame induced by <restriction> as a standalone game. parent[i] is
 * the index in <game> of vertex i. Original ids and labels are kept; edge
 * order within each vertex is kept. <drop_self_loops> removes self-loop
 * edges.
 */
struct Subgame
{
    ParityGame game;
    std::vector<Vertex> parent;
};

Subgame induced_subgame(const ParityGame& game, const Restriction& restriction, bool drop_self_loops = false);

} // namespace dfi

#endif
