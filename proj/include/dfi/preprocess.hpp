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

#ifndef DFI_PREPROCESS_HPP
#define DFI_PREPROCESS_HPP

#include <functional>
#include <optional>
#include <vector>

#include <dfi/game.hpp>
#include <dfi/graph.hpp>

namespace dfi {

/**
 * The outcome of a reduction: some vertices are decided (with winner and,
 * for vertices the winner owns, a strategy); the rest forms the residual
 * game. Indices refer to the game the reduction was applied to.
 */
struct PartialSolution
{
    std::vector<bool> decided;
    WinnerMap winner;
    std::vector<std::optional<Vertex>> strategy;
    Restriction residual;
    /** residual game vertex i is vertex parent[i] of the input game. */
    std::vector<Vertex> parent;

    std::size_t decided_count() const;

    /**
     * Merge with a solution of the residual game. The residual solution may
     * be region-only (empty strategy vector).
     */
    Solution compose(const Solution& residual_solution) const;
};

struct Reduction
{
    PartialSolution partial;
    ParityGame residual;
};

/**
 * Self-loop analysis. A vertex whose owner matches the parity of its
 * priority wins by looping; a vertex whose only remaining move is its
 * self-loop is won by the player of its priority's parity. Both are decided
 * together with the corresponding attractor, repeatedly until no such vertex
 * remains. Other self-loops are losing moves for their owner and are
 * deleted from the residual game.
 */
Reduction eliminate_self_loops(const ParityGame& game);

/**
 * For each player, cycles through vertices the player owns with priorities
 * of the player's parity are won by that player. Every cyclic SCC of that
 * induced subgraph is decided, with a strategy staying inside the SCC, and
 * extended by the player's attractor.
 */
Reduction winner_controlled_cycles(const ParityGame& game);

/**
 * Run both reductions, solve the residual with <solver>, and compose the
 * result back onto <game>.
 */
Solution solve_with_preprocessing(const ParityGame& game,
                                  const std::function<Solution(const ParityGame&)>& solver);

} // namespace dfi

#endif
