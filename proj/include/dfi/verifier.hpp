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

#ifndef DFI_VERIFIER_HPP
#define DFI_VERIFIER_HPP

#include <string>
#include <vector>

#include <dfi/game.hpp>

namespace dfi {

struct Violation
{
    enum class Kind {
        EscapeEdge,           ///< the loser can leave the region: (vertex, target)
        MissingStrategy,      ///< a winner's vertex has no strategy: (vertex)
        StrategyLeavesRegion, ///< strategy leaves the region or is not an edge: (vertex, target)
        LosingCycleWitness,   ///< a strategy-consistent cycle won by the loser: (cycle, max priority)
    };

    Kind kind;
    Player region;
    Vertex vertex = kNoVertex;
    Vertex target = kNoVertex;
    std::vector<Vertex> cycle;
    Priority max_priority = 0;
};

struct VerificationReport
{
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/**
 * Check a claimed solution: in each region W of player a, vertices of the
 * opponent cannot leave W, vertices of a have a strategy inside W, and every
 * cycle of the graph restricted to W and a's strategy has a maximal priority
 * of a's parity. The last check peels SCCs: in a cyclic component whose top
 * priority is fine, the top vertices are removed and the rest is checked
 * again.
 *
 * Strategy entries on vertices a player does not win are ignored. Throws
 * std::invalid_argument if the solution does not cover the game.
 */
VerificationReport verify(const ParityGame& game, const Solution& sol);

/** One line per violation, using original vertex ids. */
std::string describe(const ParityGame& game, const Violation& violation);

} // namespace dfi

#endif
