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

#ifndef DFI_FIXPOINT_HPP
#define DFI_FIXPOINT_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>

#include <dfi/game.hpp>
#include <dfi/vertex_set.hpp>

namespace dfi {

// Set semantics of modal mu-calculus formulas over a parity game. These
// evaluate everything from scratch and are meant for small games.

/** Vertices with some successor in <s>. */
VertexSet diamond(const VertexSet& s, const ParityGame& game);
/** Vertices with all successors in <s>. */
VertexSet box(const VertexSet& s, const ParityGame& game);

VertexSet owned_by(const ParityGame& game, Player player);
VertexSet with_priority(const ParityGame& game, Priority p);
/** Vertices whose priority has the parity of <player>. */
VertexSet with_parity(const ParityGame& game, Player player);

/** force_<player>(X): vertices <player> can move into X in one step. */
VertexSet force(const VertexSet& x, const ParityGame& game, Player player);

struct OnestepSets
{
    VertexSet even;        ///< Onestep_0
    VertexSet odd;         ///< Onestep_1
    VertexSet distraction; ///< even priorities won by Odd in one step, and vice versa
};

/** Estimated regions under flags <z>: Even(Z) and Odd(Z). */
VertexSet estimated_region(const VertexSet& z, const ParityGame& game, Player player);

OnestepSets onestep_sets(const VertexSet& z, const ParityGame& game);

/** Variable assignment: priority level -> set. */
using Environment = std::map<Priority, VertexSet>;

class BudgetExceeded : public std::runtime_error
{
public:
    explicit BudgetExceeded(std::uint64_t budget);
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t budget_;
};

struct BflOptions
{
    /** Maximum number of body evaluations. */
    std::uint64_t budget = 100'000'000;
    /** Called with every new iterate of the fixpoint at <level>. */
    std::function<void(Priority level, const VertexSet& iterate)> on_iterate;
    /** Checked before every body evaluation; throws SolveTimeout when passed. */
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

/**
 * The body of the nested fixpoint formula under <env>:
 *
 *     (V_Even-owned & OR_p <>(V_p & X_p)) | (V_Odd-owned & AND_p [](!V_p | X_p))
 *
 * with p ranging over the bound levels.
 */
VertexSet bfl_body(const ParityGame& game, const Environment& env);

/**
 * Even's winning region by literal nested fixpoint evaluation: one variable
 * per priority present, outermost for the highest priority, greatest
 * fixpoints for even levels and least fixpoints for odd ones. Inner
 * fixpoints restart from scratch on every outer iteration.
 */
VertexSet bfl_win0(const ParityGame& game, const BflOptions& options = {});

} // namespace dfi

#endif
