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

#include <dfi/fixpoint.hpp>

#include <algorithm>
#include <string>

#include <dfi/solver.hpp>

namespace dfi {

VertexSet diamond(const VertexSet& s, const ParityGame& game)
{
    const std::size_t n = game.vertex_count();
    VertexSet out(n);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u : game.successors(v)) {
            if (s.contains(u)) {
                out.insert(v);
                break;
            }
        }
    }
    return out;
}

VertexSet box(const VertexSet& s, const ParityGame& game)
{
    const std::size_t n = game.vertex_count();
    VertexSet out(n);
    for (Vertex v = 0; v < n; ++v) {
        auto succ = game.successors(v);
        if (!succ.empty() && std::all_of(succ.begin(), succ.end(), [&](Vertex u) { return s.contains(u); })) {
            out.insert(v);
        }
    }
    return out;
}

VertexSet owned_by(const ParityGame& game, Player player)
{
    VertexSet out(game.vertex_count());
    for (Vertex v = 0; v < game.vertex_count(); ++v)
        if (game.owner(v) == player) out.insert(v);
    return out;
}

VertexSet with_priority(const ParityGame& game, Priority p)
{
    VertexSet out(game.vertex_count());
    for (Vertex v = 0; v < game.vertex_count(); ++v)
        if (game.priority(v) == p) out.insert(v);
    return out;
}

VertexSet with_parity(const ParityGame& game, Player player)
{
    VertexSet out(game.vertex_count());
    for (Vertex v = 0; v < game.vertex_count(); ++v)
        if (parity_of(game.priority(v)) == player) out.insert(v);
    return out;
}

VertexSet force(const VertexSet& x, const ParityGame& game, Player player)
{
    return (owned_by(game, player) & diamond(x, game)) | (owned_by(game, opponent(player)) & box(x, game));
}

VertexSet estimated_region(const VertexSet& z, const ParityGame& game, Player player)
{
    // Even(Z) = (V_even & !Z) | (V_odd & Z), and symmetrically for Odd
    return (with_parity(game, player) - z) | (with_parity(game, opponent(player)) & z);
}

OnestepSets onestep_sets(const VertexSet& z, const ParityGame& game)
{
    const VertexSet even_owned = owned_by(game, Player::Even);
    const VertexSet odd_owned = owned_by(game, Player::Odd);
    const VertexSet even_region = estimated_region(z, game, Player::Even);
    const VertexSet odd_region = estimated_region(z, game, Player::Odd);

    OnestepSets out;
    out.even = (even_owned & diamond(even_region, game)) | (odd_owned & box(even_region, game));
    out.odd = (even_owned & box(odd_region, game)) | (odd_owned & diamond(odd_region, game));
    out.distraction = (with_parity(game, Player::Even) & out.odd) | (with_parity(game, Player::Odd) & out.even);
    return out;
}

BudgetExceeded::BudgetExceeded(std::uint64_t budget)
    : std::runtime_error("fixpoint evaluation budget of " + std::to_string(budget) + " exhausted"),
      budget_(budget)
{
}

VertexSet bfl_body(const ParityGame& game, const Environment& env)
{
    const std::size_t n = game.vertex_count();
    VertexSet some(n);
    VertexSet all(n, true);
    for (const auto& [p, x] : env) {
        const VertexSet level = with_priority(game, p);
        some |= diamond(level & x, game);
        all &= box(~level | x, game);
    }
    return (owned_by(game, Player::Even) & some) | (owned_by(game, Player::Odd) & all);
}

namespace {

class NestedFixpoint
{
public:
    NestedFixpoint(const ParityGame& game, const BflOptions& options) : game_(game), options_(options)
    {
        for (Priority p : game.priorities()) levels_.push_back(p);
        std::sort(levels_.begin(), levels_.end(), std::greater<>());
        levels_.erase(std::unique(levels_.begin(), levels_.end()), levels_.end());
    }

    VertexSet run()
    {
        if (levels_.empty()) return VertexSet(game_.vertex_count());
        return evaluate(0);
    }

private:
    /** Value of the fixpoint binding levels_[depth], with outer variables fixed in env_. */
    VertexSet evaluate(std::size_t depth)
    {
        if (depth == levels_.size()) {
            if (++evaluations_ > options_.budget) throw BudgetExceeded(options_.budget);
            if (options_.deadline && std::chrono::steady_clock::now() > *options_.deadline) throw SolveTimeout();
            return bfl_body(game_, env_);
        }
        const Priority p = levels_[depth];
        const bool greatest = parity_of(p) == Player::Even;
        VertexSet x(game_.vertex_count(), greatest);
        while (true) {
            env_[p] = x;
            VertexSet next = evaluate(depth + 1);
            if (next == x) break;
            x = std::move(next);
            if (options_.on_iterate) options_.on_iterate(p, x);
        }
        env_.erase(p);
        return x;
    }

    const ParityGame& game_;
    const BflOptions& options_;
    std::vector<Priority> levels_;
    Environment env_;
    std::uint64_t evaluations_ = 0;
};

} // namespace

VertexSet bfl_win0(const ParityGame& game, const BflOptions& options)
{
    return NestedFixpoint(game, options).run();
}

} // namespace dfi
