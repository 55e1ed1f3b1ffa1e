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

#include <dfi/zielonka.hpp>

#include <dfi/graph.hpp>
#include <dfi/solver.hpp>

namespace dfi {

RecursionDepthExceeded::RecursionDepthExceeded(std::size_t limit)
    : std::runtime_error("recursion depth limit " + std::to_string(limit) + " exceeded"), limit_(limit)
{
}

namespace {

class Zielonka
{
public:
    Zielonka(const ParityGame& game, const ZielonkaOptions& options)
        : game_(game), options_(options),
          limit_(options.depth_limit.value_or(game.vertex_count() + game.max_priority() + 8))
    {
        sol_.winner.assign(game.vertex_count(), Player::Even);
        sol_.strategy.assign(game.vertex_count(), std::nullopt);
    }

    Solution run()
    {
        solve(Restriction::full(game_.vertex_count()), 1);
        return std::move(sol_);
    }

private:
    void assign(Vertex v, Player winner, std::optional<Vertex> strategy)
    {
        sol_.winner[v] = winner;
        sol_.strategy[v] = game_.owner(v) == winner ? strategy : std::nullopt;
    }

    std::optional<Vertex> first_live_successor(Vertex v, const Restriction& r) const
    {
        for (Vertex u : game_.successors(v))
            if (r.alive[u]) return u;
        return std::nullopt;
    }

    void solve(const Restriction& alive, std::size_t depth)
    {
        if (depth > limit_) throw RecursionDepthExceeded(limit_);
        if (options_.deadline && std::chrono::steady_clock::now() > *options_.deadline) throw SolveTimeout();

        const std::size_t n = game_.vertex_count();
        bool any = false;
        Priority top = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (!alive.alive[v]) continue;
            if (!any || game_.priority(v) > top) top = game_.priority(v);
            any = true;
        }
        if (!any) return;

        const Player alpha = parity_of(top);
        std::vector<Vertex> heads;
        for (Vertex v = 0; v < n; ++v)
            if (alive.alive[v] && game_.priority(v) == top) heads.push_back(v);

        const Attractor a = attract(game_, alive, alpha, heads);
        Restriction sub = alive;
        for (Vertex v = 0; v < n; ++v)
            if (a.members[v]) sub.alive[v] = false;
        solve(sub, depth + 1);

        std::vector<Vertex> lost;
        for (Vertex v = 0; v < n; ++v)
            if (sub.alive[v] && sol_.winner[v] != alpha) lost.push_back(v);

        if (lost.empty()) {
            for (Vertex v : a.order) {
                auto s = a.strategy[v];
                if (!s) s = first_live_successor(v, alive);
                assign(v, alpha, s);
            }
            return;
        }

        const Player beta = opponent(alpha);
        const Attractor b = attract(game_, alive, beta, lost);
        Restriction rest = alive;
        for (Vertex v : b.order) {
            rest.alive[v] = false;
            if (sub.alive[v] && sol_.winner[v] == beta) continue; // keeps its recursive strategy
            assign(v, beta, b.strategy[v]);
        }
        solve(rest, depth + 1);
    }

    const ParityGame& game_;
    const ZielonkaOptions& options_;
    std::size_t limit_;
    Solution sol_;
};

} // namespace

Solution solve_zielonka(const ParityGame& game, const ZielonkaOptions& options)
{
    return Zielonka(game, options).run();
}

} // namespace dfi
