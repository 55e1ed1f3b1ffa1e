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

#include <dfi/preprocess.hpp>

#include <algorithm>

namespace dfi {

std::size_t PartialSolution::decided_count() const
{
    return static_cast<std::size_t>(std::count(decided.begin(), decided.end(), true));
}

Solution PartialSolution::compose(const Solution& residual_solution) const
{
    if (residual_solution.winner.size() != parent.size()) {
        throw std::invalid_argument("compose: residual solution has wrong size");
    }
    Solution sol{winner, strategy};
    for (std::size_t i = 0; i < parent.size(); ++i) {
        const Vertex v = parent[i];
        sol.winner[v] = residual_solution.winner[i];
        sol.strategy[v] = std::nullopt;
        if (!residual_solution.strategy.empty() && residual_solution.strategy[i]) {
            sol.strategy[v] = parent[*residual_solution.strategy[i]];
        }
    }
    return sol;
}

namespace {

class Decider
{
public:
    explicit Decider(const ParityGame& game) : game_(game), alive_(Restriction::full(game.vertex_count()))
    {
        const std::size_t n = game.vertex_count();
        partial_.decided.assign(n, false);
        partial_.winner.assign(n, Player::Even);
        partial_.strategy.assign(n, std::nullopt);
    }

    const Restriction& alive() const { return alive_; }

    /**
     * Decide Attr_<player>(seeds) for <player>. Seeds owned by <player> use
     * the strategy given in <seed_strategy> when set.
     */
    void decide(Player player, const std::vector<Vertex>& seeds,
                const std::vector<std::optional<Vertex>>& seed_strategy)
    {
        std::vector<Vertex> live;
        for (Vertex v : seeds)
            if (alive_.alive[v]) live.push_back(v);
        if (live.empty()) return;
        const Attractor a = attract(game_, alive_, player, live);
        for (Vertex v : a.order) {
            partial_.decided[v] = true;
            partial_.winner[v] = player;
            if (game_.owner(v) == player) {
                partial_.strategy[v] = seed_strategy[v] ? seed_strategy[v] : a.strategy[v];
            }
        }
        for (Vertex v : a.order) alive_.alive[v] = false;
    }

    Reduction finish(bool drop_self_loops)
    {
        auto sub = induced_subgame(game_, alive_, drop_self_loops);
        partial_.residual = alive_;
        partial_.parent = std::move(sub.parent);
        return Reduction{std::move(partial_), std::move(sub.game)};
    }

private:
    const ParityGame& game_;
    Restriction alive_;
    PartialSolution partial_;
};

} // namespace

Reduction eliminate_self_loops(const ParityGame& game)
{
    const std::size_t n = game.vertex_count();
    Decider decider(game);
    std::vector<std::optional<Vertex>> seed_strategy(n);

    while (true) {
        std::vector<Vertex> seeds[2];
        const auto& alive = decider.alive().alive;
        for (Vertex v = 0; v < n; ++v) {
            if (!alive[v] || !game.has_edge(v, v)) continue;
            const Player favoured = parity_of(game.priority(v));
            if (game.owner(v) == favoured) {
                seeds[to_int(favoured)].push_back(v);
                seed_strategy[v] = v;
                continue;
            }
            const auto succ = game.successors(v);
            const bool can_leave = std::any_of(succ.begin(), succ.end(), [&](Vertex u) { return u != v && alive[u]; });
            if (!can_leave) seeds[to_int(favoured)].push_back(v);
        }
        if (seeds[0].empty() && seeds[1].empty()) break;
        decider.decide(Player::Even, seeds[0], seed_strategy);
        decider.decide(Player::Odd, seeds[1], seed_strategy);
    }
    return decider.finish(true);
}

Reduction winner_controlled_cycles(const ParityGame& game)
{
    const std::size_t n = game.vertex_count();
    Decider decider(game);
    std::vector<std::optional<Vertex>> seed_strategy(n);

    for (Player player : {Player::Even, Player::Odd}) {
        std::vector<bool> mask(n, false);
        const auto& alive = decider.alive().alive;
        for (Vertex v = 0; v < n; ++v) {
            mask[v] = alive[v] && game.owner(v) == player && parity_of(game.priority(v)) == player;
        }
        std::vector<Vertex> seeds;
        std::vector<std::size_t> comp_of(n, 0);
        auto comps = sccs(n, mask, [&](Vertex v) { return game.successors(v); });
        for (std::size_t c = 0; c < comps.size(); ++c) {
            const auto& comp = comps[c];
            if (!is_cyclic(comp, [&](Vertex a, Vertex b) { return game.has_edge(a, b); })) continue;
            for (Vertex v : comp) comp_of[v] = c + 1;
            for (Vertex v : comp) {
                for (Vertex u : game.successors(v)) {
                    if (comp_of[u] == c + 1) {
                        seed_strategy[v] = u;
                        break;
                    }
                }
                seeds.push_back(v);
            }
        }
        decider.decide(player, seeds, seed_strategy);
    }
    return decider.finish(false);
}

Solution solve_with_preprocessing(const ParityGame& game,
                                  const std::function<Solution(const ParityGame&)>& solver)
{
    const Reduction loops = eliminate_self_loops(game);
    const Reduction cycles = winner_controlled_cycles(loops.residual);
    const Solution inner = solver(cycles.residual);
    return loops.partial.compose(cycles.partial.compose(inner));
}

} // namespace dfi
