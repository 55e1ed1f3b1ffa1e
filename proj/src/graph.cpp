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

#include <dfi/graph.hpp>

#include <algorithm>
#include <limits>

namespace dfi {

Restriction Restriction::of(std::size_t n, std::span<const Vertex> members)
{
    Restriction r{std::vector<bool>(n, false)};
    for (Vertex v : members) r.alive[v] = true;
    return r;
}

std::size_t Restriction::count() const
{
    return static_cast<std::size_t>(std::count(alive.begin(), alive.end(), true));
}

Attractor attract(const ParityGame& game, const Restriction& restriction, Player player,
                  std::span<const Vertex> target)
{
    const std::size_t n = game.vertex_count();
    Attractor result;
    result.members.assign(n, false);
    result.strategy.assign(n, std::nullopt);

    for (Vertex v : target) {
        if (!result.members[v]) {
            result.members[v] = true;
            result.order.push_back(v);
        }
    }

    // remaining[u]: live successors of an opponent vertex not yet attracted;
    // computed on first touch
    constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> remaining(n, unset);

    auto first_inside = [&](Vertex u) -> std::optional<Vertex> {
        for (Vertex w : game.successors(u)) {
            if (restriction.alive[w] && result.members[w]) return w;
        }
        return std::nullopt;
    };

    for (std::size_t head = 0; head < result.order.size(); ++head) {
        const Vertex v = result.order[head];
        for (Vertex u : game.predecessors(v)) {
            if (!restriction.alive[u] || result.members[u]) continue;
            if (game.owner(u) == player) {
                result.strategy[u] = first_inside(u);
                result.members[u] = true;
                result.order.push_back(u);
            } else {
                if (remaining[u] == unset) {
                    std::size_t live = 0;
                    for (Vertex w : game.successors(u))
                        if (restriction.alive[w]) ++live;
                    remaining[u] = live;
                }
                if (--remaining[u] == 0) {
                    result.members[u] = true;
                    result.order.push_back(u);
                }
            }
        }
    }

    for (Vertex v : target) {
        if (game.owner(v) == player && !result.strategy[v]) result.strategy[v] = first_inside(v);
    }
    return result;
}

std::vector<std::vector<Vertex>> sccs(std::size_t n, const std::vector<bool>& alive,
                                      const std::function<std::span<const Vertex>(Vertex)>& successors)
{
    constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<Vertex> stack;
    std::vector<std::vector<Vertex>> out;
    std::size_t counter = 0;

    struct Frame
    {
        Vertex v;
        std::span<const Vertex> succ;
        std::size_t next;
    };
    std::vector<Frame> call;

    for (Vertex root = 0; root < n; ++root) {
        if (!alive[root] || index[root] != unvisited) continue;
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        call.push_back({root, successors(root), 0});

        while (!call.empty()) {
            Frame& f = call.back();
            if (f.next < f.succ.size()) {
                const Vertex w = f.succ[f.next++];
                if (w >= n || !alive[w]) continue;
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, successors(w), 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            const Vertex v = f.v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == index[v]) {
                std::vector<Vertex> comp;
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                out.push_back(std::move(comp));
            }
        }
    }
    return out;
}

std::vector<std::vector<Vertex>> sccs(const ParityGame& game, const Restriction& restriction)
{
    return sccs(game.vertex_count(), restriction.alive, [&](Vertex v) { return game.successors(v); });
}

bool is_cyclic(std::span<const Vertex> component, const std::function<bool(Vertex, Vertex)>& has_edge)
{
    if (component.size() > 1) return true;
    return component.size() == 1 && has_edge(component[0], component[0]);
}

Subgame induced_subgame(const ParityGame& game, const Restriction& restriction, bool drop_self_loops)
{
    const std::size_t n = game.vertex_count();
    Subgame sub;
    std::vector<Vertex> local(n, kNoVertex);
    for (Vertex v = 0; v < n; ++v) {
        if (restriction.alive[v]) {
            local[v] = static_cast<Vertex>(sub.parent.size());
            sub.parent.push_back(v);
        }
    }
    const std::size_t m = sub.parent.size();
    std::vector<Priority> priority(m);
    std::vector<Player> owner(m);
    std::vector<std::vector<Vertex>> succ(m);
    std::vector<std::uint64_t> ids(m);
    std::vector<std::optional<std::string>> labels(m);
    for (Vertex i = 0; i < m; ++i) {
        const Vertex v = sub.parent[i];
        priority[i] = game.priority(v);
        owner[i] = game.owner(v);
        ids[i] = game.original_id(v);
        labels[i] = game.label(v);
        for (Vertex u : game.successors(v)) {
            if (!restriction.alive[u]) continue;
            if (drop_self_loops && u == v) continue;
            succ[i].push_back(local[u]);
        }
    }
    sub.game = ParityGame(std::move(priority), std::move(owner), succ, std::move(ids), std::move(labels));
    return sub;
}

} // namespace dfi
