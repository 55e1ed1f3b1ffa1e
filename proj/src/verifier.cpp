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

#include <dfi/verifier.hpp>

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace dfi {

namespace {

/**
 * Tarjan's algorithm on vertex subsets of one fixed graph. Scratch arrays
 * span the whole graph and are restored after each call, so a call costs
 * time proportional to the subset and its edges.
 */
class SubsetScc
{
public:
    SubsetScc(const std::vector<std::vector<Vertex>>& adj)
        : adj_(adj), index_(adj.size(), unvisited), low_(adj.size(), 0), member_(adj.size(), 0),
          on_stack_(adj.size(), false)
    {
    }

    std::vector<std::vector<Vertex>> run(const std::vector<Vertex>& subset)
    {
        ++stamp_;
        for (Vertex v : subset) member_[v] = stamp_;
        std::vector<std::vector<Vertex>> out;
        std::size_t counter = 0;
        struct Frame
        {
            Vertex v;
            std::size_t next;
        };
        std::vector<Frame> call;
        for (Vertex root : subset) {
            if (index_[root] != unvisited) continue;
            index_[root] = low_[root] = counter++;
            stack_.push_back(root);
            on_stack_[root] = true;
            call.push_back({root, 0});
            while (!call.empty()) {
                Frame& f = call.back();
                const auto& succ = adj_[f.v];
                if (f.next < succ.size()) {
                    const Vertex w = succ[f.next++];
                    if (member_[w] != stamp_) continue;
                    if (index_[w] == unvisited) {
                        index_[w] = low_[w] = counter++;
                        stack_.push_back(w);
                        on_stack_[w] = true;
                        call.push_back({w, 0});
                    } else if (on_stack_[w]) {
                        low_[f.v] = std::min(low_[f.v], index_[w]);
                    }
                    continue;
                }
                const Vertex v = f.v;
                call.pop_back();
                if (!call.empty()) low_[call.back().v] = std::min(low_[call.back().v], low_[v]);
                if (low_[v] == index_[v]) {
                    std::vector<Vertex> comp;
                    Vertex w;
                    do {
                        w = stack_.back();
                        stack_.pop_back();
                        on_stack_[w] = false;
                        comp.push_back(w);
                    } while (w != v);
                    out.push_back(std::move(comp));
                }
            }
        }
        for (Vertex v : subset) index_[v] = unvisited;
        return out;
    }

private:
    static constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();

    const std::vector<std::vector<Vertex>>& adj_;
    std::vector<std::size_t> index_;
    std::vector<std::size_t> low_;
    std::vector<std::uint64_t> member_;
    std::vector<bool> on_stack_;
    std::vector<Vertex> stack_;
    std::uint64_t stamp_ = 0;
};

/** Shortest cycle through <start> inside <comp>, by breadth-first search. */
std::vector<Vertex> cycle_through(Vertex start, const std::vector<Vertex>& comp,
                                  const std::vector<std::vector<Vertex>>& adj)
{
    std::unordered_map<Vertex, Vertex> parent;
    std::unordered_map<Vertex, bool> in_comp;
    for (Vertex v : comp) in_comp[v] = true;

    std::deque<Vertex> queue{start};
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : adj[v]) {
            if (!in_comp.count(w)) continue;
            if (w == start) {
                std::vector<Vertex> cycle{v};
                for (Vertex x = v; x != start;) {
                    x = parent.at(x);
                    cycle.push_back(x);
                }
                std::reverse(cycle.begin(), cycle.end());
                return cycle;
            }
            if (parent.emplace(w, v).second) queue.push_back(w);
        }
    }
    return {start};
}

void check_region(const ParityGame& game, const Solution& sol, Player alpha, VerificationReport& report)
{
    const std::size_t n = game.vertex_count();
    std::vector<std::vector<Vertex>> adj(n);
    std::vector<Vertex> region;

    for (Vertex v = 0; v < n; ++v) {
        if (sol.winner[v] != alpha) continue;
        region.push_back(v);
        if (game.owner(v) != alpha) {
            for (Vertex u : game.successors(v)) {
                if (sol.winner[u] != alpha) {
                    report.violations.push_back({Violation::Kind::EscapeEdge, alpha, v, u, {}, 0});
                    break;
                }
            }
            for (Vertex u : game.successors(v))
                if (sol.winner[u] == alpha) adj[v].push_back(u);
            continue;
        }
        const auto s = sol.strategy[v];
        if (!s) {
            report.violations.push_back({Violation::Kind::MissingStrategy, alpha, v, kNoVertex, {}, 0});
        } else if (*s >= n || !game.has_edge(v, *s) || sol.winner[*s] != alpha) {
            report.violations.push_back({Violation::Kind::StrategyLeavesRegion, alpha, v, *s, {}, 0});
        } else {
            adj[v].push_back(*s);
        }
    }

    SubsetScc scc(adj);
    std::vector<std::vector<Vertex>> pending{std::move(region)};
    while (!pending.empty()) {
        auto subset = std::move(pending.back());
        pending.pop_back();
        for (auto& comp : scc.run(subset)) {
            const bool cyclic =
                comp.size() > 1 || std::find(adj[comp[0]].begin(), adj[comp[0]].end(), comp[0]) != adj[comp[0]].end();
            if (!cyclic) continue;
            std::sort(comp.begin(), comp.end());
            Priority top = 0;
            for (Vertex v : comp) top = std::max(top, game.priority(v));
            if (parity_of(top) != alpha) {
                const Vertex start = *std::find_if(comp.begin(), comp.end(),
                                                   [&](Vertex v) { return game.priority(v) == top; });
                report.violations.push_back(
                    {Violation::Kind::LosingCycleWitness, alpha, start, kNoVertex, cycle_through(start, comp, adj), top});
                continue;
            }
            std::vector<Vertex> rest;
            for (Vertex v : comp)
                if (game.priority(v) != top) rest.push_back(v);
            if (!rest.empty()) pending.push_back(std::move(rest));
        }
    }
}

} // namespace

VerificationReport verify(const ParityGame& game, const Solution& sol)
{
    const std::size_t n = game.vertex_count();
    if (sol.winner.size() != n || sol.strategy.size() != n) {
        throw std::invalid_argument("verify: solution size does not match the game");
    }
    VerificationReport report;
    check_region(game, sol, Player::Even, report);
    check_region(game, sol, Player::Odd, report);
    return report;
}

std::string describe(const ParityGame& game, const Violation& violation)
{
    std::ostringstream ss;
    auto id = [&](Vertex v) { return game.original_id(v); };
    ss << to_string(violation.region) << " region: ";
    switch (violation.kind) {
    case Violation::Kind::EscapeEdge:
        ss << "escape edge " << id(violation.vertex) << " -> " << id(violation.target);
        break;
    case Violation::Kind::MissingStrategy:
        ss << "missing strategy at " << id(violation.vertex);
        break;
    case Violation::Kind::StrategyLeavesRegion:
        ss << "strategy leaves region at " << id(violation.vertex) << " -> ";
        if (violation.target < game.vertex_count()) {
            ss << id(violation.target);
        } else {
            ss << "(invalid vertex)";
        }
        break;
    case Violation::Kind::LosingCycleWitness:
        ss << "losing cycle with max priority " << violation.max_priority << ":";
        for (Vertex v : violation.cycle) ss << ' ' << id(v);
        break;
    }
    return ss.str();
}

} // namespace dfi
