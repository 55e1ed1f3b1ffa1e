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

#include <dfi/game.hpp>

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace dfi {

struct ParityGame::PredecessorCache
{
    std::once_flag once;
    std::vector<std::size_t> offsets;
    std::vector<Vertex> sources;
};

ParityGame::ParityGame()
    : offsets_(1, 0), preds_(std::make_shared<PredecessorCache>())
{
}

ParityGame::ParityGame(std::vector<Priority> priority,
                       std::vector<Player> owner,
                       const std::vector<std::vector<Vertex>>& successors,
                       std::vector<std::uint64_t> original_id,
                       std::vector<std::optional<std::string>> labels)
    : priority_(std::move(priority)),
      owner_(std::move(owner)),
      original_id_(std::move(original_id)),
      labels_(std::move(labels)),
      preds_(std::make_shared<PredecessorCache>())
{
    const std::size_t n = priority_.size();
    if (owner_.size() != n || successors.size() != n) {
        throw std::invalid_argument("ParityGame: per-vertex arrays differ in length");
    }
    if (original_id_.empty()) {
        original_id_.resize(n);
        std::iota(original_id_.begin(), original_id_.end(), std::uint64_t{0});
    } else if (original_id_.size() != n) {
        throw std::invalid_argument("ParityGame: original_id has wrong length");
    }
    if (labels_.empty()) {
        labels_.resize(n);
    } else if (labels_.size() != n) {
        throw std::invalid_argument("ParityGame: labels has wrong length");
    }

    offsets_.reserve(n + 1);
    offsets_.push_back(0);
    std::size_t total = 0;
    for (const auto& s : successors) total += s.size();
    targets_.reserve(total);
    for (const auto& s : successors) {
        targets_.insert(targets_.end(), s.begin(), s.end());
        offsets_.push_back(targets_.size());
    }
    if (!priority_.empty()) max_priority_ = *std::max_element(priority_.begin(), priority_.end());
}

std::span<const Vertex> ParityGame::predecessors(Vertex v) const
{
    std::call_once(preds_->once, [this] {
        const std::size_t n = vertex_count();
        auto& offsets = preds_->offsets;
        auto& sources = preds_->sources;
        offsets.assign(n + 1, 0);
        for (Vertex t : targets_) {
            if (t < n) ++offsets[t + 1];
        }
        for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
        sources.resize(offsets[n]);
        std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex t : successors(u)) {
                if (t < n) sources[fill[t]++] = u;
            }
        }
    });
    const auto& c = *preds_;
    return {c.sources.data() + c.offsets[v], c.sources.data() + c.offsets[v + 1]};
}

bool ParityGame::is_sorted_by_priority() const noexcept
{
    return std::is_sorted(priority_.begin(), priority_.end());
}

bool ParityGame::has_edge(Vertex from, Vertex to) const
{
    auto s = successors(from);
    return std::find(s.begin(), s.end(), to) != s.end();
}

bool operator==(const ParityGame& a, const ParityGame& b)
{
    return a.priority_ == b.priority_ && a.owner_ == b.owner_ && a.offsets_ == b.offsets_ &&
           a.targets_ == b.targets_ && a.original_id_ == b.original_id_ && a.labels_ == b.labels_;
}

namespace {

std::string describe(ValidationError::Kind kind, std::uint64_t v, std::uint64_t t)
{
    std::ostringstream ss;
    switch (kind) {
    case ValidationError::Kind::SinkVertex:
        ss << "vertex " << v << " has no successors";
        break;
    case ValidationError::Kind::DanglingEdge:
        ss << "edge " << v << " -> " << t << " points to an unknown vertex";
        break;
    case ValidationError::Kind::DuplicateEdge:
        ss << "duplicate edge " << v << " -> " << t;
        break;
    }
    return ss.str();
}

} // namespace

ValidationError::ValidationError(Kind kind, std::uint64_t vertex, std::uint64_t target)
    : std::runtime_error(describe(kind, vertex, target)), kind_(kind), vertex_(vertex), target_(target)
{
}

void validate(const ParityGame& game)
{
    const std::size_t n = game.vertex_count();
    // last_seen[u] == v + 1 marks that u already occurred as successor of v
    std::vector<std::size_t> last_seen(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        auto succ = game.successors(v);
        if (succ.empty()) {
            throw ValidationError(ValidationError::Kind::SinkVertex, game.original_id(v));
        }
        for (Vertex u : succ) {
            if (u >= n) {
                throw ValidationError(ValidationError::Kind::DanglingEdge, game.original_id(v), u);
            }
            if (last_seen[u] == v + 1) {
                throw ValidationError(ValidationError::Kind::DuplicateEdge, game.original_id(v),
                                      game.original_id(u));
            }
            last_seen[u] = v + 1;
        }
    }
}

ParityGame permute(const ParityGame& game, std::span<const Vertex> new_index)
{
    const std::size_t n = game.vertex_count();
    if (new_index.size() != n) throw std::invalid_argument("permute: mapping has wrong length");

    std::vector<Priority> priority(n);
    std::vector<Player> owner(n);
    std::vector<std::vector<Vertex>> succ(n);
    std::vector<std::uint64_t> ids(n);
    std::vector<std::optional<std::string>> labels(n);
    for (Vertex v = 0; v < n; ++v) {
        const Vertex w = new_index[v];
        priority[w] = game.priority(v);
        owner[w] = game.owner(v);
        ids[w] = game.original_id(v);
        labels[w] = game.label(v);
        auto s = game.successors(v);
        succ[w].reserve(s.size());
        for (Vertex u : s) succ[w].push_back(u < n ? new_index[u] : u);
    }
    return ParityGame(std::move(priority), std::move(owner), succ, std::move(ids), std::move(labels));
}

std::pair<ParityGame, SortPermutation> sort_by_priority(const ParityGame& game)
{
    const std::size_t n = game.vertex_count();
    SortPermutation perm;
    perm.backward.resize(n);
    std::iota(perm.backward.begin(), perm.backward.end(), Vertex{0});
    std::stable_sort(perm.backward.begin(), perm.backward.end(),
                     [&](Vertex a, Vertex b) { return game.priority(a) < game.priority(b); });
    perm.forward.resize(n);
    for (Vertex i = 0; i < n; ++i) perm.forward[perm.backward[i]] = i;
    auto sorted = permute(game, perm.forward);
    return {std::move(sorted), std::move(perm)};
}

GameStats stats(const ParityGame& game)
{
    GameStats s;
    s.vertices = game.vertex_count();
    s.edges = game.edge_count();
    s.max_priority = game.max_priority();
    std::vector<Priority> prios(game.priorities().begin(), game.priorities().end());
    std::sort(prios.begin(), prios.end());
    s.distinct_priorities = static_cast<std::size_t>(std::unique(prios.begin(), prios.end()) - prios.begin());
    s.average_outdegree = s.vertices == 0 ? 0.0 : static_cast<double>(s.edges) / static_cast<double>(s.vertices);
    return s;
}

Solution unsort(const Solution& internal, const SortPermutation& perm)
{
    const std::size_t n = internal.winner.size();
    Solution out;
    out.winner.resize(n);
    out.strategy.resize(internal.strategy.empty() ? 0 : n);
    for (Vertex i = 0; i < n; ++i) {
        const Vertex e = perm.backward[i];
        out.winner[e] = internal.winner[i];
        if (!internal.strategy.empty() && internal.strategy[i]) {
            out.strategy[e] = perm.backward[*internal.strategy[i]];
        }
    }
    return out;
}

} // namespace dfi
