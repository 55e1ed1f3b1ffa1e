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

#include <dfi/generator.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace dfi {

void validate(const GenParams& params)
{
    if (params.n < 1) throw InvalidParams("n must be at least 1");
    if (params.min_outdegree < 1) throw InvalidParams("minimum outdegree must be at least 1");
    if (params.max_outdegree < params.min_outdegree) {
        throw InvalidParams("maximum outdegree is below the minimum");
    }
    if (params.max_outdegree > params.n) throw InvalidParams("maximum outdegree exceeds n");
    if (!(params.self_loop_probability >= 0.0 && params.self_loop_probability <= 1.0)) {
        throw InvalidParams("self-loop probability must be in [0, 1]");
    }
}

ParityGame random_game(const GenParams& params)
{
    validate(params);
    const std::size_t n = params.n;
    SplitMix64 rng(params.seed);

    std::vector<Priority> priority(n);
    std::vector<Player> owner(n);
    std::vector<std::vector<Vertex>> successors(n);
    std::vector<Vertex> drawn;

    for (Vertex v = 0; v < n; ++v) {
        priority[v] = static_cast<Priority>(rng.below(std::uint64_t{params.max_priority} + 1));
        owner[v] = static_cast<Player>(rng.below(2));
        const std::size_t k =
            params.min_outdegree + rng.below(params.max_outdegree - params.min_outdegree + 1);
        const bool self_loop = rng.unit() < params.self_loop_probability || k > n - 1;

        auto& succ = successors[v];
        if (self_loop) succ.push_back(v);
        // Floyd's sampling of m distinct indices among the n - 1 other vertices
        const std::size_t others = n - 1;
        const std::size_t m = k - succ.size();
        drawn.clear();
        for (std::size_t j = others - m; j < others; ++j) {
            const auto t = static_cast<Vertex>(rng.below(j + 1));
            const bool seen = std::find(drawn.begin(), drawn.end(), t) != drawn.end();
            drawn.push_back(seen ? static_cast<Vertex>(j) : t);
        }
        for (Vertex idx : drawn) succ.push_back(idx < v ? idx : idx + 1);
    }
    return ParityGame(std::move(priority), std::move(owner), successors);
}

} // namespace dfi
