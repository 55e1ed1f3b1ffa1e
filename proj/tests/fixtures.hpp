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

#ifndef DFI_TESTS_FIXTURES_HPP
#define DFI_TESTS_FIXTURES_HPP

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <dfi/formats.hpp>
#include <dfi/game.hpp>
#include <dfi/generator.hpp>

namespace dfi::test {

inline std::string data_path(const std::string& name)
{
    return std::string(DFI_TEST_DATA) + "/" + name;
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline ParityGame load(const std::string& name)
{
    return parse_pgsolver(read_file(data_path(name)));
}

/** v0 pr 1 Even {v0, v1}; v1 pr 2 Even {v0}. */
inline ParityGame g1()
{
    return load("g1.pg");
}

/**
 * Eight vertices whose ids equal their priorities, stored in file order
 * 3, 18, 1, 2, 16, 5, 4, 17.
 */
inline ParityGame g2()
{
    return load("g2.pg");
}

/** Dense index of the vertex with original id <id>. */
inline Vertex index_of(const ParityGame& game, std::uint64_t id)
{
    for (Vertex v = 0; v < game.vertex_count(); ++v)
        if (game.original_id(v) == id) return v;
    return kNoVertex;
}

/** Small game built inline: priorities, owners (0/1) and successor lists. */
inline ParityGame make_game(std::vector<Priority> priority, std::vector<int> owner,
                            const std::vector<std::vector<Vertex>>& successors)
{
    std::vector<Player> owners;
    for (int o : owner) owners.push_back(static_cast<Player>(o));
    return ParityGame(std::move(priority), std::move(owners), successors);
}

inline ParityGame random_small(std::uint64_t seed, std::size_t max_n = 40, Priority max_d = 6,
                               std::size_t max_degree = 4, double self_loops = 0.1)
{
    SplitMix64 rng(seed ^ 0x5eedULL);
    GenParams params;
    params.n = 1 + rng.below(max_n);
    params.max_priority = static_cast<Priority>(rng.below(max_d + 1));
    params.min_outdegree = 1;
    params.max_outdegree = std::min<std::size_t>(max_degree, params.n);
    params.self_loop_probability = self_loops;
    params.seed = seed;
    return random_game(params);
}

} // namespace dfi::test

#endif
