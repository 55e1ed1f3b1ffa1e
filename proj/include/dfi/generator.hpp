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

#ifndef DFI_GENERATOR_HPP
#define DFI_GENERATOR_HPP

#include <cstdint>
#include <stdexcept>

#include <dfi/game.hpp>

namespace dfi {

/**
 * SplitMix64 (Steele, Lea and Flood). The output sequence for a seed is
 * fixed; games generated from a seed must stay reproducible.
 */
class SplitMix64
{
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /** Uniform in [0, bound) by rejection sampling; bound > 0. */
    std::uint64_t below(std::uint64_t bound) noexcept
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    /** Uniform in [0, 1), from the top 53 bits. */
    double unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

class InvalidParams : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct GenParams
{
    std::size_t n = 10;
    Priority max_priority = 4;
    std::size_t min_outdegree = 1;
    std::size_t max_outdegree = 3;
    double self_loop_probability = 0.0;
    std::uint64_t seed = 0;
};

/** Throws InvalidParams unless n >= 1, 1 <= lo <= hi <= n and the probability is in [0, 1]. */
void validate(const GenParams& params);

/**
 * Per vertex, in order: priority uniform in [0, d], owner uniform, outdegree
 * k uniform in [lo, hi]. With the self-loop probability the vertex's first
 * successor is itself; a self-loop is also forced when k exceeds the number
 * of other vertices. The remaining successors are distinct other vertices
 * drawn by Floyd's sampling, in draw order. All randomness comes from one
 * SplitMix64 stream seeded with params.seed.
 */
ParityGame random_game(const GenParams& params);

} // namespace dfi

#endif
