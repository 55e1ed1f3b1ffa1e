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

#include <doctest.h>

#include <dfi/fixpoint.hpp>
#include <dfi/solver.hpp>

#include "fixtures.hpp"

using namespace dfi;
using dfi::test::g1;
using dfi::test::g2;
using dfi::test::make_game;

TEST_CASE("diamond and box")
{
    const auto game = g1();
    CHECK(diamond(VertexSet(2, true), game) == VertexSet(2, true));
    CHECK(box(VertexSet(2, true), game) == VertexSet(2, true));
    CHECK(diamond(VertexSet(2), game).empty());
    CHECK(box(VertexSet(2), game).empty());
    CHECK(diamond(VertexSet(2, {1}), game) == VertexSet(2, {0}));
    CHECK(box(VertexSet(2, {1}), game).empty());
}

TEST_CASE("onestep sets of G1 with no distractions")
{
    const auto game = g1();
    const auto sets = onestep_sets(VertexSet(2), game);
    CHECK(sets.even == VertexSet(2, {0}));
    CHECK(sets.odd == VertexSet(2, {1}));
    // v0 has odd priority and can move to Even's v1; v1 has even priority and can only move to Odd's v0
    CHECK(sets.distraction == VertexSet(2, {0, 1}));
}

TEST_CASE("onestep sets match the per-vertex onestep")
{
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto game = dfi::test::random_small(seed, 30);
        const std::size_t n = game.vertex_count();
        SplitMix64 rng(seed + 99);
        VertexSet z(n);
        for (Vertex v = 0; v < n; ++v)
            if (rng.below(3) == 0) z.insert(v);
        const auto sets = onestep_sets(z, game);
        for (Vertex v = 0; v < n; ++v) {
            const auto r = onestep(game, v, z);
            CHECK(sets.even.contains(v) == (r.winner == Player::Even));
            CHECK(sets.odd.contains(v) == (r.winner == Player::Odd));
            CHECK(sets.distraction.contains(v) == (r.winner != parity_of(game.priority(v))));
        }
    }
}

TEST_CASE("force is the one-step controllable predecessor")
{
    const auto game = make_game({0, 0, 0}, {0, 1, 0}, {{1, 2}, {0, 2}, {2}});
    const VertexSet target(3, {2});
    CHECK(force(target, game, Player::Even) == VertexSet(3, {0, 2}));
    CHECK(force(target, game, Player::Odd) == VertexSet(3, {1, 2}));
}

TEST_CASE("bfl_win0 examples")
{
    CHECK(bfl_win0(g1()) == VertexSet(2, {0, 1}));
    CHECK(bfl_win0(g2()) == VertexSet(8, true));
    CHECK(bfl_win0(make_game({2}, {1}, {{0}})) == VertexSet(1, {0}));
    CHECK(bfl_win0(make_game({3}, {0}, {{0}})).empty());
    CHECK(bfl_win0(ParityGame()).empty());
}

TEST_CASE("bfl_win0 equals the basic solver's Even region")
{
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const auto game = dfi::test::random_small(seed, 12, 4);
        const auto even = bfl_win0(game);
        const auto winner = solve_basic(game);
        for (Vertex v = 0; v < game.vertex_count(); ++v) CHECK(even.contains(v) == (winner[v] == Player::Even));
    }
}

TEST_CASE("even levels descend from V and odd levels ascend from the empty set")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto game = dfi::test::random_small(seed, 12, 4);
        const std::size_t n = game.vertex_count();
        std::size_t odd_empty = 0;
        std::size_t even_full = 0;
        BflOptions options;
        options.on_iterate = [&](Priority level, const VertexSet& x) {
            // every reported iterate differs from its predecessor, so it cannot equal the start value
            if (level % 2 == 1 && x.empty()) ++odd_empty;
            if (level % 2 == 0 && x.size() == n) ++even_full;
        };
        bfl_win0(game, options);
        CHECK(odd_empty == 0);
        CHECK(even_full == 0);
    }
}

TEST_CASE("bfl budget and deadline")
{
    BflOptions tight;
    tight.budget = 1;
    CHECK_THROWS_AS(bfl_win0(g2(), tight), BudgetExceeded);

    BflOptions late;
    late.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
    CHECK_THROWS_AS(bfl_win0(g2(), late), SolveTimeout);
}
