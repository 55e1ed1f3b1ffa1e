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

#include <chrono>
#include <set>

#include <dfi/solver.hpp>
#include <dfi/verifier.hpp>
#include <dfi/zielonka.hpp>

#include "fixtures.hpp"

using namespace dfi;
using dfi::test::g1;
using dfi::test::g2;
using dfi::test::index_of;
using dfi::test::make_game;

namespace {

SolverOptions with(SolverMode mode, PassSemantics semantics = PassSemantics::Snapshot, unsigned workers = 1)
{
    SolverOptions options;
    options.mode = mode;
    options.pass_semantics = semantics;
    options.workers = workers;
    return options;
}

/** Checks the freezing discipline on every callback; counts violations. */
struct DisciplineObserver : SolverObserver
{
    explicit DisciplineObserver(const ParityGame& game) : game(game), frozen(game.vertex_count(), false) {}

    void on_evaluate(Vertex v, Priority level) override
    {
        if (frozen[v]) ++violations;
        if (game.priority(v) != level) ++violations;
    }
    void on_freeze(Vertex v, Priority vertex_priority, Priority level, Player winner) override
    {
        if (frozen[v] || level <= vertex_priority || winner == parity_of(level)) ++violations;
        frozen[v] = true;
        ++freezes;
    }
    void on_thaw(Vertex v, Priority level) override
    {
        if (!frozen[v]) ++violations;
        (void)level;
        frozen[v] = false;
    }
    void on_reset(Vertex v, Priority level) override
    {
        if (frozen[v] || game.priority(v) >= level) ++violations;
    }

    const ParityGame& game;
    std::vector<bool> frozen;
    std::size_t violations = 0;
    std::size_t freezes = 0;
};

/** Mirrors the distraction flags from the callbacks and checks they change only as allowed. */
struct FlagMirror : SolverObserver
{
    explicit FlagMirror(const ParityGame& game) : game(game), z(game.vertex_count()) {}

    void on_distraction(Vertex v, Priority level) override
    {
        // a vertex is added at most once between resets, so additions per level stay within |V_p|
        if (z.contains(v) || game.priority(v) != level) ++violations;
        z.insert(v);
    }
    void on_reset(Vertex v, Priority level) override
    {
        if (game.priority(v) >= level) ++violations;
        z.erase(v);
    }

    const ParityGame& game;
    VertexSet z;
    std::size_t violations = 0;
};

struct DistractionLog : SolverObserver
{
    void on_distraction(Vertex v, Priority) override { added.insert(v); }
    void on_reset(Vertex v, Priority) override { added.erase(v); }
    std::set<Vertex> added;
};

} // namespace

TEST_CASE("winner_of")
{
    const auto game = make_game({2, 5}, {0, 0}, {{0}, {1}});
    CHECK(winner_of(game, 0, VertexSet(2)) == Player::Even);
    CHECK(winner_of(game, 1, VertexSet(2, {1})) == Player::Even);
    CHECK(winner_of(game, 0, VertexSet(2, {0})) == Player::Odd);
    CHECK(winner_of(game, 1, VertexSet(2)) == Player::Odd);
}

TEST_CASE("onestep")
{
    CHECK(onestep(g1(), 0, VertexSet(2)) == OnestepResult{Player::Even, 1});
    // Odd-owned vertex whose single successor has even priority
    const auto odd = make_game({1, 2}, {1, 0}, {{1}, {1}});
    CHECK(onestep(odd, 0, VertexSet(2)) == OnestepResult{Player::Even, std::nullopt});
    // Even-owned vertex whose successors are all currently won by Odd
    const auto even = make_game({0, 1, 3}, {0, 0, 0}, {{1, 2}, {1}, {2}});
    CHECK(onestep(even, 0, VertexSet(3)) == OnestepResult{Player::Odd, std::nullopt});
    CHECK(onestep(even, 0, VertexSet(3, {2})) == OnestepResult{Player::Even, 2});
}

TEST_CASE("solve_basic on the fixtures")
{
    SUBCASE("G1: both Even, the only distraction is v0")
    {
        DistractionLog log;
        auto options = with(SolverMode::Basic);
        options.observer = &log;
        const auto result = solve(g1(), options);
        CHECK(result.solution.winner == WinnerMap{Player::Even, Player::Even});
        CHECK(log.added == std::set<Vertex>{0});
        CHECK(solve_basic(g1()) == WinnerMap{Player::Even, Player::Even});
    }
    SUBCASE("G2: all Even")
    {
        CHECK(solve_basic(g2()) == WinnerMap(8, Player::Even));
    }
    SUBCASE("empty game")
    {
        CHECK(solve_basic(ParityGame()).empty());
        CHECK(solve(ParityGame()).solution == Solution{});
    }
}

TEST_CASE("solve with strategies on the fixtures")
{
    SUBCASE("G1")
    {
        const auto sol = solve(g1()).solution;
        CHECK(sol == Solution{{Player::Even, Player::Even}, {1, 0}});
    }
    SUBCASE("G2")
    {
        const auto game = g2();
        for (auto semantics : {PassSemantics::Snapshot, PassSemantics::InPlace}) {
            const auto sol = solve(game, with(SolverMode::Freezing, semantics)).solution;
            CHECK(sol.winner == WinnerMap(8, Player::Even));
            CHECK(sol.strategy[index_of(game, 3)] == index_of(game, 16));
            CHECK(sol.strategy[index_of(game, 2)] == index_of(game, 1));
            CHECK(sol.strategy[index_of(game, 4)] == index_of(game, 17));
            CHECK_FALSE(sol.strategy[index_of(game, 1)].has_value());
            CHECK(verify(game, sol).ok());
        }
    }
    SUBCASE("single Even vertex with an odd self-loop")
    {
        const auto sol = solve(make_game({1}, {0}, {{0}})).solution;
        CHECK(sol == Solution{{Player::Odd}, {std::nullopt}});
    }
}

TEST_CASE("solver options are validated")
{
    CHECK_THROWS_AS(validate(with(SolverMode::Freezing, PassSemantics::Snapshot, 0)), std::invalid_argument);
    CHECK_THROWS_AS(validate(with(SolverMode::Freezing, PassSemantics::InPlace, 2)), std::invalid_argument);
    CHECK_NOTHROW(validate(with(SolverMode::Basic, PassSemantics::InPlace, 1)));
}

TEST_CASE("run may be called once and requires a sorted game")
{
    const auto [sorted, perm] = sort_by_priority(g2());
    DfiSolver solver(sorted);
    CHECK_NOTHROW(solver.run());
    CHECK_THROWS_AS(solver.run(), std::logic_error);
}

TEST_CASE("a passed deadline stops the solver")
{
    auto options = with(SolverMode::Freezing);
    options.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
    CHECK_THROWS_AS(solve(g2(), options), SolveTimeout);
}

TEST_CASE("all variants agree with Zielonka and produce verified strategies")
{
    for (std::uint64_t seed = 0; seed < 1500; ++seed) {
        const auto game = dfi::test::random_small(seed);
        const auto reference = solve_zielonka(game);
        const auto basic = solve(game, with(SolverMode::Basic)).solution;
        const auto snapshot = solve(game, with(SolverMode::Freezing)).solution;
        const auto in_place = solve(game, with(SolverMode::Freezing, PassSemantics::InPlace)).solution;
        const auto basic_in_place = solve(game, with(SolverMode::Basic, PassSemantics::InPlace)).solution;
        REQUIRE(basic.winner == reference.winner);
        REQUIRE(basic_in_place.winner == reference.winner);
        REQUIRE(snapshot.winner == reference.winner);
        REQUIRE(in_place.winner == reference.winner);
        CHECK(verify(game, snapshot).ok());
        CHECK(verify(game, in_place).ok());
        // strategies exist exactly where the owner wins
        for (Vertex v = 0; v < game.vertex_count(); ++v) {
            CHECK(snapshot.strategy[v].has_value() == (game.owner(v) == snapshot.winner[v]));
            CHECK_FALSE(basic.strategy[v].has_value());
        }
    }
}

TEST_CASE("freezing discipline holds on every instance")
{
    std::size_t freezes = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto game = dfi::test::random_small(seed);
        const auto [sorted, perm] = sort_by_priority(game);
        for (auto semantics : {PassSemantics::Snapshot, PassSemantics::InPlace}) {
            DisciplineObserver observer(sorted);
            auto options = with(SolverMode::Freezing, semantics);
            options.observer = &observer;
            DfiSolver(sorted, options).run();
            CHECK(observer.violations == 0);
            freezes += observer.freezes;
        }
    }
    // the property is not vacuous
    CHECK(freezes > 0);
}

TEST_CASE("distraction flags only grow within an epoch and match the final regions")
{
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto game = dfi::test::random_small(seed);
        const auto [sorted, perm] = sort_by_priority(game);
        for (auto mode : {SolverMode::Basic, SolverMode::Freezing}) {
            for (auto semantics : {PassSemantics::Snapshot, PassSemantics::InPlace}) {
                FlagMirror mirror(sorted);
                auto options = with(mode, semantics);
                options.observer = &mirror;
                const auto result = DfiSolver(sorted, options).run();
                CHECK(mirror.violations == 0);
                for (Vertex v = 0; v < sorted.vertex_count(); ++v)
                    CHECK(winner_of(sorted, v, mirror.z) == result.solution.winner[v]);
            }
        }
    }
}

TEST_CASE("counters and digests are reproducible and independent of the worker count")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        GenParams params;
        params.n = 500 + seed * 37;
        params.max_priority = 2 + seed % 7;
        params.max_outdegree = 4;
        params.seed = seed;
        const auto game = random_game(params);
        std::optional<SolveResult> first;
        for (unsigned workers : {1u, 2u, 3u, 8u}) {
            auto options = with(SolverMode::Freezing, PassSemantics::Snapshot, workers);
            options.min_chunk = 64;
            const auto result = solve(game, options);
            if (!first) {
                first = result;
                continue;
            }
            CHECK(result.solution == first->solution);
            CHECK(result.stats.trace_digest == first->stats.trace_digest);
            CHECK(result.stats.passes == first->stats.passes);
            CHECK(result.stats.distraction_additions == first->stats.distraction_additions);
            CHECK(result.stats.freezes == first->stats.freezes);
        }
    }
}

TEST_CASE("working state size")
{
    CHECK(DfiSolver::nominal_working_state_bits(1000, 6) == 1000 * (1 + 3 + 10));
    GenParams params;
    params.n = 20000;
    params.max_priority = 9;
    const auto game = random_game(params);
    const auto [sorted, perm] = sort_by_priority(game);
    DfiSolver solver(sorted);
    const double bits = static_cast<double>(solver.working_state_bytes()) * 8;
    const double nominal = static_cast<double>(DfiSolver::nominal_working_state_bits(20000, 9));
    CHECK(bits >= nominal / 2);
    CHECK(bits <= nominal * 2);
    CHECK(solver.run().stats.working_state_bytes == solver.working_state_bytes());
}
