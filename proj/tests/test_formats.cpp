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

#include <sstream>

#include "fixtures.hpp"

using namespace dfi;
using dfi::test::g1;
using dfi::test::g2;

namespace {

template <typename Fn>
ParseError parse_error_of(Fn&& fn)
{
    try {
        fn();
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected ParseError");
    return ParseError(ParseError::Kind::Syntax, 0, 0, "");
}

} // namespace

TEST_CASE("parse G1")
{
    const auto game = parse_pgsolver("parity 1;\n0 1 0 0,1;\n1 2 0 0;");
    const auto expected = dfi::test::make_game({1, 2}, {0, 0}, {{0, 1}, {0}});
    CHECK(game == expected);
}

TEST_CASE("parse labels, missing header and CRLF")
{
    const auto game = parse_pgsolver("0 2 1 0 \"loop\";");
    REQUIRE(game.vertex_count() == 1);
    CHECK(game.priority(0) == 2);
    CHECK(game.owner(0) == Player::Odd);
    CHECK(game.has_edge(0, 0));
    CHECK(game.label(0) == std::optional<std::string>("loop"));

    const auto crlf = parse_pgsolver("parity 1;\r\n0 1 0 0,1;\r\n1 2 0 0;\r\n");
    CHECK(crlf == g1());

    const auto escaped = parse_pgsolver("7 0 0 7 \"a \\\"b\\\" \\\\c\";");
    CHECK(escaped.label(0) == std::optional<std::string>("a \"b\" \\c"));
    CHECK(escaped.original_id(0) == 7);
}

TEST_CASE("parse sparse, unordered ids")
{
    const auto game = g2();
    REQUIRE(game.vertex_count() == 8);
    const std::vector<std::uint64_t> order{3, 18, 1, 2, 16, 5, 4, 17};
    for (Vertex v = 0; v < 8; ++v) {
        CHECK(game.original_id(v) == order[v]);
        CHECK(game.priority(v) == order[v]);
    }
    const Vertex v2 = dfi::test::index_of(game, 2);
    const Vertex v1 = dfi::test::index_of(game, 1);
    const Vertex v16 = dfi::test::index_of(game, 16);
    const auto succ = game.successors(v2);
    CHECK(std::vector<Vertex>(succ.begin(), succ.end()) == std::vector<Vertex>{v1, v16});
    CHECK(game.owner(v1) == Player::Odd);
}

TEST_CASE("parse errors")
{
    SUBCASE("dangling edge")
    {
        try {
            parse_pgsolver("0 1 0 5;");
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            CHECK(e.kind() == ValidationError::Kind::DanglingEdge);
            CHECK(e.vertex() == 0);
            CHECK(e.target() == 5);
        }
    }
    SUBCASE("duplicate vertex id")
    {
        const auto e = parse_error_of([] { parse_pgsolver("0 1 0 0;\n0 2 0 0;"); });
        CHECK(e.kind() == ParseError::Kind::DuplicateVertexId);
        CHECK(e.line() == 2);
    }
    SUBCASE("missing semicolon")
    {
        const auto e = parse_error_of([] { parse_pgsolver("0 1 0 0\n1 2 0 0;"); });
        CHECK(e.kind() == ParseError::Kind::Syntax);
        CHECK(e.line() == 2);
    }
    SUBCASE("bad owner bit")
    {
        const auto e = parse_error_of([] { parse_pgsolver("0 1 2 0;"); });
        CHECK(e.kind() == ParseError::Kind::Syntax);
        CHECK(e.line() == 1);
        CHECK(e.column() == 5);
    }
    SUBCASE("unterminated label")
    {
        const auto e = parse_error_of([] { parse_pgsolver("0 1 0 0 \"abc;"); });
        CHECK(e.kind() == ParseError::Kind::Syntax);
    }
    SUBCASE("no successors")
    {
        const auto e = parse_error_of([] { parse_pgsolver("0 1 0 ;"); });
        CHECK(e.kind() == ParseError::Kind::Syntax);
    }
    SUBCASE("duplicate edge")
    {
        CHECK_THROWS_AS(parse_pgsolver("0 1 0 0,0;"), ValidationError);
        std::vector<std::string> warnings;
        const auto game = parse_pgsolver("0 1 0 0,0;", ParseOptions{true}, &warnings);
        CHECK(game.edge_count() == 1);
        CHECK(warnings.size() == 1);
    }
}

TEST_CASE("the empty text is the empty game")
{
    CHECK(parse_pgsolver("").empty());
    CHECK(parse_pgsolver("parity 4;\n").empty());
    CHECK(to_pgsolver(ParityGame()).empty());
}

TEST_CASE("write_solution")
{
    SUBCASE("G1")
    {
        const Solution sol{{Player::Even, Player::Even}, {1, 0}};
        CHECK(to_solution_text(g1(), sol) == "paritysol 1;\n0 0 1;\n1 0 0;\n");
    }
    SUBCASE("empty game writes nothing")
    {
        CHECK(to_solution_text(ParityGame(), Solution{}).empty());
    }
    SUBCASE("single odd self-loop")
    {
        const auto game = parse_pgsolver("0 1 1 0;");
        const Solution sol{{Player::Odd}, {0}};
        CHECK(to_solution_text(game, sol) == "paritysol 0;\n0 1 0;\n");
    }
    SUBCASE("ascending original ids and regions only")
    {
        const auto game = g2();
        std::ostringstream ss;
        write_regions(ss, game, WinnerMap(8, Player::Even));
        CHECK(ss.str() == "paritysol 18;\n1 0;\n2 0;\n3 0;\n4 0;\n5 0;\n16 0;\n17 0;\n18 0;\n");
    }
}

TEST_CASE("parse_solution reads what write_solution writes")
{
    const auto game = g2();
    Solution sol;
    sol.winner.assign(8, Player::Even);
    for (Vertex v = 0; v < 8; ++v) sol.strategy.push_back(game.successors(v).back());
    sol.strategy[dfi::test::index_of(game, 1)] = std::nullopt;
    CHECK(parse_solution(to_solution_text(game, sol), game) == sol);

    const auto missing = parse_error_of([&] { parse_solution("paritysol 18;\n1 0;\n", game); });
    CHECK(missing.kind() == ParseError::Kind::MissingVertex);
    const auto unknown = parse_error_of([&] { parse_solution("paritysol 18;\n99 0;\n", game); });
    CHECK(unknown.kind() == ParseError::Kind::UnknownVertexId);
}

TEST_CASE("round trip is idempotent after one normalization")
{
    const std::string messy = "parity   40 ;\r\n  5 3 1   7 ,5 \"x\"  ;\n7 0 0 5;\n\n";
    const auto first = parse_pgsolver(messy);
    const auto text = to_pgsolver(first);
    CHECK(text == "parity 7;\n5 3 1 7,5 \"x\";\n7 0 0 5;\n");
    CHECK(parse_pgsolver(text) == first);
    CHECK(to_pgsolver(parse_pgsolver(text)) == text);

    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto game = dfi::test::random_small(seed);
        const auto once = to_pgsolver(game);
        const auto reparsed = parse_pgsolver(once);
        CHECK(reparsed == game);
        CHECK(to_pgsolver(reparsed) == once);
    }
}
