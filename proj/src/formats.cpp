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

#include <dfi/formats.hpp>

#include <algorithm>
#include <cctype>
#include <istream>
#include <iterator>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace dfi {

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      kind_(kind), line_(line), column_(column)
{
}

namespace {

/**
 * Character cursor with 1-based line/column positions. Treats "\r\n" the
 * same as "\n".
 */
class Cursor
{
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

    char get()
    {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_space()
    {
        while (!at_end()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
                get();
            } else {
                break;
            }
        }
    }

    [[noreturn]] void fail(const std::string& message) const
    {
        throw ParseError(ParseError::Kind::Syntax, line_, column_, message);
    }

    std::uint64_t number(const char* what)
    {
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            fail(std::string("expected ") + what);
        }
        std::uint64_t value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            const auto digit = static_cast<std::uint64_t>(get() - '0');
            if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
                fail(std::string(what) + " out of range");
            }
            value = value * 10 + digit;
        }
        return value;
    }

    void expect(char c)
    {
        skip_space();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        get();
    }

    bool accept(char c)
    {
        skip_space();
        if (peek() != c) return false;
        get();
        return true;
    }

    /** Accept <word> when it is the next identifier. */
    bool accept_word(std::string_view word)
    {
        skip_space();
        if (text_.substr(pos_, word.size()) != word) return false;
        const std::size_t after = pos_ + word.size();
        if (after < text_.size() && std::isalnum(static_cast<unsigned char>(text_[after]))) return false;
        for (std::size_t i = 0; i < word.size(); ++i) get();
        return true;
    }

    /** A double-quoted string; backslash escapes the next character. */
    std::string quoted()
    {
        expect('"');
        std::string s;
        while (true) {
            if (at_end()) fail("unterminated label");
            char c = get();
            if (c == '"') break;
            if (c == '\\') {
                if (at_end()) fail("unterminated label");
                c = get();
            }
            s.push_back(c);
        }
        return s;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

struct Record
{
    std::uint64_t id;
    std::uint64_t priority;
    std::uint64_t owner;
    std::vector<std::uint64_t> succ;
    std::optional<std::string> label;
    std::size_t line;
    std::size_t column;
};

std::string read_all(std::istream& in)
{
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_label(std::ostream& out, const std::string& label)
{
    out << '"';
    for (char c : label) {
        if (c == '"' || c == '\\') out << '\\';
        out << c;
    }
    out << '"';
}

std::vector<Vertex> by_original_id(const ParityGame& game)
{
    std::vector<Vertex> order(game.vertex_count());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::sort(order.begin(), order.end(),
              [&](Vertex a, Vertex b) { return game.original_id(a) < game.original_id(b); });
    return order;
}

std::uint64_t max_original_id(const ParityGame& game)
{
    std::uint64_t m = 0;
    for (Vertex v = 0; v < game.vertex_count(); ++v) m = std::max(m, game.original_id(v));
    return m;
}

} // namespace

ParityGame parse_pgsolver(std::string_view text, const ParseOptions& options, std::vector<std::string>* warnings)
{
    Cursor cur(text);
    std::vector<Record> records;

    cur.skip_space();
    if (cur.accept_word("parity")) {
        cur.number("max-id");
        cur.expect(';');
    }

    while (true) {
        cur.skip_space();
        if (cur.at_end()) break;
        Record r;
        r.line = cur.line();
        r.column = cur.column();
        r.id = cur.number("vertex id");
        r.priority = cur.number("priority");
        if (r.priority > std::numeric_limits<Priority>::max()) cur.fail("priority out of range");
        cur.skip_space();
        const std::size_t owner_line = cur.line();
        const std::size_t owner_column = cur.column();
        r.owner = cur.number("owner");
        if (r.owner > 1) throw ParseError(ParseError::Kind::Syntax, owner_line, owner_column, "owner must be 0 or 1");
        r.succ.push_back(cur.number("successor id"));
        while (cur.accept(',')) r.succ.push_back(cur.number("successor id"));
        cur.skip_space();
        if (cur.peek() == '"') r.label = cur.quoted();
        cur.expect(';');
        records.push_back(std::move(r));
    }

    std::unordered_map<std::uint64_t, Vertex> index;
    index.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        if (!index.emplace(r.id, static_cast<Vertex>(i)).second) {
            throw ParseError(ParseError::Kind::DuplicateVertexId, r.line, r.column,
                             "duplicate vertex id " + std::to_string(r.id));
        }
    }

    const std::size_t n = records.size();
    std::vector<Priority> priority(n);
    std::vector<Player> owner(n);
    std::vector<std::vector<Vertex>> succ(n);
    std::vector<std::uint64_t> ids(n);
    std::vector<std::optional<std::string>> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto& r = records[i];
        priority[i] = static_cast<Priority>(r.priority);
        owner[i] = static_cast<Player>(r.owner);
        ids[i] = r.id;
        labels[i] = std::move(r.label);
        std::unordered_set<Vertex> seen;
        for (std::uint64_t t : r.succ) {
            auto it = index.find(t);
            if (it == index.end()) throw ValidationError(ValidationError::Kind::DanglingEdge, r.id, t);
            if (options.dedup_edges && !seen.insert(it->second).second) {
                if (warnings) {
                    warnings->push_back("dropped duplicate edge " + std::to_string(r.id) + " -> " + std::to_string(t));
                }
                continue;
            }
            succ[i].push_back(it->second);
        }
    }

    ParityGame game(std::move(priority), std::move(owner), succ, std::move(ids), std::move(labels));
    validate(game);
    return game;
}

ParityGame parse_pgsolver(std::istream& in, const ParseOptions& options, std::vector<std::string>* warnings)
{
    const std::string text = read_all(in);
    return parse_pgsolver(std::string_view(text), options, warnings);
}

void write_pgsolver(std::ostream& out, const ParityGame& game)
{
    const std::size_t n = game.vertex_count();
    if (n == 0) return;
    out << "parity " << max_original_id(game) << ";\n";
    for (Vertex v = 0; v < n; ++v) {
        out << game.original_id(v) << ' ' << game.priority(v) << ' ' << to_int(game.owner(v)) << ' ';
        bool first = true;
        for (Vertex u : game.successors(v)) {
            if (!first) out << ',';
            out << game.original_id(u);
            first = false;
        }
        if (game.label(v)) {
            out << ' ';
            write_label(out, *game.label(v));
        }
        out << ";\n";
    }
}

std::string to_pgsolver(const ParityGame& game)
{
    std::ostringstream ss;
    write_pgsolver(ss, game);
    return ss.str();
}

void write_solution(std::ostream& out, const ParityGame& game, const Solution& sol)
{
    if (game.empty()) return;
    out << "paritysol " << max_original_id(game) << ";\n";
    for (Vertex v : by_original_id(game)) {
        out << game.original_id(v) << ' ' << to_int(sol.winner[v]);
        if (v < sol.strategy.size() && sol.strategy[v]) out << ' ' << game.original_id(*sol.strategy[v]);
        out << ";\n";
    }
}

std::string to_solution_text(const ParityGame& game, const Solution& sol)
{
    std::ostringstream ss;
    write_solution(ss, game, sol);
    return ss.str();
}

void write_regions(std::ostream& out, const ParityGame& game, const WinnerMap& winner)
{
    write_solution(out, game, Solution{winner, {}});
}

Solution parse_solution(std::string_view text, const ParityGame& game)
{
    const std::size_t n = game.vertex_count();
    std::unordered_map<std::uint64_t, Vertex> index;
    index.reserve(n);
    for (Vertex v = 0; v < n; ++v) index.emplace(game.original_id(v), v);

    Cursor cur(text);
    cur.skip_space();
    if (cur.accept_word("paritysol")) {
        cur.number("max-id");
        cur.expect(';');
    }

    Solution sol;
    sol.winner.assign(n, Player::Even);
    sol.strategy.assign(n, std::nullopt);
    std::vector<bool> seen(n, false);

    auto lookup = [&](std::uint64_t id, std::size_t line, std::size_t column) {
        auto it = index.find(id);
        if (it == index.end()) {
            throw ParseError(ParseError::Kind::UnknownVertexId, line, column,
                             "unknown vertex id " + std::to_string(id));
        }
        return it->second;
    };

    while (true) {
        cur.skip_space();
        if (cur.at_end()) break;
        const std::size_t line = cur.line(), column = cur.column();
        const Vertex v = lookup(cur.number("vertex id"), line, column);
        if (seen[v]) {
            throw ParseError(ParseError::Kind::DuplicateVertexId, line, column,
                             "duplicate record for vertex " + std::to_string(game.original_id(v)));
        }
        seen[v] = true;
        const auto w = cur.number("winner");
        if (w > 1) cur.fail("winner must be 0 or 1");
        sol.winner[v] = static_cast<Player>(w);
        cur.skip_space();
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            const std::size_t sl = cur.line(), sc = cur.column();
            sol.strategy[v] = lookup(cur.number("strategy id"), sl, sc);
        }
        cur.expect(';');
    }

    for (Vertex v = 0; v < n; ++v) {
        if (!seen[v]) {
            throw ParseError(ParseError::Kind::MissingVertex, cur.line(), cur.column(),
                             "no record for vertex " + std::to_string(game.original_id(v)));
        }
    }
    return sol;
}

Solution parse_solution(std::istream& in, const ParityGame& game)
{
    const std::string text = read_all(in);
    return parse_solution(std::string_view(text), game);
}

} // namespace dfi
