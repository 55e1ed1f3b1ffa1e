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

#ifndef DFI_FORMATS_HPP
#define DFI_FORMATS_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <dfi/game.hpp>

namespace dfi {

/**
 * Syntax problems and duplicate vertex records. Structural problems
 * (sinks, dangling or duplicate edges) are reported as ValidationError.
 */
class ParseError : public std::runtime_error
{
public:
    enum class Kind { Syntax, DuplicateVertexId, UnknownVertexId, MissingVertex };

    ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message);

    Kind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    Kind kind_;
    std::size_t line_;
    std::size_t column_;
};

struct ParseOptions
{
    /** Drop repeated successors instead of rejecting them. */
    bool dedup_edges = false;
};

/**
 * Read a game in PGSolver format:
 *
 *     parity <max-id>;
 *     <id> <priority> <owner> <succ>(,<succ>)* ("<label>")?;
 *
 * The header is optional and advisory. Identifiers may be sparse and
 * unordered; vertices get dense indices in record order. The result is
 * validated. Duplicate successors found while <options.dedup_edges> is set
 * are appended to <warnings> (when given) and dropped.
 */
ParityGame parse_pgsolver(std::string_view text, const ParseOptions& options = {},
                          std::vector<std::string>* warnings = nullptr);
ParityGame parse_pgsolver(std::istream& in, const ParseOptions& options = {},
                          std::vector<std::string>* warnings = nullptr);

/** Write a game in PGSolver format, in vertex order, using original ids. */
void write_pgsolver(std::ostream& out, const ParityGame& game);
std::string to_pgsolver(const ParityGame& game);

/**
 * Write a solution as
 *
 *     paritysol <max-id>;
 *     <id> <winner>( <strategy-id>)?;
 *
 * in ascending original id order. The empty game produces no output.
 */
void write_solution(std::ostream& out, const ParityGame& game, const Solution& sol);
std::string to_solution_text(const ParityGame& game, const Solution& sol);

/** Regions only: no strategy fields are written. */
void write_regions(std::ostream& out, const ParityGame& game, const WinnerMap& winner);

/**
 * Read a solution for <game>. Records refer to original ids; every vertex
 * of the game must have a record.
 */
Solution parse_solution(std::string_view text, const ParityGame& game);
Solution parse_solution(std::istream& in, const ParityGame& game);

} // namespace dfi

#endif
