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

#ifndef DFI_ZIELONKA_HPP
#define DFI_ZIELONKA_HPP

#include <chrono>
#include <optional>
#include <stdexcept>

#include <dfi/game.hpp>

namespace dfi {

class RecursionDepthExceeded : public std::runtime_error
{
public:
    explicit RecursionDepthExceeded(std::size_t limit);
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t limit_;
};

struct ZielonkaOptions
{
    /** Maximum recursion depth; defaults to n + d + 8. */
    std::optional<std::size_t> depth_limit;
    /** Checked on every recursive call; throws SolveTimeout when passed. */
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

/**
 * Zielonka's recursive algorithm with attractor strategies. Meant as a
 * reference for testing, not for speed: every call rescans its subgame.
 */
Solution solve_zielonka(const ParityGame& game, const ZielonkaOptions& options = {});

} // namespace dfi

#endif
