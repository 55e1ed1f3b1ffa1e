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

#ifndef DFI_PLAYER_HPP
#define DFI_PLAYER_HPP

#include <cstdint>
#include <limits>
#include <string_view>

namespace dfi {

using Vertex = std::uint32_t;
using Priority = std::uint32_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/**
 * The two players. The integer encoding matches parity arithmetic:
 * Even owns even priorities (0), Odd owns odd priorities (1).
 */
enum class Player : std::uint8_t { Even = 0, Odd = 1 };

constexpr Player opponent(Player a) noexcept
{
    return a == Player::Even ? Player::Odd : Player::Even;
}

/** The player favoured by a priority. */
constexpr Player parity_of(Priority p) noexcept
{
    return static_cast<Player>(p & 1u);
}

constexpr int to_int(Player a) noexcept { return static_cast<int>(a); }

constexpr std::string_view to_string(Player a) noexcept
{
    return a == Player::Even ? "Even" : "Odd";
}

} // namespace dfi

#endif
