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

#ifndef DFI_VERTEX_SET_HPP
#define DFI_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include <dfi/player.hpp>

namespace dfi {

/**
 * A subset of the vertices of one game, stored as a bitset over [0, n).
 * Binary operations require both operands to have the same universe.
 */
class VertexSet
{
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe, bool full = false)
        : universe_(universe), words_((universe + 63) / 64, full ? ~std::uint64_t{0} : 0)
    {
        trim();
    }
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe)
    {
        for (Vertex v : members) insert(v);
    }

    std::size_t universe() const noexcept { return universe_; }
    std::size_t allocated_bytes() const noexcept { return words_.capacity() * sizeof(std::uint64_t); }

    bool contains(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    void set(Vertex v, bool value) { value ? insert(v) : erase(v); }

    std::size_t size() const noexcept
    {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const noexcept
    {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    std::vector<Vertex> members() const
    {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < universe_; ++v)
            if (contains(v)) out.push_back(v);
        return out;
    }

    VertexSet& operator|=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    /** Set difference. */
    VertexSet& operator-=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    /** Complement with respect to the universe. */
    friend VertexSet operator~(VertexSet a)
    {
        for (auto& w : a.words_) w = ~w;
        a.trim();
        return a;
    }

    bool is_subset_of(const VertexSet& o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const VertexSet&) const = default;

private:
    void trim()
    {
        if (universe_ % 64 != 0 && !words_.empty()) {
            words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
        }
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace dfi

#endif
