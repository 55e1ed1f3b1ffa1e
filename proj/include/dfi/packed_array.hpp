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

#ifndef DFI_PACKED_ARRAY_HPP
#define DFI_PACKED_ARRAY_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace dfi {

/** Number of bits needed to represent <count> distinct values (at least 1). */
constexpr unsigned bits_for(std::uint64_t count) noexcept
{
    return count <= 2 ? 1u : static_cast<unsigned>(std::bit_width(count - 1));
}

/**
 * Fixed-width unsigned integers packed into 64-bit words.
 *
 * Entries 64k..64k+63 occupy exactly words width*k..width*k+width-1, so two
 * threads writing disjoint ranges whose bounds are multiples of 64 never
 * touch the same word.
 */
class PackedArray
{
public:
    PackedArray() = default;
    PackedArray(std::size_t size, unsigned width, std::uint64_t fill = 0)
        : size_(size), width_(width), mask_(width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1),
          words_(((size + 63) / 64) * width, 0)
    {
        assert(width >= 1 && width <= 64);
        if (fill != 0)
            for (std::size_t i = 0; i < size; ++i) set(i, fill);
    }

    std::size_t size() const noexcept { return size_; }
    unsigned width() const noexcept { return width_; }

    /** Bytes held by the backing store. */
    std::size_t allocated_bytes() const noexcept { return words_.capacity() * sizeof(std::uint64_t); }

    std::uint64_t get(std::size_t i) const noexcept
    {
        const std::size_t bit = i * width_;
        const std::size_t w = bit >> 6;
        const unsigned off = bit & 63;
        std::uint64_t v = words_[w] >> off;
        if (off + width_ > 64) v |= words_[w + 1] << (64 - off);
        return v & mask_;
    }

    void set(std::size_t i, std::uint64_t value) noexcept
    {
        const std::size_t bit = i * width_;
        const std::size_t w = bit >> 6;
        const unsigned off = bit & 63;
        value &= mask_;
        words_[w] = (words_[w] & ~(mask_ << off)) | (value << off);
        if (off + width_ > 64) {
            const unsigned spill = off + width_ - 64;
            const std::uint64_t hi_mask = (std::uint64_t{1} << spill) - 1;
            words_[w + 1] = (words_[w + 1] & ~hi_mask) | (value >> (64 - off));
        }
    }

private:
    std::size_t size_ = 0;
    unsigned width_ = 1;
    std::uint64_t mask_ = 1;
    std::vector<std::uint64_t> words_;
};

} // namespace dfi

#endif
