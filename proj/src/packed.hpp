/**************************************************************************
 * Copyright 2026 The cwsense Authors
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
 **************************************************************************/

#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace cwsense::detail {

// Fixed-width bitsets stored back to back; used for intersection counts in pair scans.
class PackedSets {
public:
    explicit PackedSets(std::uint32_t universe) : stride_((universe + 63) / 64) {
        if (stride_ == 0) stride_ = 1;
    }

    std::size_t size() const noexcept { return stride_ == 0 ? 0 : bits_.size() / stride_; }

    template <class Range>
    void push(const Range& positions) {
        const std::size_t base = bits_.size();
        bits_.resize(base + stride_, 0);
        for (auto p : positions) bits_[base + p / 64] |= std::uint64_t{1} << (p % 64);
    }

    void push_empty() { bits_.resize(bits_.size() + stride_, 0); }

    void set(std::size_t i, std::uint32_t pos) { bits_[i * stride_ + pos / 64] |= std::uint64_t{1} << (pos % 64); }

    void pop() { bits_.resize(bits_.size() - stride_); }

    std::uint32_t intersect(std::size_t i, std::size_t j) const noexcept {
        return intersect(*this, i, *this, j);
    }

    static std::uint32_t intersect(const PackedSets& a, std::size_t i, const PackedSets& b, std::size_t j) noexcept {
        const std::uint64_t* x = a.bits_.data() + i * a.stride_;
        const std::uint64_t* y = b.bits_.data() + j * b.stride_;
        std::uint32_t c = 0;
        for (std::size_t k = 0; k < a.stride_; ++k) c += static_cast<std::uint32_t>(std::popcount(x[k] & y[k]));
        return c;
    }

private:
    std::size_t stride_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace cwsense::detail
