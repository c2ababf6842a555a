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

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>

namespace cwsense {

/*
  SplitMix64 (Steele, Lea, Flood 2014).

  Seed -> output contract, stable across versions:

    next():   state += 0x9E3779B97F4A7C15
              z = state
              z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
              z = (z ^ (z >> 27)) * 0x94D049BB133111EB
              return z ^ (z >> 31)

    split(key) returns a generator whose initial state is
              mix(state ^ mix(key + 0x9E3779B97F4A7C15))
    where mix() is the output function above applied to its argument.
    The parent is not advanced, so streams derived from (seed, a, b, ...)
    do not depend on call order.

  Everything random in the library (sign flips, sparse signals) is drawn
  through this class.
*/
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    static constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ULL;

    explicit constexpr SplitMix64(std::uint64_t seed = 0) noexcept : state_(seed) {}

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    constexpr std::uint64_t next() noexcept {
        state_ += golden;
        return mix(state_);
    }

    constexpr std::uint64_t operator()() noexcept { return next(); }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }

    constexpr SplitMix64 split(std::uint64_t key) const noexcept {
        return SplitMix64(mix(state_ ^ mix(key + golden)));
    }

    constexpr SplitMix64 split(std::initializer_list<std::uint64_t> keys) const noexcept {
        SplitMix64 g = *this;
        for (auto k : keys) g = g.split(k);
        return g;
    }

    /// Uniform integer in [0, bound), bound > 0. Rejection sampling, no modulo bias.
    constexpr std::uint64_t uniform_below(std::uint64_t bound) noexcept {
        const std::uint64_t limit = max() - max() % bound;
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return x % bound;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    constexpr double uniform01() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// +1 or -1 from the top bit of the next draw.
    constexpr int sign() noexcept { return (next() >> 63) != 0 ? -1 : 1; }

    /// Standard normal deviate, Box-Muller (cosine branch only).
    double normal() noexcept {
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::uint64_t state_;
};

}  // namespace cwsense
