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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>

namespace cwsense {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(std::uint64_t n, std::uint64_t k);

std::uint64_t smallest_prime_at_least(std::uint64_t n);
std::uint64_t smallest_prime_power_at_least(std::uint64_t n);

/*
  Lower bound on the largest constant-weight code, value = floor(numerator / denominator),
  evaluated in exact integers. `distance` is the full minimum distance; for the binary
  bounds an odd distance is rounded up to the next even value, since binary
  constant-weight codes only realise even distances.
*/
struct BoundReport {
    std::string name;
    std::uint32_t n = 0;
    std::uint32_t distance = 0;
    std::uint32_t w = 0;
    std::optional<std::uint64_t> q;  // modulus prime for graham-sloane
    BigInt numerator;
    BigInt denominator;
    BigInt value;
};

/// floor( C(n,w) / sum_{i<d} C(w,i) C(n-w,i) ) for A(n, 2d, w).
BoundReport gilbert_bound(std::uint32_t n, std::uint32_t distance, std::uint32_t w);

/// floor( C(n,w) / q^(d-1) ) for A(n, 2d, w), q the smallest prime >= n.
BoundReport graham_sloane_bound(std::uint32_t n, std::uint32_t distance, std::uint32_t w);

/// Number of weight-w ternary words within distance `radius` of a fixed weight-w word:
/// sum_{i<=radius} sum_{j<=min(i/2, n-w)} C(w,j) C(n-w,j) C(w-j, i-2j) 2^j.
BigInt ternary_ball_size(std::uint32_t n, std::uint32_t w, std::uint32_t radius);

/// floor( C(n,w) 2^w / S_{d-1} ) for A_3(n, d, w).
BoundReport ternary_gilbert_bound(std::uint32_t n, std::uint32_t d, std::uint32_t w);

// Achievable column counts for n rows at sparsity order k (coherence <= 1/k), any t >= 1.

/// Gilbert bound of an (n, 2(k-1)t, kt) code.
BigInt dimension_binary_gilbert(std::uint32_t n, std::uint32_t k, std::uint32_t t);

/// floor( C(n, kt) / n^((k-1)t - 1) ), the closed form with n in place of the modulus prime.
BigInt dimension_binary_gs(std::uint32_t n, std::uint32_t k, std::uint32_t t);

/// graham_sloane_bound(n, 2(k-1)t, kt): same quantity with the smallest prime q >= n.
BigInt dimension_binary_gs_prime(std::uint32_t n, std::uint32_t k, std::uint32_t t);

/// Ternary Gilbert bound of an (n, 2(k-1)t, kt) code.
BigInt dimension_ternary_gilbert(std::uint32_t n, std::uint32_t k, std::uint32_t t);

}  // namespace cwsense
