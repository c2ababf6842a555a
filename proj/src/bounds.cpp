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

#include "cwsense/bounds.hpp"

#include <algorithm>

#include "cwsense/error.hpp"
#include "cwsense/finitefield.hpp"

namespace cwsense {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is C(n-k+i, i) here
    }
    return r;
}

std::uint64_t smallest_prime_at_least(std::uint64_t n) {
    std::uint64_t q = std::max<std::uint64_t>(n, 2);
    while (!is_prime(q)) ++q;
    return q;
}

std::uint64_t smallest_prime_power_at_least(std::uint64_t n) {
    std::uint64_t q = std::max<std::uint64_t>(n, 2);
    while (!prime_power(q)) ++q;
    return q;
}

namespace {

void check_domain(const char* what, std::uint32_t n, std::uint32_t d, std::uint32_t w) {
    if (w == 0 || w > n)
        throw DomainError(std::string(what) + ": weight must satisfy 0 < w <= n (n=" + std::to_string(n) +
                          ", w=" + std::to_string(w) + ")");
    if (d == 0) throw DomainError(std::string(what) + ": distance must be positive");
}

void check_dims(const char* what, std::uint32_t n, std::uint32_t k, std::uint32_t t) {
    if (k < 2) throw DomainError(std::string(what) + ": sparsity order k must be >= 2");
    if (t < 1) throw DomainError(std::string(what) + ": t must be >= 1");
    if (static_cast<std::uint64_t>(k) * t > n)
        throw DomainError(std::string(what) + ": need n >= k*t (n=" + std::to_string(n) + ", k*t=" +
                          std::to_string(static_cast<std::uint64_t>(k) * t) + ")");
}

BigInt pow_big(std::uint64_t base, std::uint64_t e) {
    BigInt r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

BoundReport gilbert_bound(std::uint32_t n, std::uint32_t distance, std::uint32_t w) {
    check_domain("gilbert_bound", n, distance, w);
    const std::uint32_t half = (distance + 1) / 2;
    BoundReport r;
    r.name = "gilbert";
    r.n = n;
    r.distance = 2 * half;
    r.w = w;
    r.numerator = binomial(n, w);
    r.denominator = 0;
    for (std::uint32_t i = 0; i < half; ++i) r.denominator += binomial(w, i) * binomial(n - w, i);
    r.value = r.numerator / r.denominator;
    return r;
}

BoundReport graham_sloane_bound(std::uint32_t n, std::uint32_t distance, std::uint32_t w) {
    check_domain("graham_sloane_bound", n, distance, w);
    const std::uint32_t half = (distance + 1) / 2;
    const std::uint64_t q = smallest_prime_at_least(n);
    BoundReport r;
    r.name = "graham-sloane";
    r.n = n;
    r.distance = 2 * half;
    r.w = w;
    r.q = q;
    r.numerator = binomial(n, w);
    r.denominator = pow_big(q, half - 1);
    r.value = r.numerator / r.denominator;
    return r;
}

BigInt ternary_ball_size(std::uint32_t n, std::uint32_t w, std::uint32_t radius) {
    BigInt s = 0;
    for (std::uint32_t i = 0; i <= radius; ++i) {
        const std::uint32_t jmax = std::min(i / 2, n - w);
        for (std::uint32_t j = 0; j <= jmax; ++j) {
            if (j > w || i - 2 * j > w - j) continue;  // a binomial factor vanishes
            s += binomial(w, j) * binomial(n - w, j) * binomial(w - j, i - 2 * j) * pow_big(2, j);
        }
    }
    return s;
}

BoundReport ternary_gilbert_bound(std::uint32_t n, std::uint32_t d, std::uint32_t w) {
    check_domain("ternary_gilbert_bound", n, d, w);
    BoundReport r;
    r.name = "ternary-gilbert";
    r.n = n;
    r.distance = d;
    r.w = w;
    r.numerator = binomial(n, w) * pow_big(2, w);
    r.denominator = ternary_ball_size(n, w, d - 1);
    r.value = r.numerator / r.denominator;
    return r;
}

BigInt dimension_binary_gilbert(std::uint32_t n, std::uint32_t k, std::uint32_t t) {
    check_dims("dimension_binary_gilbert", n, k, t);
    const std::uint32_t w = k * t;
    BigInt denom = 0;
    for (std::uint32_t i = 0; i + 1 <= (k - 1) * t; ++i) denom += binomial(w, i) * binomial(n - w, i);
    return binomial(n, w) / denom;
}

BigInt dimension_binary_gs(std::uint32_t n, std::uint32_t k, std::uint32_t t) {
    check_dims("dimension_binary_gs", n, k, t);
    return binomial(n, k * t) / pow_big(n, (k - 1) * t - 1);
}

BigInt dimension_binary_gs_prime(std::uint32_t n, std::uint32_t k, std::uint32_t t) {
    check_dims("dimension_binary_gs_prime", n, k, t);
    return graham_sloane_bound(n, 2 * (k - 1) * t, k * t).value;
}

BigInt dimension_ternary_gilbert(std::uint32_t n, std::uint32_t k, std::uint32_t t) {
    check_dims("dimension_ternary_gilbert", n, k, t);
    const std::uint32_t w = k * t;
    return binomial(n, w) * pow_big(2, w) / ternary_ball_size(n, w, 2 * (k - 1) * t - 1);
}

}  // namespace cwsense
