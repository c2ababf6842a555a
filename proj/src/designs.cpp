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

#include "cwsense/designs.hpp"

#include <algorithm>
#include <set>

#include "cwsense/bounds.hpp"
#include "cwsense/error.hpp"

namespace cwsense {

SteinerTripleSystem::SteinerTripleSystem(std::uint32_t n, std::vector<Triple> blocks, StsConstruction construction)
    : n_(n), blocks_(std::move(blocks)), construction_(construction) {
    if (n_ < 3) throw ValidationError("a triple system needs at least 3 points");
    const std::uint64_t expected = static_cast<std::uint64_t>(n_) * (n_ - 1) / 6;
    if (blocks_.size() != expected || static_cast<std::uint64_t>(n_) * (n_ - 1) % 6 != 0)
        throw ValidationError("STS(" + std::to_string(n_) + ") needs " + std::to_string(expected) + " blocks, got " +
                              std::to_string(blocks_.size()));
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(n_) * n_, 0);
    for (auto& b : blocks_) {
        std::sort(b.begin(), b.end());
        if (b[2] >= n_ || b[0] == b[1] || b[1] == b[2]) throw ValidationError("malformed block");
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                auto& cell = seen[static_cast<std::size_t>(b[i]) * n_ + b[j]];
                if (cell) throw ValidationError("pair {" + std::to_string(b[i]) + "," + std::to_string(b[j]) +
                                                "} covered more than once");
                cell = 1;
            }
    }
    // Block count and no repeats force every pair to be covered.
}

SteinerTripleSystem sts_bose(std::uint32_t n) {
    if (n < 3 || n % 6 != 3) throw DomainError("Bose construction needs n = 6s + 3");
    const std::uint32_t s = (n - 3) / 6;
    const std::uint32_t m = 2 * s + 1;
    // Idempotent commutative quasigroup x o y = (x + y) / 2 over Z_m; s + 1 inverts 2.
    auto circ = [&](std::uint32_t x, std::uint32_t y) { return (x + y) * (s + 1) % m; };
    auto pt = [&](std::uint32_t x, std::uint32_t i) { return x + i * m; };
    std::vector<Triple> blocks;
    for (std::uint32_t x = 0; x < m; ++x) blocks.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
    for (std::uint32_t x = 0; x < m; ++x)
        for (std::uint32_t y = x + 1; y < m; ++y)
            for (std::uint32_t i = 0; i < 3; ++i) blocks.push_back({pt(x, i), pt(y, i), pt(circ(x, y), (i + 1) % 3)});
    return SteinerTripleSystem(n, std::move(blocks), StsConstruction::bose);
}

SteinerTripleSystem sts_skolem(std::uint32_t n) {
    if (n < 7 || n % 6 != 1) throw DomainError("Skolem construction needs n = 6s + 1 with s >= 1");
    const std::uint32_t s = (n - 1) / 6;
    const std::uint32_t m = 2 * s;
    // Half-idempotent commutative quasigroup on Z_{2s}: relabel x + y by 2k -> k, 2k+1 -> s+k.
    auto circ = [&](std::uint32_t x, std::uint32_t y) {
        const std::uint32_t z = (x + y) % m;
        return z % 2 == 0 ? z / 2 : s + z / 2;
    };
    auto pt = [&](std::uint32_t x, std::uint32_t i) { return x + i * m; };
    const std::uint32_t inf = 3 * m;
    std::vector<Triple> blocks;
    for (std::uint32_t x = 0; x < s; ++x) blocks.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
    for (std::uint32_t x = 0; x < s; ++x)
        for (std::uint32_t i = 0; i < 3; ++i) blocks.push_back({inf, pt(x + s, i), pt(x, (i + 1) % 3)});
    for (std::uint32_t x = 0; x < m; ++x)
        for (std::uint32_t y = x + 1; y < m; ++y)
            for (std::uint32_t i = 0; i < 3; ++i) blocks.push_back({pt(x, i), pt(y, i), pt(circ(x, y), (i + 1) % 3)});
    return SteinerTripleSystem(n, std::move(blocks), StsConstruction::skolem);
}

SteinerTripleSystem steiner_triple_system(std::uint32_t n) {
    if (n % 6 == 3) return sts_bose(n);
    if (n % 6 == 1 && n >= 7) return sts_skolem(n);
    throw DomainError("no Steiner triple system on " + std::to_string(n) + " points (need n = 1 or 3 mod 6)");
}

BinaryCWCode steiner_to_code(const SteinerTripleSystem& sts) {
    std::vector<Support> words;
    words.reserve(sts.blocks().size());
    for (const auto& b : sts.blocks()) words.push_back({b[0], b[1], b[2]});
    return BinaryCWCode(sts.points(), 3, std::move(words), CodeSource::steiner);
}

SteinerTripleSystem sts_from_code(const BinaryCWCode& code) {
    if (code.weight() != 3) throw ValidationError("a triple system needs weight-3 blocks");
    std::vector<Triple> blocks;
    for (const auto& s : code.words()) blocks.push_back({s[0], s[1], s[2]});
    return SteinerTripleSystem(code.length(), std::move(blocks), StsConstruction::ingested);
}

bool is_steiner_system(const BinaryCWCode& code, std::uint32_t t) {
    if (t == 0 || t > code.weight()) return false;
    if (binomial(code.length(), t) != binomial(code.weight(), t) * code.size()) return false;
    std::set<std::vector<std::uint32_t>> covered;
    for (const auto& s : code.words()) {
        std::vector<std::uint32_t> pick(t);
        for (std::uint32_t i = 0; i < t; ++i) pick[i] = i;
        while (true) {
            std::vector<std::uint32_t> sub(t);
            for (std::uint32_t i = 0; i < t; ++i) sub[i] = s[pick[i]];
            if (!covered.insert(std::move(sub)).second) return false;
            std::size_t i = t;
            while (i-- > 0 && pick[i] == code.weight() - t + i) {
            }
            if (i == static_cast<std::size_t>(-1)) break;
            ++pick[i];
            for (std::size_t j = i + 1; j < t; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return true;  // counts match and no t-subset repeats
}

BinaryCWCode affine_plane_code(std::uint32_t q) {
    const auto pp = prime_power(q);
    if (!pp) throw DomainError("affine plane order " + std::to_string(q) + " is not a prime power");
    if (q > 16) throw DomainError("affine plane order capped at 16");
    const FiniteField f = make_field(pp->first, pp->second);
    std::vector<Support> lines;
    lines.reserve(static_cast<std::size_t>(q) * q + q);
    for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b) {
            Support line;
            for (std::uint32_t x = 0; x < q; ++x) line.push_back(x * q + f.add(f.mul(a, x), b));
            lines.push_back(std::move(line));
        }
    for (std::uint32_t c = 0; c < q; ++c) {
        Support line;
        for (std::uint32_t y = 0; y < q; ++y) line.push_back(c * q + y);
        lines.push_back(std::move(line));
    }
    return BinaryCWCode(q * q, q, std::move(lines), CodeSource::affine);
}

}  // namespace cwsense
