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

#include "cwsense/codes.hpp"

#include <algorithm>
#include <map>

#include "cwsense/bounds.hpp"
#include "cwsense/error.hpp"
#include "packed.hpp"

namespace cwsense {

std::string_view to_string(CodeSource s) {
    switch (s) {
        case CodeSource::greedy: return "greedy";
        case CodeSource::graham_sloane: return "graham-sloane";
        case CodeSource::steiner: return "steiner";
        case CodeSource::affine: return "affine";
        case CodeSource::subspace: return "subspace";
        case CodeSource::ingested: return "ingested";
    }
    return "unknown";
}

CodeSource code_source_from_string(std::string_view s) {
    for (auto c : {CodeSource::greedy, CodeSource::graham_sloane, CodeSource::steiner, CodeSource::affine,
                   CodeSource::subspace, CodeSource::ingested})
        if (to_string(c) == s) return c;
    throw DomainError("unknown code source '" + std::string(s) + "'");
}

namespace {

void check_word(std::uint32_t n, std::uint32_t w, const Support& s, std::size_t index) {
    if (s.size() != w)
        throw ValidationError("codeword " + std::to_string(index) + " has weight " + std::to_string(s.size()) +
                              ", expected " + std::to_string(w));
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= n)
            throw ValidationError("codeword " + std::to_string(index) + " has position " + std::to_string(s[i]) +
                                  " outside length " + std::to_string(n));
        if (i > 0 && s[i] <= s[i - 1])
            throw ValidationError("codeword " + std::to_string(index) + " has repeated or unsorted positions");
    }
}

void check_word(std::uint32_t n, std::uint32_t w, const SignedWord& s, std::size_t index) {
    if (s.size() != w)
        throw ValidationError("codeword " + std::to_string(index) + " has weight " + std::to_string(s.size()) +
                              ", expected " + std::to_string(w));
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i].pos >= n)
            throw ValidationError("codeword " + std::to_string(index) + " has position " + std::to_string(s[i].pos) +
                                  " outside length " + std::to_string(n));
        if (s[i].sign != 1 && s[i].sign != -1)
            throw ValidationError("codeword " + std::to_string(index) + " has a sign other than +1/-1");
        if (i > 0 && s[i].pos <= s[i - 1].pos)
            throw ValidationError("codeword " + std::to_string(index) + " has repeated or unsorted positions");
    }
}

std::uint64_t combinations_capped(std::uint32_t n, std::uint32_t k, std::uint64_t cap) {
    const BigInt c = binomial(n, k);
    return c > cap ? cap + 1 : static_cast<std::uint64_t>(c);
}

// Advances a lexicographic k-combination of {0..n-1}; false after the last one.
bool next_combination(std::vector<std::uint32_t>& c, std::uint32_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

void check_params(std::uint32_t n, std::uint32_t d, std::uint32_t w) {
    if (w == 0 || w > n)
        throw DomainError("weight must satisfy 0 < w <= n (n=" + std::to_string(n) + ", w=" + std::to_string(w) + ")");
    if (d == 0) throw DomainError("distance must be positive");
}

}  // namespace

// ---------------------------------------------------------------------------

std::uint32_t validate_binary(std::uint32_t n, std::uint32_t w, std::span<const Support> words) {
    detail::PackedSets packed(n);
    for (std::size_t i = 0; i < words.size(); ++i) {
        check_word(n, w, words[i], i);
        packed.push(words[i]);
    }
    std::uint32_t best = n + 1;
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            const std::uint32_t common = packed.intersect(i, j);
            if (common == w)
                throw ValidationError("duplicate codewords " + std::to_string(i) + " and " + std::to_string(j));
            best = std::min(best, 2 * (w - common));
        }
    }
    return best;
}

std::uint32_t validate_binary(const BinaryCWCode& code) {
    return validate_binary(code.length(), code.weight(), code.words());
}

std::uint32_t validate_ternary(std::uint32_t n, std::uint32_t w, std::span<const SignedWord> words) {
    detail::PackedSets plus(n), minus(n);
    for (std::size_t i = 0; i < words.size(); ++i) {
        check_word(n, w, words[i], i);
        plus.push_empty();
        minus.push_empty();
        for (const auto& e : words[i]) (e.sign > 0 ? plus : minus).set(i, e.pos);
    }
    std::uint32_t best = n + 1;
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            const std::uint32_t same = detail::PackedSets::intersect(plus, i, plus, j) +
                                       detail::PackedSets::intersect(minus, i, minus, j);
            const std::uint32_t opposite = detail::PackedSets::intersect(plus, i, minus, j) +
                                           detail::PackedSets::intersect(minus, i, plus, j);
            const std::uint32_t dist = 2 * w - 2 * (same + opposite) + opposite;
            if (dist == 0)
                throw ValidationError("duplicate codewords " + std::to_string(i) + " and " + std::to_string(j));
            best = std::min(best, dist);
        }
    }
    return best;
}

std::uint32_t validate_ternary(const TernaryCWCode& code) {
    return validate_ternary(code.length(), code.weight(), code.words());
}

std::uint32_t binary_distance(const Support& a, const Support& b) {
    std::uint32_t common = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else {
            ++common;
            ++i;
            ++j;
        }
    }
    return static_cast<std::uint32_t>(a.size() + b.size()) - 2 * common;
}

std::uint32_t ternary_distance(const SignedWord& a, const SignedWord& b) {
    std::uint32_t common = 0, opposite = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (i->pos < j->pos) ++i;
        else if (j->pos < i->pos) ++j;
        else {
            ++common;
            if (i->sign != j->sign) ++opposite;
            ++i;
            ++j;
        }
    }
    return static_cast<std::uint32_t>(a.size() + b.size()) - 2 * common + opposite;
}

// ---------------------------------------------------------------------------

BinaryCWCode::BinaryCWCode(std::uint32_t n, std::uint32_t w, std::vector<Support> words, CodeSource source)
    : n_(n), w_(w), words_(std::move(words)), source_(source) {
    if (w_ == 0 || w_ > n_) throw DomainError("weight must satisfy 0 < w <= n");
    for (auto& s : words_) std::sort(s.begin(), s.end());
    d_ = validate_binary(n_, w_, words_);
}

TernaryCWCode::TernaryCWCode(std::uint32_t n, std::uint32_t w, std::vector<SignedWord> words, CodeSource source)
    : n_(n), w_(w), words_(std::move(words)), source_(source) {
    if (w_ == 0 || w_ > n_) throw DomainError("weight must satisfy 0 < w <= n");
    for (auto& s : words_)
        std::sort(s.begin(), s.end(), [](const SignedEntry& a, const SignedEntry& b) { return a.pos < b.pos; });
    d_ = validate_ternary(n_, w_, words_);
}

// ---------------------------------------------------------------------------

BinaryCWCode greedy_binary(std::uint32_t n, std::uint32_t d, std::uint32_t w) {
    check_params(n, d, w);
    if (combinations_capped(n, w, enumeration_budget) > enumeration_budget)
        throw BudgetError("greedy_binary: C(" + std::to_string(n) + "," + std::to_string(w) +
                          ") exceeds the enumeration budget");
    // distance >= d  <=>  |intersection| <= w - ceil(d/2)
    const long max_common = static_cast<long>(w) - static_cast<long>((d + 1) / 2);

    detail::PackedSets kept(n);
    std::vector<Support> words;
    std::vector<std::uint32_t> c(w);
    for (std::uint32_t i = 0; i < w; ++i) c[i] = i;
    do {
        kept.push(c);
        const std::size_t cand = kept.size() - 1;
        bool ok = true;
        for (std::size_t j = 0; j < cand && ok; ++j)
            ok = static_cast<long>(kept.intersect(j, cand)) <= max_common;
        if (ok) words.push_back(c);
        else kept.pop();
    } while (next_combination(c, n));
    return BinaryCWCode(n, w, std::move(words), CodeSource::greedy);
}

TernaryCWCode greedy_ternary(std::uint32_t n, std::uint32_t d, std::uint32_t w) {
    check_params(n, d, w);
    if (w >= 40 || combinations_capped(n, w, enumeration_budget) * (std::uint64_t{1} << w) > enumeration_budget)
        throw BudgetError("greedy_ternary: C(" + std::to_string(n) + "," + std::to_string(w) +
                          ")*2^w exceeds the enumeration budget");
    detail::PackedSets plus(n), minus(n);
    std::vector<SignedWord> words;
    std::vector<std::uint32_t> c(w);
    for (std::uint32_t i = 0; i < w; ++i) c[i] = i;
    do {
        for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << w); ++pattern) {
            SignedWord word(w);
            plus.push_empty();
            minus.push_empty();
            const std::size_t cand = plus.size() - 1;
            for (std::uint32_t i = 0; i < w; ++i) {
                // First position is the most significant bit; a set bit means -1.
                const bool negative = ((pattern >> (w - 1 - i)) & 1) != 0;
                word[i] = {c[i], static_cast<std::int8_t>(negative ? -1 : 1)};
                (negative ? minus : plus).set(cand, c[i]);
            }
            bool ok = true;
            for (std::size_t j = 0; j < cand && ok; ++j) {
                const std::uint32_t same = detail::PackedSets::intersect(plus, j, plus, cand) +
                                           detail::PackedSets::intersect(minus, j, minus, cand);
                const std::uint32_t opposite = detail::PackedSets::intersect(plus, j, minus, cand) +
                                               detail::PackedSets::intersect(minus, j, plus, cand);
                ok = 2 * w - 2 * (same + opposite) + opposite >= d;
            }
            if (ok) {
                words.push_back(std::move(word));
            } else {
                plus.pop();
                minus.pop();
            }
        }
    } while (next_combination(c, n));
    return TernaryCWCode(n, w, std::move(words), CodeSource::greedy);
}

BinaryCWCode graham_sloane_construct(std::uint32_t n, std::uint32_t distance, std::uint32_t w) {
    check_params(n, distance, w);
    const std::uint32_t half = (distance + 1) / 2;
    const std::uint64_t q = smallest_prime_at_least(n);
    if (q > (1u << 16)) throw DomainError("graham_sloane_construct: modulus prime exceeds 2^16");
    if (combinations_capped(n, w, enumeration_budget) > enumeration_budget)
        throw BudgetError("graham_sloane_construct: C(" + std::to_string(n) + "," + std::to_string(w) +
                          ") exceeds the enumeration budget");

    const std::uint32_t moments = half - 1;
    auto key_of = [&](const std::vector<std::uint32_t>& s) {
        std::vector<std::uint32_t> key(moments, 0);
        for (std::uint32_t x : s) {
            std::uint64_t power = 1;
            for (std::uint32_t j = 0; j < moments; ++j) {
                power = power * x % q;
                key[j] = static_cast<std::uint32_t>((key[j] + power) % q);
            }
        }
        return key;
    };

    std::map<std::vector<std::uint32_t>, std::uint64_t> counts;
    std::vector<std::uint32_t> c(w);
    for (std::uint32_t i = 0; i < w; ++i) c[i] = i;
    do {
        ++counts[key_of(c)];
    } while (next_combination(c, n));

    // Largest class; ties go to the smallest moment vector.
    auto best = counts.begin();
    for (auto it = counts.begin(); it != counts.end(); ++it)
        if (it->second > best->second) best = it;
    const std::vector<std::uint32_t> target = best->first;

    std::vector<Support> words;
    for (std::uint32_t i = 0; i < w; ++i) c[i] = i;
    do {
        if (key_of(c) == target) words.push_back(c);
    } while (next_combination(c, n));

    BinaryCWCode code(n, w, std::move(words), CodeSource::graham_sloane);
    if (code.size() >= 2 && code.distance() < 2 * half)
        throw InternalError("graham_sloane_construct: certified distance " + std::to_string(code.distance()) +
                            " below " + std::to_string(2 * half));
    return code;
}

}  // namespace cwsense
