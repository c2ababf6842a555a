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

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cwsense {

enum class CodeSource { greedy, graham_sloane, steiner, affine, subspace, ingested };

std::string_view to_string(CodeSource s);
CodeSource code_source_from_string(std::string_view s);

/// Sorted support of a binary word.
using Support = std::vector<std::uint32_t>;

struct SignedEntry {
    std::uint32_t pos;
    std::int8_t sign;  // +1 or -1

    friend bool operator==(const SignedEntry&, const SignedEntry&) = default;
};

/// Signed support of a word over {0, 1, -1}, sorted by position.
using SignedWord = std::vector<SignedEntry>;

/// Largest number of candidate words the greedy and moment-class constructions will enumerate.
inline constexpr std::uint64_t enumeration_budget = 10'000'000;

/*
  Binary constant-weight (n, d, w) code.

  Construction sorts every support, checks weight and range, then certifies
  the minimum distance by an exhaustive pair scan (validate_binary). A code
  with fewer than two words has distance n + 1, standing in for "infinite".
*/
class BinaryCWCode {
public:
    BinaryCWCode(std::uint32_t n, std::uint32_t w, std::vector<Support> words, CodeSource source);

    std::uint32_t length() const noexcept { return n_; }
    std::uint32_t weight() const noexcept { return w_; }
    std::uint32_t distance() const noexcept { return d_; }
    std::size_t size() const noexcept { return words_.size(); }
    const std::vector<Support>& words() const noexcept { return words_; }
    const Support& word(std::size_t i) const { return words_.at(i); }
    CodeSource source() const noexcept { return source_; }
    bool distance_is_infinite() const noexcept { return d_ > n_; }

private:
    std::uint32_t n_;
    std::uint32_t w_;
    std::uint32_t d_ = 0;
    std::vector<Support> words_;
    CodeSource source_;
};

/// Ternary constant-weight code over {0, 1, -1}; same conventions as BinaryCWCode.
class TernaryCWCode {
public:
    TernaryCWCode(std::uint32_t n, std::uint32_t w, std::vector<SignedWord> words, CodeSource source);

    std::uint32_t length() const noexcept { return n_; }
    std::uint32_t weight() const noexcept { return w_; }
    std::uint32_t distance() const noexcept { return d_; }
    std::size_t size() const noexcept { return words_.size(); }
    const std::vector<SignedWord>& words() const noexcept { return words_; }
    CodeSource source() const noexcept { return source_; }
    bool distance_is_infinite() const noexcept { return d_ > n_; }

private:
    std::uint32_t n_;
    std::uint32_t w_;
    std::uint32_t d_ = 0;
    std::vector<SignedWord> words_;
    CodeSource source_;
};

/// Exact minimum pairwise distance 2(w - |intersection|), or n + 1 for fewer than two words.
/// Throws ValidationError on a wrong-weight, out-of-range, or duplicated word.
std::uint32_t validate_binary(std::uint32_t n, std::uint32_t w, std::span<const Support> words);
std::uint32_t validate_binary(const BinaryCWCode& code);

/// Exact minimum symbol-wise distance over {0, 1, -1}; same conventions as validate_binary.
std::uint32_t validate_ternary(std::uint32_t n, std::uint32_t w, std::span<const SignedWord> words);
std::uint32_t validate_ternary(const TernaryCWCode& code);

std::uint32_t binary_distance(const Support& a, const Support& b);

/// Symbol-wise distance, computed as 2w - 2|supp a & supp b| + (opposite-sign overlaps).
std::uint32_t ternary_distance(const SignedWord& a, const SignedWord& b);

/// Keeps each weight-w support (lexicographic order) at distance >= d from all kept words.
BinaryCWCode greedy_binary(std::uint32_t n, std::uint32_t d, std::uint32_t w);

/// Greedy over signed supports: support lexicographic, then sign patterns with + before -.
TernaryCWCode greedy_ternary(std::uint32_t n, std::uint32_t d, std::uint32_t w);

/// Largest class of weight-w supports under power sums (sum s, sum s^2, ..., sum s^(d/2-1)) mod q,
/// q the smallest prime >= n. Certified distance >= distance rounded up to even.
BinaryCWCode graham_sloane_construct(std::uint32_t n, std::uint32_t distance, std::uint32_t w);

/*
  Code files.

    # comment / provenance lines
    n d w
    0 4 7          binary: support indices
    +0 -4 +7       ternary: signed indices

  Reading always re-certifies the distance and rejects a header whose d
  exceeds it. Ingested codes carry CodeSource::ingested.
*/
using AnyCode = std::variant<BinaryCWCode, TernaryCWCode>;

void write_code(std::ostream& os, const BinaryCWCode& code, std::string_view comment = {});
void write_code(std::ostream& os, const TernaryCWCode& code, std::string_view comment = {});

struct IngestedCode {
    AnyCode code;
    std::uint32_t header_distance;
};

IngestedCode read_code(std::istream& is);

}  // namespace cwsense
