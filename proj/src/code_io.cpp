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

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>

#include "cwsense/codes.hpp"
#include "cwsense/error.hpp"
#include "text.hpp"

namespace cwsense {

namespace {

void write_comment(std::ostream& os, std::string_view comment) {
    std::size_t start = 0;
    while (start < comment.size()) {
        std::size_t end = comment.find('\n', start);
        if (end == std::string_view::npos) end = comment.size();
        os << "# " << comment.substr(start, end - start) << '\n';
        start = end + 1;
    }
}

}  // namespace

void write_code(std::ostream& os, const BinaryCWCode& code, std::string_view comment) {
    os << "# source: " << to_string(code.source()) << '\n';
    write_comment(os, comment);
    os << code.length() << ' ' << code.distance() << ' ' << code.weight() << '\n';
    for (const auto& s : code.words()) {
        for (std::size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << s[i];
        os << '\n';
    }
}

void write_code(std::ostream& os, const TernaryCWCode& code, std::string_view comment) {
    os << "# source: " << to_string(code.source()) << '\n';
    write_comment(os, comment);
    os << code.length() << ' ' << code.distance() << ' ' << code.weight() << '\n';
    for (const auto& s : code.words()) {
        for (std::size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << (s[i].sign > 0 ? '+' : '-') << s[i].pos;
        os << '\n';
    }
}

IngestedCode read_code(std::istream& is) {
    detail::LineReader reader(is);
    std::optional<std::vector<std::uint64_t>> header;
    std::size_t header_line = 0;
    std::vector<Support> binary;
    std::vector<SignedWord> ternary;
    std::optional<bool> is_ternary;

    while (auto line = reader.next_data_line()) {
        auto tokens = detail::split_ws(*line);
        if (!header) {
            header_line = reader.line_number();
            if (tokens.size() != 3) throw FormatError("code header must be 'n d w'", header_line);
            header = std::vector<std::uint64_t>{};
            for (auto t : tokens) header->push_back(detail::parse_uint(t, reader.line_number()));
            if ((*header)[0] == 0 || (*header)[0] > (1u << 24))
                throw FormatError("code length out of range", header_line);
            if ((*header)[2] == 0 || (*header)[2] > (*header)[0])
                throw FormatError("code weight must satisfy 0 < w <= n", header_line);
            continue;
        }
        const bool signed_tokens = !tokens.empty() && (tokens[0][0] == '+' || tokens[0][0] == '-');
        if (!is_ternary) is_ternary = signed_tokens;
        if (*is_ternary != signed_tokens)
            throw FormatError("mixed binary and signed codewords", reader.line_number());
        if (tokens.size() != (*header)[2])
            throw FormatError("codeword has " + std::to_string(tokens.size()) + " entries, expected weight " +
                                  std::to_string((*header)[2]),
                              reader.line_number());
        if (*is_ternary) {
            SignedWord word;
            for (auto t : tokens) {
                if (t.size() < 2 || (t[0] != '+' && t[0] != '-'))
                    throw FormatError("expected a signed index like +3 or -7", reader.line_number());
                const auto pos = detail::parse_uint(t.substr(1), reader.line_number());
                if (pos >= (*header)[0]) throw FormatError("position out of range", reader.line_number());
                word.push_back({static_cast<std::uint32_t>(pos), static_cast<std::int8_t>(t[0] == '+' ? 1 : -1)});
            }
            ternary.push_back(std::move(word));
        } else {
            Support word;
            for (auto t : tokens) {
                const auto pos = detail::parse_uint(t, reader.line_number());
                if (pos >= (*header)[0]) throw FormatError("position out of range", reader.line_number());
                word.push_back(static_cast<std::uint32_t>(pos));
            }
            binary.push_back(std::move(word));
        }
    }
    if (!header) throw FormatError("missing code header 'n d w'");

    const auto n = static_cast<std::uint32_t>((*header)[0]);
    const auto claimed = static_cast<std::uint32_t>(std::min<std::uint64_t>((*header)[1], n + 1));
    const auto w = static_cast<std::uint32_t>((*header)[2]);

    auto finish = [&](auto code) -> IngestedCode {
        if ((*header)[1] > code.distance())
            throw ValidationError("header claims distance " + std::to_string((*header)[1]) +
                                  " but the certified minimum distance is " + std::to_string(code.distance()));
        return IngestedCode{AnyCode(std::move(code)), claimed};
    };
    if (is_ternary.value_or(false)) return finish(TernaryCWCode(n, w, std::move(ternary), CodeSource::ingested));
    return finish(BinaryCWCode(n, w, std::move(binary), CodeSource::ingested));
}

}  // namespace cwsense
