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

#include <istream>
#include <ostream>
#include <sstream>

#include "cwsense/error.hpp"
#include "cwsense/matrices.hpp"
#include "text.hpp"

namespace cwsense {

namespace {

constexpr std::string_view support_list_magic = "#!support-list";

void write_provenance(std::ostream& os, const MeasurementMatrix& m) {
    const auto& p = m.provenance();
    if (p.construction.empty()) return;
    os << "# construction: " << p.construction << '\n';
    if (!p.params.empty()) os << "# params: " << p.params << '\n';
    if (p.seed) os << "# seed: " << *p.seed << '\n';
    if (m.theoretical_bound()) os << "# bound: " << to_string(*m.theoretical_bound()) << '\n';
}

struct Header {
    MatrixProvenance provenance;
    std::optional<Rational> bound;
};

Header parse_provenance(const std::vector<std::string>& comments) {
    Header h;
    for (const auto& line : comments) {
        std::string_view s(line);
        if (s.starts_with("#!")) continue;
        s.remove_prefix(1);
        s = detail::trim(s);
        const auto colon = s.find(':');
        if (colon == std::string_view::npos) continue;
        const auto key = detail::trim(s.substr(0, colon));
        const std::string value(detail::trim(s.substr(colon + 1)));
        if (key == "construction") h.provenance.construction = value;
        else if (key == "params") h.provenance.params = value;
        else if (key == "seed") h.provenance.seed = detail::parse_uint(value, 0);
        else if (key == "bound") h.bound = parse_rational(value);
    }
    return h;
}

MeasurementMatrix read_dense(std::istream& is) {
    detail::LineReader reader(is);
    std::vector<Column> cols;
    std::uint32_t rows = 0;
    while (auto line = reader.next_data_line()) {
        const auto fields = detail::split_on(*line, ',');
        if (rows == 0) cols.resize(fields.size());
        if (fields.size() != cols.size())
            throw FormatError("row has " + std::to_string(fields.size()) + " entries, expected " +
                                  std::to_string(cols.size()),
                              reader.line_number());
        for (std::size_t j = 0; j < fields.size(); ++j) {
            const auto v = detail::parse_int(detail::trim(fields[j]), reader.line_number());
            if (v < -1 || v > 1) throw FormatError("entries must be -1, 0 or 1", reader.line_number());
            if (v != 0) cols[j].push_back({rows, static_cast<std::int8_t>(v)});
        }
        ++rows;
    }
    if (rows == 0) throw FormatError("empty matrix file");
    const Header h = parse_provenance(reader.comments());
    try {
        return MeasurementMatrix(rows, std::move(cols), h.provenance, h.bound);
    } catch (const ValidationError& e) {
        throw FormatError(e.what());
    }
}

MeasurementMatrix read_support_list(std::istream& is) {
    detail::LineReader reader(is);
    auto shape_line = reader.next_data_line();
    if (reader.comments().empty() || reader.comments().front() != support_list_magic)
        throw FormatError("support-list files must start with " + std::string(support_list_magic), 1);
    if (!shape_line) throw FormatError("missing shape line 'n N w'");
    const auto shape = detail::split_ws(*shape_line);
    if (shape.size() != 3) throw FormatError("shape line must be 'n N w'", reader.line_number());
    const auto n = detail::parse_uint(shape[0], reader.line_number());
    const auto N = detail::parse_uint(shape[1], reader.line_number());
    const auto w = detail::parse_uint(shape[2], reader.line_number());
    if (n == 0 || n > (1u << 30) || N > (1u << 30)) throw FormatError("shape out of range", reader.line_number());

    std::vector<Column> cols;
    while (auto line = reader.next_data_line()) {
        const auto tokens = detail::split_ws(*line);
        if (tokens.size() != w)
            throw FormatError("column has " + std::to_string(tokens.size()) + " entries, expected " + std::to_string(w),
                              reader.line_number());
        Column c;
        for (auto t : tokens) {
            if (t.size() < 2 || (t[0] != '+' && t[0] != '-'))
                throw FormatError("expected a signed row index like +3 or -7", reader.line_number());
            const auto row = detail::parse_uint(t.substr(1), reader.line_number());
            if (row >= n) throw FormatError("row index out of range", reader.line_number());
            c.push_back({static_cast<std::uint32_t>(row), static_cast<std::int8_t>(t[0] == '+' ? 1 : -1)});
        }
        cols.push_back(std::move(c));
    }
    if (cols.size() != N)
        throw FormatError("shape line promises " + std::to_string(N) + " columns, found " + std::to_string(cols.size()));
    const Header h = parse_provenance(reader.comments());
    try {
        return MeasurementMatrix(static_cast<std::uint32_t>(n), std::move(cols), h.provenance, h.bound);
    } catch (const ValidationError& e) {
        throw FormatError(e.what());
    }
}

}  // namespace

void export_matrix(std::ostream& os, const MeasurementMatrix& m, MatrixFormat format) {
    if (format == MatrixFormat::support_list) {
        os << support_list_magic << '\n';
        write_provenance(os, m);
        os << m.rows() << ' ' << m.cols() << ' ' << m.weight() << '\n';
        for (const auto& c : m.columns()) {
            for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << (c[i].sign > 0 ? '+' : '-') << c[i].pos;
            os << '\n';
        }
        return;
    }
    write_provenance(os, m);
    std::vector<std::int8_t> dense(static_cast<std::size_t>(m.rows()) * m.cols(), 0);
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& e : m.columns()[j]) dense[static_cast<std::size_t>(e.pos) * m.cols() + j] = e.sign;
    std::string line;
    for (std::uint32_t i = 0; i < m.rows(); ++i) {
        line.clear();
        for (std::uint32_t j = 0; j < m.cols(); ++j) {
            if (j) line += ',';
            const auto v = dense[static_cast<std::size_t>(i) * m.cols() + j];
            line += v < 0 ? "-1" : (v > 0 ? "1" : "0");
        }
        os << line << '\n';
    }
}

MeasurementMatrix import_matrix(std::istream& is, MatrixFormat format) {
    return format == MatrixFormat::support_list ? read_support_list(is) : read_dense(is);
}

MeasurementMatrix import_matrix(std::istream& is) {
    std::ostringstream buf;
    buf << is.rdbuf();
    const std::string text = buf.str();
    std::istringstream in(text);
    const bool support_list = text.compare(0, support_list_magic.size(), support_list_magic) == 0;
    return import_matrix(in, support_list ? MatrixFormat::support_list : MatrixFormat::dense_csv);
}

}  // namespace cwsense
