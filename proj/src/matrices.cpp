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

#include "cwsense/matrices.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "cwsense/error.hpp"
#include "cwsense/finitefield.hpp"
#include "cwsense/random.hpp"
#include "packed.hpp"

namespace cwsense {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& s) {
    try {
        const auto slash = s.find('/');
        std::size_t used = 0;
        if (slash == std::string::npos) {
            const auto v = std::stoll(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return Rational(v);
        }
        const auto num = std::stoll(s.substr(0, slash), &used);
        if (used != slash) throw std::invalid_argument(s);
        const auto rest = s.substr(slash + 1);
        const auto den = std::stoll(rest, &used);
        if (used != rest.size() || den == 0) throw std::invalid_argument(s);
        return Rational(num, den);
    } catch (const std::logic_error&) {
        throw FormatError("malformed rational '" + s + "'");
    }
}

struct MeasurementMatrix::Cache {
    std::once_flag once;
    std::uint32_t max_inner = 0;
};

MeasurementMatrix::MeasurementMatrix(std::uint32_t rows, std::vector<Column> columns, MatrixProvenance provenance,
                                     std::optional<Rational> theoretical_bound)
    : rows_(rows),
      weight_(0),
      columns_(std::move(columns)),
      provenance_(std::move(provenance)),
      bound_(theoretical_bound),
      cache_(std::make_shared<Cache>()) {
    if (columns_.empty()) throw ValidationError("a measurement matrix needs at least one column");
    weight_ = static_cast<std::uint32_t>(columns_.front().size());
    if (weight_ == 0) throw ValidationError("columns must have positive weight");
    if (rows_ < weight_) throw ValidationError("column weight exceeds row count");
    for (std::size_t j = 0; j < columns_.size(); ++j) {
        auto& c = columns_[j];
        if (c.size() != weight_)
            throw ValidationError("column " + std::to_string(j) + " has weight " + std::to_string(c.size()) +
                                  ", expected " + std::to_string(weight_));
        std::sort(c.begin(), c.end(), [](const SignedEntry& a, const SignedEntry& b) { return a.pos < b.pos; });
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i].pos >= rows_) throw ValidationError("column " + std::to_string(j) + " has a row out of range");
            if (c[i].sign != 1 && c[i].sign != -1) throw ValidationError("entries must be 0, 1 or -1");
            if (i > 0 && c[i].pos == c[i - 1].pos)
                throw ValidationError("column " + std::to_string(j) + " repeats a row");
        }
    }
}

bool MeasurementMatrix::is_binary() const noexcept {
    for (const auto& c : columns_)
        for (const auto& e : c)
            if (e.sign < 0) return false;
    return true;
}

std::uint32_t MeasurementMatrix::max_inner_product() const {
    std::call_once(cache_->once, [this] {
        detail::PackedSets plus(rows_), minus(rows_);
        for (std::size_t j = 0; j < columns_.size(); ++j) {
            plus.push_empty();
            minus.push_empty();
            for (const auto& e : columns_[j]) (e.sign > 0 ? plus : minus).set(j, e.pos);
        }
        const bool binary = is_binary();
        std::uint32_t best = 0;
        for (std::size_t i = 0; i < columns_.size(); ++i)
            for (std::size_t j = i + 1; j < columns_.size(); ++j) {
                std::int64_t ip = detail::PackedSets::intersect(plus, i, plus, j);
                if (!binary) {
                    ip += detail::PackedSets::intersect(minus, i, minus, j);
                    ip -= detail::PackedSets::intersect(plus, i, minus, j);
                    ip -= detail::PackedSets::intersect(minus, i, plus, j);
                }
                best = std::max(best, static_cast<std::uint32_t>(ip < 0 ? -ip : ip));
            }
        cache_->max_inner = best;
    });
    return cache_->max_inner;
}

std::string MeasurementMatrix::id() const {
    if (provenance_.construction.empty()) return "matrix";
    std::string s = provenance_.construction;
    if (!provenance_.params.empty()) s += "(" + provenance_.params + ")";
    if (provenance_.seed) s += ";seed=" + std::to_string(*provenance_.seed);
    return s;
}

Eigen::MatrixXd MeasurementMatrix::dense() const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows_, cols());
    for (std::size_t j = 0; j < columns_.size(); ++j)
        for (const auto& e : columns_[j]) m(e.pos, static_cast<Eigen::Index>(j)) = e.sign;
    return m;
}

bool operator==(const MeasurementMatrix& a, const MeasurementMatrix& b) {
    return a.rows_ == b.rows_ && a.columns_ == b.columns_ && a.provenance_ == b.provenance_ && a.bound_ == b.bound_;
}

std::int64_t inner_product(const Column& a, const Column& b) {
    std::int64_t s = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (i->pos < j->pos) ++i;
        else if (j->pos < i->pos) ++j;
        else {
            s += i->sign * j->sign;
            ++i;
            ++j;
        }
    }
    return s;
}

WelchBound welch_bound(std::uint32_t n, std::uint32_t N) {
    WelchBound b;
    if (n == 0 || N <= n) {
        b.degenerate = true;
        return b;
    }
    const double dn = n, dN = N;
    b.standard = std::sqrt((dN - dn) / (dn * (dN - 1.0)));
    b.printed = std::sqrt(dN / (dn * (dN - dn)));
    return b;
}

CoherenceReport coherence(const MeasurementMatrix& m, std::optional<std::uint32_t> k) {
    CoherenceReport r;
    r.max_inner_product = m.max_inner_product();
    r.weight = m.weight();
    r.coherence = m.coherence();
    r.theoretical_bound = m.theoretical_bound();
    r.welch = welch_bound(m.rows(), m.cols());
    r.sparsity_order = r.max_inner_product == 0 ? m.rows() : m.weight() / r.max_inner_product + 1;
    if (k) {
        r.queried_k = *k;
        r.delta_bound = Rational(*k == 0 ? 0 : static_cast<std::int64_t>(*k) - 1) * r.coherence;
    }
    return r;
}

std::uint32_t omp_guaranteed_order(const MeasurementMatrix& m) {
    const std::uint64_t a = m.max_inner_product();
    const std::uint64_t w = m.weight();
    const std::uint32_t cap = std::min(m.rows(), m.cols());
    std::uint32_t k = 0;
    while (k < cap && (2 * (static_cast<std::uint64_t>(k) + 1) - 1) * a < w) ++k;
    return k;
}

Rational code_coherence_bound(std::uint32_t d, std::uint32_t w) {
    const Rational b = Rational(1) - Rational(d, 2 * static_cast<std::int64_t>(w));
    return b < Rational(0) ? Rational(0) : b;
}

Rational ternary_coherence_bound(std::uint32_t d, std::uint32_t w) {
    const std::int64_t ww = w, dd = d;
    const std::int64_t top = std::min(ww, 2 * ww - dd);
    return top <= 0 ? Rational(0) : Rational(top, ww);
}

// ---------------------------------------------------------------------------

namespace {

std::string code_params(std::uint32_t n, std::uint32_t d, std::uint32_t w) {
    return "n=" + std::to_string(n) + " d=" + std::to_string(d) + " w=" + std::to_string(w);
}

std::string code_construction(CodeSource s) { return std::string(to_string(s)) + "-code"; }

}  // namespace

MeasurementMatrix from_binary_code(const BinaryCWCode& code) {
    if (code.size() == 0) throw DomainError("cannot build a matrix from an empty code");
    std::vector<Column> cols;
    cols.reserve(code.size());
    for (const auto& s : code.words()) {
        Column c;
        c.reserve(s.size());
        for (auto p : s) c.push_back({p, 1});
        cols.push_back(std::move(c));
    }
    return MeasurementMatrix(code.length(), std::move(cols),
                             {code_construction(code.source()), code_params(code.length(), code.distance(), code.weight()),
                              std::nullopt},
                             code_coherence_bound(code.distance(), code.weight()));
}

MeasurementMatrix from_binary_code_signed(const BinaryCWCode& code, const SignSource& signs,
                                          std::optional<std::uint64_t> seed) {
    if (code.size() == 0) throw DomainError("cannot build a matrix from an empty code");
    std::vector<Column> cols;
    cols.reserve(code.size());
    for (std::uint32_t j = 0; j < code.size(); ++j) {
        const auto& s = code.words()[j];
        Column c;
        c.reserve(s.size());
        for (std::uint32_t i = 0; i < s.size(); ++i) {
            const int sg = signs(j, i);
            if (sg != 1 && sg != -1) throw DomainError("sign source must return +1 or -1");
            c.push_back({s[i], static_cast<std::int8_t>(sg)});
        }
        cols.push_back(std::move(c));
    }
    return MeasurementMatrix(code.length(), std::move(cols),
                             {"signed-" + code_construction(code.source()),
                              code_params(code.length(), code.distance(), code.weight()), seed},
                             code_coherence_bound(code.distance(), code.weight()));
}

MeasurementMatrix from_binary_code_signed(const BinaryCWCode& code, std::uint64_t seed) {
    const SplitMix64 root(seed);
    std::uint32_t current = ~0u;
    SplitMix64 stream;
    // Entries are requested column by column in row order.
    SignSource signs = [&](std::uint32_t column, std::uint32_t) {
        if (column != current) {
            current = column;
            stream = root.split(column);
        }
        return stream.sign();
    };
    return from_binary_code_signed(code, signs, seed);
}

MeasurementMatrix from_ternary_code(const TernaryCWCode& code) {
    if (code.size() == 0) throw DomainError("cannot build a matrix from an empty code");
    return MeasurementMatrix(code.length(), code.words(),
                             {"ternary-" + code_construction(code.source()),
                              code_params(code.length(), code.distance(), code.weight()), std::nullopt},
                             ternary_coherence_bound(code.distance(), code.weight()));
}

MeasurementMatrix devore(std::uint32_t q, std::uint32_t r) {
    const auto pp = prime_power(q);
    if (!pp) throw DomainError("devore: " + std::to_string(q) + " is not a prime power");
    if (r < 2) throw DomainError("devore: r must be >= 2");
    if (q > FiniteField::max_order) throw DomainError("devore: field order exceeds 2^16");
    std::uint64_t ncols = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
        ncols *= q;
        if (ncols > devore_column_cap) throw BudgetError("devore: q^r exceeds the column cap");
    }
    const FiniteField f = make_field(pp->first, pp->second);
    std::vector<Column> cols;
    cols.reserve(ncols);
    std::vector<FiniteField::Index> coeffs(r);
    for (std::uint64_t j = 0; j < ncols; ++j) {
        std::uint64_t c = j;
        for (std::uint32_t i = 0; i < r; ++i) {
            coeffs[i] = static_cast<FiniteField::Index>(c % q);
            c /= q;
        }
        Column col;
        col.reserve(q);
        for (FiniteField::Index a = 0; a < q; ++a) col.push_back({a * q + poly_eval(f, coeffs, a), 1});
        cols.push_back(std::move(col));
    }
    return MeasurementMatrix(q * q, std::move(cols),
                             {"devore", "p=" + std::to_string(q) + " r=" + std::to_string(r), std::nullopt},
                             Rational(static_cast<std::int64_t>(r) - 1, q));
}

}  // namespace cwsense
