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
#include <cmath>
#include <istream>
#include <ostream>
#include <set>

#include "cwsense/designs.hpp"
#include "cwsense/error.hpp"
#include "text.hpp"

namespace cwsense {

namespace {

constexpr std::uint64_t ambient_cap = 1u << 20;
constexpr std::size_t coset_word_budget = 20000;

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

std::uint64_t encode_vector(std::uint32_t q, const FieldVector& v) {
    std::uint64_t code = 0;
    for (std::size_t i = v.size(); i-- > 0;) code = code * q + v[i];
    return code;
}

FieldVector decode_vector(std::uint32_t q, std::uint32_t length, std::uint64_t code) {
    FieldVector v(length);
    for (std::uint32_t i = 0; i < length; ++i) {
        v[i] = static_cast<FiniteField::Index>(code % q);
        code /= q;
    }
    return v;
}

std::vector<FieldVector> row_reduce(const FiniteField& f, std::vector<FieldVector> rows) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows[0].size();
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
        std::size_t pivot = lead;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[lead], rows[pivot]);
        const auto scale = f.inv(rows[lead][c]);
        for (auto& x : rows[lead]) x = f.mul(x, scale);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead || rows[r][c] == 0) continue;
            const auto factor = rows[r][c];
            for (std::size_t j = 0; j < cols; ++j) rows[r][j] = f.sub(rows[r][j], f.mul(factor, rows[lead][j]));
        }
        ++lead;
    }
    rows.resize(lead);
    return rows;
}

std::uint32_t rank(const FiniteField& f, std::vector<FieldVector> rows) {
    return static_cast<std::uint32_t>(row_reduce(f, std::move(rows)).size());
}

std::uint32_t subspace_distance(const FiniteField& f, const std::vector<FieldVector>& u,
                                const std::vector<FieldVector>& v) {
    std::vector<FieldVector> stacked = u;
    stacked.insert(stacked.end(), v.begin(), v.end());
    const std::uint32_t sum_dim = rank(f, stacked);
    const std::uint32_t du = rank(f, u);
    const std::uint32_t dv = rank(f, v);
    // dim(U & V) = dim U + dim V - dim(U + V); distance = dim U + dim V - 2 dim(U & V)
    return 2 * sum_dim - du - dv;
}

std::vector<std::uint64_t> span_encodings(const FiniteField& f, const std::vector<FieldVector>& basis) {
    const std::uint32_t q = f.order();
    const std::uint32_t k = static_cast<std::uint32_t>(basis.size());
    const std::size_t n = basis.empty() ? 0 : basis[0].size();
    const std::uint64_t total = ipow(q, k);
    std::vector<std::uint64_t> out;
    out.reserve(total);
    for (std::uint64_t combo = 0; combo < total; ++combo) {
        FieldVector v(n, 0);
        std::uint64_t c = combo;
        for (std::uint32_t i = 0; i < k; ++i) {
            const auto coef = static_cast<FiniteField::Index>(c % q);
            c /= q;
            if (coef == 0) continue;
            for (std::size_t j = 0; j < n; ++j) v[j] = f.add(v[j], f.mul(coef, basis[i][j]));
        }
        out.push_back(encode_vector(q, v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------

SubspaceCode::SubspaceCode(FiniteField field, std::uint32_t n, std::uint32_t k,
                           std::vector<std::vector<FieldVector>> bases)
    : field_(std::move(field)), n_(n), k_(k), d_(2 * k) {
    if (k_ == 0 || k_ > n_) throw DomainError("subspace dimension must satisfy 0 < k <= n");
    if (bases.size() > subspace_code_budget)
        throw BudgetError("subspace code with " + std::to_string(bases.size()) + " members exceeds the scan budget");
    for (auto& b : bases) {
        for (const auto& row : b) {
            if (row.size() != n_) throw ValidationError("basis vector has wrong length");
            for (auto x : row)
                if (x >= field_.order()) throw ValidationError("basis entry outside the field");
        }
        auto reduced = row_reduce(field_, b);
        if (reduced.size() != k_ || b.size() != k_)
            throw ValidationError("basis does not span a " + std::to_string(k_) + "-dimensional subspace");
        bases_.push_back(std::move(reduced));
    }
    for (std::size_t i = 0; i < bases_.size(); ++i)
        for (std::size_t j = i + 1; j < bases_.size(); ++j) {
            const auto dist = subspace_distance(field_, bases_[i], bases_[j]);
            if (dist == 0) throw ValidationError("repeated subspace in code");
            d_ = std::min(d_, dist);
        }
}

SubspaceCode spread_code(std::uint32_t q, std::uint32_t n, std::uint32_t k) {
    const auto pp = prime_power(q);
    if (!pp) throw DomainError("spread_code: q=" + std::to_string(q) + " is not a prime power");
    if (k == 0 || n == 0 || n % k != 0) throw DomainError("spread_code: k must divide n");
    if (static_cast<double>(n) * std::log2(static_cast<double>(q)) > 20.0 + 1e-9 || ipow(q, n) > ambient_cap)
        throw BudgetError("spread_code: q^n exceeds 2^20");
    const std::uint64_t big_order = ipow(q, k);
    if (big_order > FiniteField::max_order) throw BudgetError("spread_code: q^k exceeds the field order cap");
    const std::uint64_t members = (ipow(q, n) - 1) / (big_order - 1);
    if (members > subspace_code_budget) throw BudgetError("spread_code: too many spread members to certify");

    const auto [p, m] = *pp;
    const FiniteField fq = make_field(p, m);
    const FiniteField big = make_field(p, m * k);

    // Embed GF(q) into GF(q^k) through a root theta of GF(q)'s modulus.
    FiniteField::Index theta = 0;
    if (m > 1) {
        const auto& mod = fq.modulus();
        bool found = false;
        for (FiniteField::Index a = 0; a < big.order() && !found; ++a) {
            FiniteField::Index acc = 0;
            for (std::size_t i = mod.size(); i-- > 0;) acc = big.add(big.mul(acc, a), mod[i]);
            if (acc == 0) {
                theta = a;
                found = true;
            }
        }
        if (!found) throw InternalError("spread_code: no subfield embedding found");
    }
    auto embed = [&](FiniteField::Index a) -> FiniteField::Index {
        if (m == 1) return a;
        const auto c = fq.coefficients(a);
        FiniteField::Index acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) acc = big.add(big.mul(acc, theta), c[i]);
        return acc;
    };

    // GF(q)-basis 1, x, ..., x^(k-1) of GF(q^k); coordinates by table lookup.
    std::vector<FiniteField::Index> beta(k);
    for (std::uint32_t j = 0; j < k; ++j) beta[j] = big.pow(big.degree() > 1 ? p : 1, j);
    std::vector<FieldVector> coords(big.order());
    std::vector<std::uint8_t> hit(big.order(), 0);
    for (std::uint64_t combo = 0; combo < big_order; ++combo) {
        const FieldVector c = decode_vector(q, k, combo);
        FiniteField::Index e = 0;
        for (std::uint32_t j = 0; j < k; ++j) e = big.add(e, big.mul(embed(c[j]), beta[j]));
        if (hit[e]) throw InternalError("spread_code: coordinate map is not injective");
        hit[e] = 1;
        coords[e] = c;
    }

    const std::uint32_t len = n / k;
    const std::uint32_t big_q = big.order();
    std::vector<std::vector<FieldVector>> bases;
    bases.reserve(members);
    for (std::uint32_t lead = 0; lead < len; ++lead) {
        const std::uint64_t tails = ipow(big_q, len - 1 - lead);
        for (std::uint64_t t = 0; t < tails; ++t) {
            std::vector<FiniteField::Index> v(len, 0);
            v[lead] = 1;
            std::uint64_t c = t;
            for (std::uint32_t i = lead + 1; i < len; ++i) {
                v[i] = static_cast<FiniteField::Index>(c % big_q);
                c /= big_q;
            }
            std::vector<FieldVector> basis;
            for (std::uint32_t j = 0; j < k; ++j) {
                FieldVector row;
                row.reserve(n);
                for (std::uint32_t i = 0; i < len; ++i) {
                    const auto& part = coords[big.mul(beta[j], v[i])];
                    row.insert(row.end(), part.begin(), part.end());
                }
                basis.push_back(std::move(row));
            }
            bases.push_back(std::move(basis));
        }
    }
    SubspaceCode code(fq, n, k, std::move(bases));
    if (code.size() > 1 && code.distance() != 2 * k)
        throw InternalError("spread_code: members intersect nontrivially");
    return code;
}

namespace {

std::uint64_t distance_floor(std::uint32_t q, std::uint32_t k, std::uint32_t d) {
    const std::uint32_t t = d / 2;
    return 2 * ipow(q, k) - 2 * ipow(q, k - std::min(t, k));
}

}  // namespace

BinaryCWCode subspace_to_code(const SubspaceCode& code) {
    const FiniteField& f = code.field();
    const std::uint32_t q = f.order();
    const std::uint64_t length = ipow(q, code.ambient_dimension()) - 1;
    const std::uint64_t weight = ipow(q, code.dimension()) - 1;
    std::vector<Support> words;
    for (const auto& basis : code.bases()) {
        Support s;
        for (auto e : span_encodings(f, basis))
            if (e != 0) s.push_back(static_cast<std::uint32_t>(e - 1));
        words.push_back(std::move(s));
    }
    BinaryCWCode out(static_cast<std::uint32_t>(length), static_cast<std::uint32_t>(weight), std::move(words),
                     CodeSource::subspace);
    if (out.distance() < distance_floor(q, code.dimension(), code.distance()))
        throw InternalError("subspace_to_code: certified distance below 2q^k - 2q^(k-t)");
    return out;
}

CosetCode subspace_to_coset_code(const SubspaceCode& code) {
    const FiniteField& f = code.field();
    const std::uint32_t q = f.order();
    const std::uint32_t n = code.ambient_dimension();
    const std::uint32_t k = code.dimension();
    const std::uint64_t total = ipow(q, n);
    const std::uint64_t per_member = ipow(q, n - k) - 1;
    if (per_member * code.size() > coset_word_budget)
        throw BudgetError("subspace_to_coset_code: too many cosets to certify");

    std::set<Support> seen;
    std::vector<Support> words;
    for (const auto& basis : code.bases()) {
        const auto span = span_encodings(f, basis);
        std::vector<FieldVector> members;
        members.reserve(span.size());
        for (auto e : span) members.push_back(decode_vector(q, n, e));
        std::vector<std::uint8_t> visited(total, 0);
        for (auto e : span) visited[e] = 1;
        for (std::uint64_t v = 0; v < total; ++v) {
            if (visited[v]) continue;  // in U, or already in an earlier coset
            const FieldVector vv = decode_vector(q, n, v);
            Support s;
            s.reserve(members.size());
            for (const auto& u : members) {
                FieldVector sum(n);
                for (std::uint32_t j = 0; j < n; ++j) sum[j] = f.add(vv[j], u[j]);
                const std::uint64_t enc = encode_vector(q, sum);
                visited[enc] = 1;
                s.push_back(static_cast<std::uint32_t>(enc - 1));
            }
            std::sort(s.begin(), s.end());
            if (seen.insert(s).second) words.push_back(std::move(s));
        }
    }
    BinaryCWCode out(static_cast<std::uint32_t>(total - 1), static_cast<std::uint32_t>(ipow(q, k)), std::move(words),
                     CodeSource::subspace);
    if (out.distance() < distance_floor(q, k, code.distance()))
        throw InternalError("subspace_to_coset_code: certified distance below 2q^k - 2q^(k-t)");
    const std::uint64_t formula = (n >= k + 1 ? ipow(q, n - k - 1) : 0) * code.size();
    return CosetCode{std::move(out), formula};
}

// ---------------------------------------------------------------------------

void write_subspace_code(std::ostream& os, const SubspaceCode& code) {
    const std::uint32_t q = code.field().order();
    os << "# subspace code over " << code.field().name() << ", basis rows as base-q integers\n";
    os << q << ' ' << code.ambient_dimension() << ' ' << code.dimension() << ' ' << code.distance() << '\n';
    for (const auto& basis : code.bases()) {
        for (std::size_t i = 0; i < basis.size(); ++i) os << (i ? " " : "") << encode_vector(q, basis[i]);
        os << '\n';
    }
}

SubspaceCode read_subspace_code(std::istream& is) {
    detail::LineReader reader(is);
    auto header_line = reader.next_data_line();
    if (!header_line) throw FormatError("missing subspace code header 'q n k d'");
    const auto header = detail::split_ws(*header_line);
    if (header.size() != 4) throw FormatError("subspace code header must be 'q n k d'", reader.line_number());
    const auto q = detail::parse_uint(header[0], reader.line_number());
    const auto n = detail::parse_uint(header[1], reader.line_number());
    const auto k = detail::parse_uint(header[2], reader.line_number());
    const auto d = detail::parse_uint(header[3], reader.line_number());
    const auto pp = prime_power(q);
    if (!pp || q > FiniteField::max_order) throw FormatError("q must be a prime power <= 2^16", reader.line_number());
    if (n == 0 || n > 64 || k == 0 || k > n) throw FormatError("need 0 < k <= n <= 64", reader.line_number());
    if (static_cast<double>(n) * std::log2(static_cast<double>(q)) > 62.0)
        throw FormatError("q^n too large to encode", reader.line_number());
    const std::uint64_t limit = ipow(q, static_cast<std::uint32_t>(n));

    std::vector<std::vector<FieldVector>> bases;
    while (auto line = reader.next_data_line()) {
        const auto tokens = detail::split_ws(*line);
        if (tokens.size() != k)
            throw FormatError("expected " + std::to_string(k) + " basis rows", reader.line_number());
        std::vector<FieldVector> basis;
        for (auto t : tokens) {
            const auto enc = detail::parse_uint(t, reader.line_number());
            if (enc >= limit) throw FormatError("basis row encoding out of range", reader.line_number());
            basis.push_back(decode_vector(static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(n), enc));
        }
        bases.push_back(std::move(basis));
    }
    SubspaceCode code(make_field(pp->first, pp->second), static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k),
                      std::move(bases));
    if (d > code.distance())
        throw ValidationError("header claims subspace distance " + std::to_string(d) + " but the certified distance is " +
                              std::to_string(code.distance()));
    return code;
}

}  // namespace cwsense
