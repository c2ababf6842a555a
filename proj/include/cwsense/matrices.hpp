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

#include <boost/rational.hpp>
#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cwsense/codes.hpp"

namespace cwsense {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);  // "p/q", or "p" when q == 1
Rational parse_rational(const std::string& s);

struct MatrixProvenance {
    std::string construction;  // empty for ad hoc matrices
    std::string params;
    std::optional<std::uint64_t> seed;

    friend bool operator==(const MatrixProvenance&, const MatrixProvenance&) = default;
};

/// Column as signed row indices, sorted by row; entries are +1 or -1.
using Column = SignedWord;

/*
  n x N matrix with entries in {0, 1, -1} and the same number w of nonzero
  entries in every column. Columns are not normalised; every column has
  squared norm w, so coherence is max |<c_i, c_j>| / w exactly.

  The exact coherence is computed on first request and shared by copies.
*/
class MeasurementMatrix {
public:
    MeasurementMatrix(std::uint32_t rows, std::vector<Column> columns, MatrixProvenance provenance = {},
                      std::optional<Rational> theoretical_bound = std::nullopt);

    std::uint32_t rows() const noexcept { return rows_; }
    std::uint32_t cols() const noexcept { return static_cast<std::uint32_t>(columns_.size()); }
    std::uint32_t weight() const noexcept { return weight_; }
    const std::vector<Column>& columns() const noexcept { return columns_; }
    const Column& column(std::size_t j) const { return columns_.at(j); }
    const MatrixProvenance& provenance() const noexcept { return provenance_; }
    const std::optional<Rational>& theoretical_bound() const noexcept { return bound_; }
    bool is_binary() const noexcept;

    /// Exhaustive max |<c_i, c_j>| over i != j; 0 for a single column.
    std::uint32_t max_inner_product() const;
    Rational coherence() const { return Rational(max_inner_product(), weight_); }

    /// construction[params][seed] label used in reports.
    std::string id() const;

    Eigen::MatrixXd dense() const;

    friend bool operator==(const MeasurementMatrix& a, const MeasurementMatrix& b);

private:
    struct Cache;

    std::uint32_t rows_;
    std::uint32_t weight_;
    std::vector<Column> columns_;
    MatrixProvenance provenance_;
    std::optional<Rational> bound_;
    std::shared_ptr<Cache> cache_;
};

std::int64_t inner_product(const Column& a, const Column& b);

struct WelchBound {
    double standard = 0.0;  // sqrt((N - n) / (n (N - 1)))
    double printed = 0.0;   // sqrt(N / (n (N - n))), the alternative closed form
    bool degenerate = false;  // N <= n: both reported as 0
};

WelchBound welch_bound(std::uint32_t n, std::uint32_t N);

struct CoherenceReport {
    Rational coherence;
    std::uint32_t max_inner_product = 0;
    std::uint32_t weight = 0;
    std::optional<Rational> theoretical_bound;
    WelchBound welch;
    /// floor(1/mu) + 1, or n when mu == 0.
    std::uint32_t sparsity_order = 0;
    std::optional<std::uint32_t> queried_k;
    /// (k - 1) mu for the queried k; a coherence-based bound on delta_k, not the RIP constant itself.
    std::optional<Rational> delta_bound;

    bool within_bound() const { return !theoretical_bound || coherence <= *theoretical_bound; }
};

CoherenceReport coherence(const MeasurementMatrix& m, std::optional<std::uint32_t> k = std::nullopt);

/// Largest k with (2k - 1) mu < 1, the order up to which OMP recovery is guaranteed.
std::uint32_t omp_guaranteed_order(const MeasurementMatrix& m);

/// 1 - d / (2w), clamped at 0 (codes with fewer than two words report d = n + 1).
Rational code_coherence_bound(std::uint32_t d, std::uint32_t w);

/*
  min(w, 2w - d) / w, clamped at 0: the bound on |<c1, c2>| / w for ternary
  constant-weight codes. Words sharing s positions with D sign disagreements
  have distance 2w - 2s + D and inner product s - 2D; the inner product is at
  most w - d/2 but can fall to -(2w - d).
*/
Rational ternary_coherence_bound(std::uint32_t d, std::uint32_t w);

// Constructions ---------------------------------------------------------------

/// Codewords as 0/1 columns; bound 1 - d/(2w).
MeasurementMatrix from_binary_code(const BinaryCWCode& code);

/// Sign of entry `entry` (0-based position within its support) of column `column`.
using SignSource = std::function<int(std::uint32_t column, std::uint32_t entry)>;

/*
  Codewords with their supports signed +-1. For column j the signs come from
  SplitMix64(seed).split(j): one draw per support entry in row order, -1 when
  the top bit of the draw is set.
*/
MeasurementMatrix from_binary_code_signed(const BinaryCWCode& code, std::uint64_t seed);

/// Same shape with an explicit sign source; used to pin sign patterns in tests.
MeasurementMatrix from_binary_code_signed(const BinaryCWCode& code, const SignSource& signs,
                                          std::optional<std::uint64_t> seed = std::nullopt);

/// Codewords over {0, 1, -1} as columns; bound ternary_coherence_bound(d, w).
MeasurementMatrix from_ternary_code(const TernaryCWCode& code);

/// Most columns devore() will build.
inline constexpr std::uint64_t devore_column_cap = 1'000'000;

/*
  DeVore matrix over GF(q), q a prime power: rows indexed by (a, b) in GF(q)^2
  as a*q + b, one column per polynomial f of degree < r with a 1 in row
  (a, f(a)) for every a. Column index is sum c_i q^i over the coefficient
  indices c_0, ..., c_{r-1}. Bound (r - 1)/q.
*/
MeasurementMatrix devore(std::uint32_t q, std::uint32_t r);

// Export / import -------------------------------------------------------------

enum class MatrixFormat { dense_csv, support_list };

/*
  Both formats start with '#' provenance lines (omitted when the matrix has
  no construction name):

    # construction: devore
    # params: p=3 r=2
    # seed: 7                 (signed matrices only)
    # bound: 1/3

  dense-csv then lists n rows of N comma-separated entries in {-1, 0, 1}.
  support-list is introduced by the line "#!support-list", followed by the
  provenance lines, a shape line "n N w", and one column per line as signed
  row indices ("+0 -4 +8").
*/
void export_matrix(std::ostream& os, const MeasurementMatrix& m, MatrixFormat format);
MeasurementMatrix import_matrix(std::istream& is, MatrixFormat format);

/// Detects the format from the first line ("#!support-list" or CSV).
MeasurementMatrix import_matrix(std::istream& is);

}  // namespace cwsense
