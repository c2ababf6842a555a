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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cwsense/matrices.hpp"

namespace cwsense {

enum class ValueModel { rademacher, gaussian };

std::string_view to_string(ValueModel m);
ValueModel value_model_from_string(std::string_view s);

struct SparseSignal {
    std::uint32_t dimension = 0;
    std::vector<std::uint32_t> support;  // ascending
    std::vector<double> values;          // aligned with support, all nonzero
    std::optional<std::uint64_t> seed;

    std::vector<double> to_dense() const;
    friend bool operator==(const SparseSignal&, const SparseSignal&) = default;
};

/// Uniform k-subset (partial Fisher-Yates on SplitMix64(seed)), then one value per support entry.
SparseSignal gen_sparse(std::uint32_t N, std::uint32_t k, ValueModel model, std::uint64_t seed);

/// y = Phi x using only the support of x.
std::vector<double> measure(const MeasurementMatrix& m, const SparseSignal& x);

struct OmpResult {
    SparseSignal estimate;
    std::vector<std::uint32_t> selected;   // in selection order
    std::vector<double> residual_norms;    // ||y|| first, then after each iteration
    std::vector<double> residual;
    bool rank_deficient = false;           // some least-squares fit had dependent columns
};

/*
  Orthogonal matching pursuit. Each iteration picks the unselected column
  with the largest |<column, residual>| (ties to the lowest index), then
  refits y on all selected columns by a complete orthogonal decomposition,
  which yields the minimum-norm solution when the selection is rank
  deficient. Stops after k selections or once ||residual|| < tol.
*/
OmpResult omp(const MeasurementMatrix& m, std::span<const double> y, std::uint32_t k, double tol = 1e-12);

/// Exact recovery: same support and every value within this tolerance.
inline constexpr double exact_value_tolerance = 1e-9;

struct ExperimentConfig {
    std::uint32_t k_min = 1;
    std::uint32_t k_max = 1;
    std::uint32_t trials = 100;
    ValueModel model = ValueModel::rademacher;
    std::uint64_t seed = 0;
};

struct RecoveryReport {
    std::string matrix_id;
    std::uint32_t k = 0;
    std::uint32_t trials = 0;
    std::uint32_t successes = 0;
    std::uint32_t max_support_error = 0;  // |true support xor estimated support|
    double max_value_error = 0.0;         // over trials with matching support
    double max_residual_norm = 0.0;
    double seconds = 0.0;
    bool guaranteed = false;              // (2k - 1) mu < 1
    std::string note;                     // set when the order was skipped
};

/// Trial t at order k draws its signal from seed SplitMix64(seed).split({k, t}).next().
std::vector<RecoveryReport> run_experiment(const MeasurementMatrix& m, const ExperimentConfig& config);

/// CSV rows `matrix-id,k,trials,successes,max-value-error,seconds`. With include_timing off the
/// seconds column holds "-" so that reruns are byte-identical.
void write_reports_csv(std::ostream& os, std::span<const RecoveryReport> reports, bool include_timing);

}  // namespace cwsense
