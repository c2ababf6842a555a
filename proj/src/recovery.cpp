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

#include "cwsense/recovery.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "cwsense/error.hpp"
#include "cwsense/random.hpp"

namespace cwsense {

std::string_view to_string(ValueModel m) { return m == ValueModel::rademacher ? "rademacher" : "gaussian"; }

ValueModel value_model_from_string(std::string_view s) {
    if (s == "rademacher") return ValueModel::rademacher;
    if (s == "gaussian" || s == "unit-gaussian") return ValueModel::gaussian;
    throw DomainError("unknown value model '" + std::string(s) + "'");
}

std::vector<double> SparseSignal::to_dense() const {
    std::vector<double> x(dimension, 0.0);
    for (std::size_t i = 0; i < support.size(); ++i) x[support[i]] = values[i];
    return x;
}

SparseSignal gen_sparse(std::uint32_t N, std::uint32_t k, ValueModel model, std::uint64_t seed) {
    if (k == 0 || k > N) throw DomainError("gen_sparse: need 1 <= k <= N");
    SplitMix64 rng(seed);
    std::vector<std::uint32_t> pool(N);
    std::iota(pool.begin(), pool.end(), 0u);
    for (std::uint32_t i = 0; i < k; ++i) {
        const auto j = i + static_cast<std::uint32_t>(rng.uniform_below(N - i));
        std::swap(pool[i], pool[j]);
    }
    SparseSignal x;
    x.dimension = N;
    x.seed = seed;
    x.support.assign(pool.begin(), pool.begin() + k);
    std::sort(x.support.begin(), x.support.end());
    x.values.reserve(k);
    for (std::uint32_t i = 0; i < k; ++i) {
        if (model == ValueModel::rademacher) {
            x.values.push_back(rng.sign());
        } else {
            double v = rng.normal();
            while (v == 0.0) v = rng.normal();
            x.values.push_back(v);
        }
    }
    return x;
}

std::vector<double> measure(const MeasurementMatrix& m, const SparseSignal& x) {
    if (x.dimension != m.cols())
        throw DomainError("measure: signal dimension " + std::to_string(x.dimension) + " != matrix columns " +
                          std::to_string(m.cols()));
    std::vector<double> y(m.rows(), 0.0);
    for (std::size_t i = 0; i < x.support.size(); ++i)
        for (const auto& e : m.column(x.support[i])) y[e.pos] += e.sign * x.values[i];
    return y;
}

namespace {

double norm2(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

OmpResult omp(const MeasurementMatrix& m, std::span<const double> y, std::uint32_t k, double tol) {
    if (y.size() != m.rows()) throw DomainError("omp: measurement length does not match matrix rows");
    if (k == 0 || k > m.rows()) throw DomainError("omp: need 1 <= k <= n");

    OmpResult out;
    out.residual.assign(y.begin(), y.end());
    out.residual_norms.push_back(norm2(out.residual));
    std::vector<bool> chosen(m.cols(), false);
    Eigen::VectorXd coef;
    const Eigen::Map<const Eigen::VectorXd> target(y.data(), static_cast<Eigen::Index>(y.size()));

    while (out.selected.size() < std::min<std::size_t>(k, m.cols()) && out.residual_norms.back() >= tol) {
        std::int64_t best = -1;
        double best_corr = 0.0;
        for (std::uint32_t j = 0; j < m.cols(); ++j) {
            if (chosen[j]) continue;
            double c = 0.0;
            for (const auto& e : m.column(j)) c += e.sign * out.residual[e.pos];
            c = std::abs(c);
            if (c > best_corr) {
                best_corr = c;
                best = j;
            }
        }
        if (best < 0) break;  // residual orthogonal to every remaining column
        chosen[best] = true;
        out.selected.push_back(static_cast<std::uint32_t>(best));

        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m.rows(), static_cast<Eigen::Index>(out.selected.size()));
        for (std::size_t s = 0; s < out.selected.size(); ++s)
            for (const auto& e : m.column(out.selected[s])) a(e.pos, static_cast<Eigen::Index>(s)) = e.sign;
        Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(a);
        if (cod.rank() < a.cols()) out.rank_deficient = true;
        coef = cod.solve(target);
        const Eigen::VectorXd r = target - a * coef;
        out.residual.assign(r.data(), r.data() + r.size());
        out.residual_norms.push_back(r.norm());
    }

    std::vector<std::pair<std::uint32_t, double>> entries;
    for (std::size_t s = 0; s < out.selected.size(); ++s)
        if (coef(static_cast<Eigen::Index>(s)) != 0.0) entries.emplace_back(out.selected[s], coef(static_cast<Eigen::Index>(s)));
    std::sort(entries.begin(), entries.end());
    out.estimate.dimension = m.cols();
    for (const auto& [j, v] : entries) {
        out.estimate.support.push_back(j);
        out.estimate.values.push_back(v);
    }
    return out;
}

std::vector<RecoveryReport> run_experiment(const MeasurementMatrix& m, const ExperimentConfig& config) {
    if (config.trials == 0) throw DomainError("run_experiment: trials must be >= 1");
    if (config.k_min > config.k_max) throw DomainError("run_experiment: empty k range");
    const std::uint32_t guaranteed_order = omp_guaranteed_order(m);
    const SplitMix64 root(config.seed);
    std::vector<RecoveryReport> reports;

    for (std::uint32_t k = config.k_min; k <= config.k_max; ++k) {
        RecoveryReport rep;
        rep.matrix_id = m.id();
        rep.k = k;
        rep.guaranteed = k >= 1 && k <= guaranteed_order;
        if (k == 0) {
            rep.note = "k=0 skipped";
            reports.push_back(rep);
            continue;
        }
        if (k > m.rows() || k > m.cols()) {
            rep.note = "k exceeds matrix dimensions; skipped";
            reports.push_back(rep);
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        for (std::uint32_t t = 0; t < config.trials; ++t) {
            const std::uint64_t trial_seed = root.split({k, t}).next();
            const SparseSignal x = gen_sparse(m.cols(), k, config.model, trial_seed);
            const std::vector<double> y = measure(m, x);
            const OmpResult r = omp(m, y, k, 1e-10 * std::max(1.0, norm2(y)));

            for (std::size_t i = 1; i < r.residual_norms.size(); ++i)
                if (r.residual_norms[i] > r.residual_norms[i - 1] * (1.0 + 1e-12) + 1e-12)
                    throw InternalError("omp residual increased between iterations");

            std::vector<std::uint32_t> diff;
            std::set_symmetric_difference(x.support.begin(), x.support.end(), r.estimate.support.begin(),
                                          r.estimate.support.end(), std::back_inserter(diff));
            rep.max_support_error = std::max(rep.max_support_error, static_cast<std::uint32_t>(diff.size()));
            rep.max_residual_norm = std::max(rep.max_residual_norm, r.residual_norms.back());
            if (diff.empty()) {
                double err = 0.0;
                for (std::size_t i = 0; i < x.values.size(); ++i)
                    err = std::max(err, std::abs(x.values[i] - r.estimate.values[i]));
                rep.max_value_error = std::max(rep.max_value_error, err);
                if (err < exact_value_tolerance) ++rep.successes;
            }
            ++rep.trials;
        }
        rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        reports.push_back(rep);
    }
    return reports;
}

void write_reports_csv(std::ostream& os, std::span<const RecoveryReport> reports, bool include_timing) {
    os << "matrix-id,k,trials,successes,max-value-error,seconds\n";
    char buf[64];
    for (const auto& r : reports) {
        std::snprintf(buf, sizeof buf, "%.3e", r.max_value_error);
        os << r.matrix_id << ',' << r.k << ',' << r.trials << ',' << r.successes << ',' << buf << ',';
        if (include_timing) {
            std::snprintf(buf, sizeof buf, "%.6f", r.seconds);
            os << buf;
        } else {
            os << '-';
        }
        os << '\n';
    }
}

}  // namespace cwsense
