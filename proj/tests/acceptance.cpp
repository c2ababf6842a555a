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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "cli.hpp"
#include "cwsense/bounds.hpp"
#include "cwsense/codes.hpp"
#include "cwsense/designs.hpp"
#include "cwsense/error.hpp"
#include "cwsense/matrices.hpp"
#include "cwsense/random.hpp"
#include "cwsense/recovery.hpp"
#include "oracles.hpp"

using namespace cwsense;
namespace fs = std::filesystem;

namespace {

// Tolerances and limits.
constexpr double limit_coherence_s = 60.0;
constexpr double limit_bounds_s = 120.0;
constexpr double limit_recovery_s = 120.0;
constexpr double float_oracle_tol = 1e-12;
constexpr std::uint32_t recovery_trials = 100;
constexpr std::uint32_t identity_pairs = 10000;

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        if (failures.size() < 5) failures.push_back(what);
    }
};

using Clock = std::chrono::steady_clock;

int report(int id, const std::string& title, const std::function<Outcome()>& body, double limit_s = 0.0) {
    const auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_s > 0.0 && secs >= limit_s) o.expect(false, "runtime limit exceeded");
    std::printf("criterion %d: %s  %s (%s; %.2f s", id, o.pass ? "PASS" : "FAIL", title.c_str(), o.detail.c_str(), secs);
    if (limit_s > 0.0) std::printf(" < %.0f s", limit_s);
    std::printf(")\n");
    for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
    return o.pass ? 0 : 1;
}

struct Instance {
    std::string label;
    MeasurementMatrix matrix;
    std::optional<Rational> exact;  // required exact coherence, if any
};

std::string rat(const Rational& r) { return to_string(r); }

std::vector<Instance> coherence_instances() {
    std::vector<Instance> out;
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (std::uint32_t r : {2u, 3u})
            out.push_back({"devore(" + std::to_string(p) + "," + std::to_string(r) + ")", devore(p, r),
                           r == 2 ? std::optional(Rational(1, p)) : std::nullopt});
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u})
        out.push_back({"affine(" + std::to_string(q) + ")", from_binary_code(affine_plane_code(q)),
                       q >= 3 ? std::optional(Rational(1, q)) : std::nullopt});
    for (std::uint32_t n : {7u, 9u, 13u, 15u, 19u, 21u})
        out.push_back({"sts(" + std::to_string(n) + ")", from_binary_code(steiner_to_code(steiner_triple_system(n))),
                       Rational(1, 3)});
    const std::uint32_t spreads[][3] = {{2, 4, 2}, {2, 6, 2}, {2, 6, 3}, {3, 4, 2}};
    for (const auto& s : spreads)
        out.push_back({"spread(" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," + std::to_string(s[2]) + ")",
                       from_binary_code(subspace_to_code(spread_code(s[0], s[1], s[2]))), Rational(0)});
    for (std::uint32_t n = 2; n <= 12; ++n)
        for (std::uint32_t w = 1; w <= std::min<std::uint32_t>(n, 6); ++w)
            for (std::uint32_t d = 1; d <= 3; ++d) {
                const std::string tag = "(" + std::to_string(n) + "," + std::to_string(2 * d) + "," + std::to_string(w) + ")";
                out.push_back({"greedy" + tag, from_binary_code(greedy_binary(n, 2 * d, w)), std::nullopt});
                out.push_back({"graham-sloane" + tag, from_binary_code(graham_sloane_construct(n, 2 * d, w)), std::nullopt});
            }
    return out;
}

Outcome criterion1(const std::vector<Instance>& instances) {
    Outcome o;
    for (const auto& inst : instances) {
        const Rational mu = inst.matrix.coherence();
        const auto& bound = inst.matrix.theoretical_bound();
        o.expect(bound.has_value(), inst.label + ": no theoretical bound");
        if (bound) o.expect(mu <= *bound, inst.label + ": mu " + rat(mu) + " > bound " + rat(*bound));
        if (inst.exact) o.expect(mu == *inst.exact, inst.label + ": mu " + rat(mu) + " != " + rat(*inst.exact));
    }
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u})
        o.expect(affine_plane_code(q).size() == q * q + q, "affine(" + std::to_string(q) + ") size");
    o.detail = std::to_string(instances.size()) + " instances, exact rational comparison";
    return o;
}

Outcome criterion2() {
    Outcome o;
    std::size_t checked = 0;
    for (std::uint32_t n = 1; n <= 14; ++n)
        for (std::uint32_t w = 1; w <= std::min<std::uint32_t>(n, 6); ++w)
            for (std::uint32_t d = 1; d <= 4; ++d) {
                const std::string tag = "(" + std::to_string(n) + "," + std::to_string(2 * d) + "," + std::to_string(w) + ")";
                const auto c = greedy_binary(n, 2 * d, w);
                const oracle::Big g = oracle::gilbert(n, 2 * d, w);
                o.expect(gilbert_bound(n, 2 * d, w).value == g, "gilbert" + tag + " disagrees with oracle");
                o.expect(oracle::Big(c.size()) >= g, "greedy" + tag + " below gilbert bound");
                o.expect(c.size() < 2 || c.distance() >= 2 * d, "greedy" + tag + " distance");
                ++checked;
                if (n > 12 || d > 3) continue;
                const auto gs = graham_sloane_construct(n, 2 * d, w);
                const oracle::Big b = oracle::graham_sloane(n, 2 * d, w);
                o.expect(graham_sloane_bound(n, 2 * d, w).value == b, "graham-sloane" + tag + " disagrees with oracle");
                o.expect(oracle::Big(gs.size()) >= b, "graham-sloane" + tag + " below its bound");
                o.expect(gs.size() < 2 || gs.distance() >= 2 * d, "graham-sloane" + tag + " distance");
                o.expect(gs.size() < 2 || oracle::min_distance(n, gs.words()) >= 2 * d,
                         "graham-sloane" + tag + " oracle distance");
                ++checked;
            }
    o.detail = std::to_string(checked) + " parameter sets";
    return o;
}

Outcome criterion3() {
    Outcome o;
    SplitMix64 rng(20260101);
    for (std::uint32_t i = 0; i < identity_pairs; ++i) {
        const auto n = static_cast<std::uint32_t>(2 + rng.uniform_below(30));
        const auto w = static_cast<std::uint32_t>(1 + rng.uniform_below(n));
        auto draw = [&] {
            std::vector<std::uint32_t> pool(n);
            for (std::uint32_t j = 0; j < n; ++j) pool[j] = j;
            for (std::uint32_t j = 0; j < w; ++j) std::swap(pool[j], pool[j + rng.uniform_below(n - j)]);
            std::sort(pool.begin(), pool.begin() + w);
            SignedWord s;
            for (std::uint32_t j = 0; j < w; ++j) s.push_back({pool[j], static_cast<std::int8_t>(rng.sign())});
            return s;
        };
        const SignedWord a = draw(), b = draw();
        const auto da = oracle::dense(n, a), db = oracle::dense(n, b);
        long shared = 0, opposite = 0, dot = 0;
        for (std::uint32_t j = 0; j < n; ++j) {
            if (da[j] != 0 && db[j] != 0) {
                ++shared;
                if (da[j] != db[j]) ++opposite;
            }
            dot += da[j] * db[j];
        }
        const long d = oracle::hamming(da, db);
        o.expect(d == 2L * w - 2 * shared + opposite, "distance identity, pair " + std::to_string(i));
        o.expect(dot == shared - 2 * opposite, "inner product identity, pair " + std::to_string(i));
        o.expect(inner_product(a, b) == dot, "library inner product, pair " + std::to_string(i));
        o.expect(static_cast<long>(ternary_distance(a, b)) == d, "library distance, pair " + std::to_string(i));
    }
    o.detail = std::to_string(identity_pairs) + " pairs, integer equality";
    return o;
}

Outcome criterion4(const std::vector<Instance>& instances) {
    Outcome o;
    std::size_t runs = 0;
    for (const auto& inst : instances) {
        const auto& m = inst.matrix;
        const std::uint32_t order = std::min({omp_guaranteed_order(m), m.rows(), m.cols()});
        if (order == 0) continue;
        ExperimentConfig cfg;
        cfg.k_min = 1;
        cfg.k_max = order;
        cfg.trials = recovery_trials;
        cfg.seed = 1;
        for (const auto& r : run_experiment(m, cfg)) {
            o.expect(r.guaranteed && r.note.empty(), inst.label + " k=" + std::to_string(r.k) + " not in the guaranteed regime");
            o.expect(r.successes == recovery_trials, inst.label + " k=" + std::to_string(r.k) + ": " +
                                                         std::to_string(r.successes) + "/" + std::to_string(r.trials));
            ++runs;
        }
    }
    o.detail = std::to_string(runs) + " (matrix, k) pairs x " + std::to_string(recovery_trials) +
               " trials, value error < 1e-9";
    return o;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int cli_run(std::vector<std::string> args, std::string* out = nullptr) {
    std::ostringstream o, e;
    const int status = cli::run(args, o, e);
    if (out) *out = o.str();
    return status;
}

Outcome criterion5() {
    Outcome o;
    const fs::path file = fs::path(CWSENSE_TEST_DATA) / "a40_10_6.code";
    const std::string text = slurp(file);
    {
        std::istringstream in(text);
        const IngestedCode ic = read_code(in);
        const auto& code = std::get<BinaryCWCode>(ic.code);
        o.expect(code.length() == 40 && code.weight() == 6 && ic.header_distance == 10, "header is not (40,10,6)");
        o.expect(code.size() >= 45, "fewer than 45 words");
        o.expect(code.distance() >= 10, "recomputed distance below 10");
        o.expect(oracle::min_distance(40, code.words()) >= 10, "oracle distance below 10");
    }
    std::string report;
    o.expect(cli_run({"analyze", file.string()}, &report) == cli::exit_ok, "analyze failed");
    o.expect(report.find(", bound = 1/6,") != std::string::npos, "analyze does not print bound 1/6");

    auto rejects = [&](const std::string& t) {
        std::istringstream in(t);
        try {
            (void)read_code(in);
            return false;
        } catch (const ValidationError&) {
            return true;
        }
    };
    std::string overstated = text;
    overstated.replace(overstated.find("40 10 6"), 7, "40 12 6");
    o.expect(rejects(overstated), "header claiming d=12 accepted");

    // Move one word to share four points with the first word: d drops to 4.
    std::string broken = text;
    const auto header = broken.find("40 10 6\n");
    const auto first = broken.find('\n', header) + 1;
    const auto second = broken.find('\n', first) + 1;
    const auto second_end = broken.find('\n', second);
    std::istringstream fw(broken.substr(first, second - first - 1));
    std::vector<std::uint32_t> w1{std::istream_iterator<std::uint32_t>(fw), {}};
    std::istringstream sw(broken.substr(second, second_end - second));
    std::vector<std::uint32_t> w2{std::istream_iterator<std::uint32_t>(sw), {}};
    std::vector<std::uint32_t> fresh(w1.begin(), w1.begin() + 4);
    for (std::uint32_t x = 0; fresh.size() < 6; ++x)
        if (std::find(w1.begin(), w1.end(), x) == w1.end() && std::find(fresh.begin(), fresh.end(), x) == fresh.end())
            fresh.push_back(x);
    std::string line;
    for (auto x : fresh) line += (line.empty() ? "" : " ") + std::to_string(x);
    broken.replace(second, second_end - second, line);
    o.expect(rejects(broken), "code with d < 10 accepted under header d=10");

    struct Row {
        std::uint32_t n, d, w, size;
        Rational mu;
    };
    const Row table[] = {
        {40, 10, 6, 45, {1, 6}},  {42, 10, 6, 55, {1, 6}},  {45, 10, 6, 57, {1, 6}},  {47, 10, 6, 63, {1, 6}},
        {50, 10, 6, 72, {1, 6}},  {51, 10, 6, 76, {1, 6}},  {55, 10, 6, 87, {1, 6}},  {56, 10, 6, 91, {1, 6}},
        {61, 10, 6, 111, {1, 6}}, {63, 10, 6, 126, {1, 6}}, {49, 12, 7, 56, {1, 7}},  {55, 12, 7, 63, {1, 7}},
        {56, 12, 7, 71, {1, 7}},  {61, 12, 7, 72, {1, 7}},  {62, 12, 7, 79, {1, 7}},  {64, 12, 7, 88, {1, 7}},
        {64, 14, 8, 72, {1, 8}},  {71, 14, 8, 80, {1, 8}},  {72, 14, 8, 89, {1, 8}},  {81, 16, 9, 90, {1, 9}},
    };
    for (const auto& r : table)
        o.expect(code_coherence_bound(r.d, r.w) == r.mu,
                 "row A(" + std::to_string(r.n) + "," + std::to_string(r.d) + "," + std::to_string(r.w) + ")");
    o.detail = "45-word (40,10,6) code ingested, 2 tampered copies rejected, 20 table rows";
    return o;
}

Outcome criterion6() {
    Outcome o;
    std::size_t checked = 0;
    for (std::uint32_t n = 1; n <= 20; ++n)
        for (std::uint32_t k = 2; k <= 4; ++k)
            for (std::uint32_t t = 1; t <= 2; ++t) {
                if (k * t > n) continue;
                const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(t) + ")";
                const std::uint32_t d = 2 * (k - 1) * t, w = k * t;
                o.expect(dimension_binary_gilbert(n, k, t) == gilbert_bound(n, d, w).value, "binary" + tag);
                o.expect(dimension_ternary_gilbert(n, k, t) == ternary_gilbert_bound(n, d, w).value, "ternary" + tag);
                ++checked;
            }
    o.detail = std::to_string(checked) + " (n,k,t) triples, exact equality";
    return o;
}

Outcome criterion7(const std::vector<Instance>& instances) {
    Outcome o;
    const fs::path base = fs::temp_directory_path() / ("cwsense_accept_" + std::to_string(::getpid()));
    const std::vector<std::vector<std::string>> constructs = {
        {"greedy", "--n", "12", "--d", "6", "--w", "4"},
        {"graham-sloane", "--n", "11", "--d", "4", "--w", "4"},
        {"ternary-greedy", "--n", "7", "--d", "4", "--w", "3"},
        {"sts", "--n", "15"},
        {"affine", "--q", "7"},
        {"spread", "--q", "3", "--n", "4", "--k", "2"},
        {"spread", "--q", "2", "--n", "6", "--k", "3", "--coset"},
        {"devore", "--p", "5", "--r", "3"},
        {"sts", "--n", "13", "--signed", "--seed", "99"},
        {"affine", "--q", "4", "--signed", "--seed", "5"},
    };
    std::size_t files = 0;
    for (const char* fmt : {"dense-csv", "support-list"}) {
        for (int run = 0; run < 2; ++run) {
            int i = 0;
            for (auto args : constructs) {
                args.insert(args.begin(), "construct");
                args.insert(args.end(), {"--emit-matrix", "--format", fmt, "--out-dir", (base / std::to_string(run)).string(),
                                         "--stem", "c" + std::to_string(i++)});
                o.expect(cli_run(args) == cli::exit_ok, "construct " + args[1] + " failed");
            }
        }
        for (const auto& entry : fs::directory_iterator(base / "0")) {
            const fs::path twin = base / "1" / entry.path().filename();
            o.expect(slurp(entry.path()) == slurp(twin), "construct output differs: " + entry.path().filename().string());
            ++files;
        }
        std::string r0, r1;
        const std::string matrix = (base / "0" / "c8").string() + (std::string(fmt) == "dense-csv" ? ".csv" : ".mtx");
        for (std::string* r : {&r0, &r1})
            o.expect(cli_run({"recover", matrix, "--k-max", "3", "--trials", "30", "--seed", "4", "--model", "gaussian"}, r) ==
                         cli::exit_ok,
                     "recover failed");
        o.expect(!r0.empty() && r0 == r1, "recover output differs between runs");
        fs::remove_all(base);
    }

    std::size_t round_trips = 0;
    auto idempotent = [&](const MeasurementMatrix& m, const std::string& label) {
        for (auto f : {MatrixFormat::dense_csv, MatrixFormat::support_list}) {
            std::ostringstream first;
            export_matrix(first, m, f);
            std::istringstream in(first.str());
            std::ostringstream second;
            export_matrix(second, import_matrix(in), f);
            o.expect(first.str() == second.str(), label + ": export/import/export not idempotent");
            ++round_trips;
        }
    };
    for (const auto& inst : instances)
        if (inst.label.rfind("greedy", 0) != 0 && inst.label.rfind("graham", 0) != 0) idempotent(inst.matrix, inst.label);
    for (std::uint64_t seed : {0u, 1u, 12345u}) {
        const auto a = from_binary_code_signed(affine_plane_code(5), seed);
        const auto b = from_binary_code_signed(affine_plane_code(5), seed);
        std::ostringstream sa, sb;
        export_matrix(sa, a, MatrixFormat::support_list);
        export_matrix(sb, b, MatrixFormat::support_list);
        o.expect(sa.str() == sb.str(), "signed matrix differs for seed " + std::to_string(seed));
        idempotent(a, "signed affine(5) seed " + std::to_string(seed));
    }
    idempotent(from_ternary_code(greedy_ternary(7, 4, 3)), "ternary greedy(7,4,3)");
    o.detail = std::to_string(files) + " construct files compared, " + std::to_string(round_trips) + " round trips";
    return o;
}

Outcome criterion8() {
    Outcome o;
    SplitMix64 rng(8);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        MeasurementMatrix m = devore(2, 2);
        switch (i % 4) {
            case 0: m = from_binary_code_signed(greedy_binary(8 + static_cast<std::uint32_t>(rng.uniform_below(8)), 4, 3), rng.next()); break;
            case 1: m = from_binary_code_signed(affine_plane_code(std::vector<std::uint32_t>{3, 4, 5, 7, 8}[rng.uniform_below(5)]), rng.next()); break;
            case 2: m = from_ternary_code(greedy_ternary(5 + static_cast<std::uint32_t>(rng.uniform_below(3)), 4, 3)); break;
            default: m = devore(std::vector<std::uint32_t>{3, 4, 5, 7}[rng.uniform_below(4)], 2 + static_cast<std::uint32_t>(rng.uniform_below(2))); break;
        }
        o.expect(m.cols() <= 500, "matrix " + std::to_string(i) + " has more than 500 columns");
        const double diff = std::abs(boost::rational_cast<double>(m.coherence()) - oracle::float_coherence(m));
        worst = std::max(worst, diff);
        o.expect(diff < float_oracle_tol, m.id() + ": |exact - float| = " + std::to_string(diff));
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "20 matrices, max |exact - float| = %.1e, tolerance 1e-12", worst);
    o.detail = buf;
    return o;
}

}  // namespace

int main() {
    int failures = 0;
    const auto start = Clock::now();
    std::vector<Instance> instances;
    failures += report(1, "coherence never exceeds the theoretical bound", [&] {
        instances = coherence_instances();
        return criterion1(instances);
    }, limit_coherence_s);
    failures += report(2, "constructions meet the gilbert and graham-sloane bounds", criterion2, limit_bounds_s);
    failures += report(3, "ternary distance and inner product identities", criterion3);
    failures += report(4, "OMP recovers every signal inside the coherence guarantee", [&] { return criterion4(instances); },
                       limit_recovery_s);
    failures += report(5, "ingested (40,10,6) code and table coherence arithmetic", criterion5);
    failures += report(6, "dimension calculators agree with the code-size bounds", criterion6);
    failures += report(7, "determinism and byte-idempotent export", [&] { return criterion7(instances); });
    failures += report(8, "exact coherence agrees with the floating-point oracle", criterion8);
    std::printf("%d of 8 criteria passed in %.2f s\n", 8 - failures,
                std::chrono::duration<double>(Clock::now() - start).count());
    return failures == 0 ? 0 : 1;
}
