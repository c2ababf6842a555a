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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <type_traits>
#include <variant>

#include "cwsense/bounds.hpp"
#include "cwsense/codes.hpp"
#include "cwsense/designs.hpp"
#include "cwsense/error.hpp"
#include "cwsense/matrices.hpp"
#include "cwsense/recovery.hpp"

namespace cwsense::cli {

namespace {

namespace fs = std::filesystem;

/// Bad flag combination detected after parsing.
class UsageError : public Error {
public:
    using Error::Error;
};

struct ConstructArgs {
    std::string construction;
    std::uint32_t n = 0, d = 0, w = 0, p = 0, r = 0, q = 0, k = 0;
    bool coset = false;
    bool is_signed = false;
    std::uint64_t seed = 0;
    bool emit_matrix = false;
    std::string format = "dense-csv";
    std::string out_dir = ".";
    std::string stem;
};

struct AnalyzeArgs {
    std::string file;
    std::uint32_t k = 0;
};

struct BoundsArgs {
    std::uint32_t n = 0, d = 0, w = 0, k = 0, t = 0;
    bool ternary = false;
    bool dims = false;
};

struct RecoverArgs {
    std::string file;
    std::uint32_t k_min = 1;
    std::uint32_t k_max = 0;
    std::uint32_t trials = 100;
    std::uint64_t seed = 0;
    std::string model = "rademacher";
    std::string out;
    bool timing = false;
};

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw UsageError("cannot write '" + path.string() + "'");
}

MatrixFormat parse_format(const std::string& s) {
    if (s == "dense-csv") return MatrixFormat::dense_csv;
    if (s == "support-list") return MatrixFormat::support_list;
    throw UsageError("unknown matrix format '" + s + "' (dense-csv | support-list)");
}

// construct --------------------------------------------------------------------

std::vector<std::pair<char, std::uint32_t>> given_params(const CLI::App& sub, const ConstructArgs& a) {
    const std::pair<char, std::uint32_t> all[] = {{'p', a.p}, {'q', a.q}, {'n', a.n}, {'d', a.d},
                                                  {'w', a.w}, {'r', a.r}, {'k', a.k}};
    std::vector<std::pair<char, std::uint32_t>> out;
    for (const auto& [name, value] : all)
        if (sub.count(std::string("--") + name)) out.emplace_back(name, value);
    return out;
}

std::string params_label(const CLI::App& sub, const ConstructArgs& a) {
    std::string s;
    for (const auto& [name, value] : given_params(sub, a))
        s += (s.empty() ? "" : " ") + std::string(1, name) + "=" + std::to_string(value);
    return s;
}

std::string default_stem(const CLI::App& sub, const ConstructArgs& a) {
    std::string s = a.construction;
    std::replace(s.begin(), s.end(), '-', '_');
    for (const auto& [name, value] : given_params(sub, a)) s += "_" + std::string(1, name) + std::to_string(value);
    if (a.coset) s += "_coset";
    if (a.is_signed) s += "_signed_s" + std::to_string(a.seed);
    return s;
}

void require(const CLI::App& sub, const ConstructArgs& a, std::initializer_list<const char*> flags) {
    for (const char* f : flags)
        if (sub.count(f) == 0) {
            std::string list;
            for (const char* g : flags) list += std::string(list.empty() ? "" : ", ") + g;
            throw UsageError("construct " + a.construction + " requires " + list);
        }
}

int cmd_construct(const CLI::App& sub, const ConstructArgs& a, std::ostream& out) {
    const MatrixFormat format = parse_format(a.format);
    std::optional<AnyCode> code;
    std::optional<SubspaceCode> subspaces;
    std::optional<MeasurementMatrix> matrix;
    std::string note;

    const std::string& c = a.construction;
    if (a.coset && c != "spread") throw UsageError("--coset applies to spread only");
    if (a.is_signed && c != "greedy" && c != "graham-sloane" && c != "sts" && c != "affine" && c != "spread")
        throw UsageError("--signed applies to binary code constructions");
    if (sub.count("--seed") && !a.is_signed) throw UsageError("--seed only affects --signed matrices");

    if (c == "greedy") {
        require(sub, a, {"--n", "--d", "--w"});
        code = greedy_binary(a.n, a.d, a.w);
    } else if (c == "graham-sloane") {
        require(sub, a, {"--n", "--d", "--w"});
        code = graham_sloane_construct(a.n, a.d, a.w);
    } else if (c == "ternary-greedy") {
        require(sub, a, {"--n", "--d", "--w"});
        code = greedy_ternary(a.n, a.d, a.w);
    } else if (c == "sts") {
        require(sub, a, {"--n"});
        code = steiner_to_code(steiner_triple_system(a.n));
    } else if (c == "affine") {
        require(sub, a, {"--q"});
        code = affine_plane_code(a.q);
    } else if (c == "spread") {
        require(sub, a, {"--q", "--n", "--k"});
        subspaces = spread_code(a.q, a.n, a.k);
        if (a.coset) {
            CosetCode cc = subspace_to_coset_code(*subspaces);
            if (cc.formula_size != cc.code.size())
                note = "note: " + std::to_string(cc.code.size()) + " distinct proper cosets; q^(n-k-1)|C| gives " +
                       std::to_string(cc.formula_size);
            code = std::move(cc.code);
        } else {
            code = subspace_to_code(*subspaces);
        }
    } else if (c == "devore") {
        require(sub, a, {"--p", "--r"});
        matrix = devore(a.p, a.r);
    } else {
        throw UsageError("unknown construction '" + c +
                         "' (greedy | graham-sloane | sts | affine | spread | devore | ternary-greedy)");
    }
    if (code && (a.emit_matrix || a.is_signed)) {
        if (const auto* b = std::get_if<BinaryCWCode>(&*code))
            matrix = a.is_signed ? from_binary_code_signed(*b, a.seed) : from_binary_code(*b);
        else
            matrix = from_ternary_code(std::get<TernaryCWCode>(*code));
    }

    const fs::path dir(a.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw UsageError("cannot create '" + a.out_dir + "': " + ec.message());
    const std::string stem = a.stem.empty() ? default_stem(sub, a) : a.stem;
    const std::string params = params_label(sub, a);
    std::vector<fs::path> written;

    std::uint32_t n = 0, N = 0, w = 0, d = 0;
    std::optional<Rational> bound;
    if (subspaces) {
        std::ostringstream s;
        write_subspace_code(s, *subspaces);
        written.push_back(dir / (stem + ".subspaces"));
        write_file(written.back(), s.str());
    }
    if (code) {
        std::ostringstream s;
        const std::string comment = "construction: " + c + "\nparams: " + params;
        std::visit([&](const auto& cw) {
            write_code(s, cw, comment);
            n = cw.length();
            N = static_cast<std::uint32_t>(cw.size());
            w = cw.weight();
            d = cw.distance();
            if constexpr (std::is_same_v<std::decay_t<decltype(cw)>, TernaryCWCode>)
                bound = ternary_coherence_bound(d, w);
            else
                bound = code_coherence_bound(d, w);
        }, *code);
        written.push_back(dir / (stem + ".code"));
        write_file(written.back(), s.str());
    }
    if (matrix) {
        std::ostringstream s;
        export_matrix(s, *matrix, format);
        written.push_back(dir / (stem + (format == MatrixFormat::support_list ? ".mtx" : ".csv")));
        write_file(written.back(), s.str());
        if (!code) {
            n = matrix->rows();
            N = matrix->cols();
            w = matrix->weight();
            d = N < 2 ? n + 1 : 2 * (w - matrix->max_inner_product());
            bound = matrix->theoretical_bound();
        }
    }

    out << c << '(' << params << ')';
    if (a.is_signed) out << " signed seed=" << a.seed;
    out << ": n=" << n << " N=" << N << " w=" << w << " d=" << d;
    if (bound) out << " bound=" << to_string(*bound);
    out << '\n';
    if (!note.empty()) out << note << '\n';
    for (const auto& p : written) out << "wrote " << p.string() << '\n';
    return exit_ok;
}

// analyze ----------------------------------------------------------------------

enum class FileKind { support_list, dense_csv, code, subspaces };

FileKind detect(const std::string& text) {
    if (text.rfind("#!support-list", 0) == 0) return FileKind::support_list;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        if (line.find(',') != std::string::npos) return FileKind::dense_csv;
        std::istringstream fields(line);
        std::size_t count = 0;
        for (std::string f; fields >> f;) ++count;
        if (count == 3) return FileKind::code;
        if (count == 4) return FileKind::subspaces;
        return FileKind::dense_csv;
    }
    throw FormatError("empty file");
}

void print_coherence(std::ostream& out, const MeasurementMatrix& m, std::optional<std::uint32_t> k) {
    const CoherenceReport r = coherence(m, k);
    out << "matrix: " << m.id() << " n=" << m.rows() << " N=" << m.cols() << " w=" << m.weight() << '\n';
    out << "mu = " << to_string(r.coherence);
    if (r.theoretical_bound) out << ", bound = " << to_string(*r.theoretical_bound);
    out << ", order k = " << r.sparsity_order << '\n';
    out << "max |inner product| = " << r.max_inner_product << '\n';
    if (r.welch.degenerate)
        out << "welch = n/a (N <= n)\n";
    else
        out << "welch = " << format_double(r.welch.standard) << " (alternative form " << format_double(r.welch.printed)
            << ")\n";
    out << "omp guaranteed k <= " << omp_guaranteed_order(m) << '\n';
    if (r.delta_bound) out << "delta_" << *r.queried_k << " <= " << to_string(*r.delta_bound) << '\n';
    if (!r.within_bound()) out << "warning: coherence exceeds the recorded bound\n";
}

int cmd_analyze(const CLI::App& sub, const AnalyzeArgs& a, std::ostream& out) {
    const std::string text = read_file(a.file);
    const std::optional<std::uint32_t> k = sub.count("--k") ? std::optional(a.k) : std::nullopt;
    std::istringstream in(text);
    switch (detect(text)) {
        case FileKind::support_list:
            print_coherence(out, import_matrix(in, MatrixFormat::support_list), k);
            break;
        case FileKind::dense_csv:
            print_coherence(out, import_matrix(in, MatrixFormat::dense_csv), k);
            break;
        case FileKind::code: {
            const IngestedCode ic = read_code(in);
            std::visit([&](const auto& cw) {
                out << (std::is_same_v<std::decay_t<decltype(cw)>, TernaryCWCode> ? "ternary" : "binary")
                    << " code: n=" << cw.length() << " w=" << cw.weight() << " size=" << cw.size()
                    << " header d=" << ic.header_distance << " certified d=";
                if (cw.distance_is_infinite()) out << "inf";
                else out << cw.distance();
                out << " source=" << to_string(cw.source()) << '\n';
            }, ic.code);
            if (const auto* b = std::get_if<BinaryCWCode>(&ic.code)) {
                if (b->size() == 0) throw ValidationError("code has no words");
                print_coherence(out, from_binary_code(*b), k);
            } else {
                const auto& t = std::get<TernaryCWCode>(ic.code);
                if (t.size() == 0) throw ValidationError("code has no words");
                print_coherence(out, from_ternary_code(t), k);
            }
            break;
        }
        case FileKind::subspaces: {
            const SubspaceCode sc = read_subspace_code(in);
            out << "subspace code: q=" << sc.field().order() << " n=" << sc.ambient_dimension()
                << " k=" << sc.dimension() << " size=" << sc.size() << " d=" << sc.distance() << '\n';
            print_coherence(out, from_binary_code(subspace_to_code(sc)), k);
            break;
        }
    }
    return exit_ok;
}

// bounds -----------------------------------------------------------------------

void print_bound(std::ostream& out, const BoundReport& b) {
    out << b.name << "(n=" << b.n << ", d=" << b.distance << ", w=" << b.w;
    if (b.q) out << ", q=" << *b.q;
    out << ") = " << b.value << '\n';
}

int cmd_bounds(const CLI::App& sub, const BoundsArgs& a, std::ostream& out) {
    if (a.dims) {
        for (const char* f : {"--n", "--k", "--t"})
            if (sub.count(f) == 0) throw UsageError("bounds --dims requires --n, --k and --t");
        const std::string args =
            "(n=" + std::to_string(a.n) + ", k=" + std::to_string(a.k) + ", t=" + std::to_string(a.t) + ") = ";
        if (a.ternary) {
            out << "ternary-gilbert-dimension" << args << dimension_ternary_gilbert(a.n, a.k, a.t) << '\n';
        } else {
            out << "gilbert-dimension" << args << dimension_binary_gilbert(a.n, a.k, a.t) << '\n';
            out << "graham-sloane-dimension" << args << dimension_binary_gs(a.n, a.k, a.t) << '\n';
            out << "graham-sloane-dimension-prime" << args << dimension_binary_gs_prime(a.n, a.k, a.t) << '\n';
        }
        return exit_ok;
    }
    for (const char* f : {"--n", "--d", "--w"})
        if (sub.count(f) == 0) throw UsageError("bounds requires --n, --d and --w (or --dims with --n, --k, --t)");
    if (a.ternary) {
        print_bound(out, ternary_gilbert_bound(a.n, a.d, a.w));
    } else {
        print_bound(out, gilbert_bound(a.n, a.d, a.w));
        print_bound(out, graham_sloane_bound(a.n, a.d, a.w));
    }
    return exit_ok;
}

// recover ----------------------------------------------------------------------

int cmd_recover(const CLI::App& sub, const RecoverArgs& a, std::ostream& out, std::ostream& err) {
    std::istringstream in(read_file(a.file));
    const MeasurementMatrix m = import_matrix(in);
    ExperimentConfig config;
    config.k_min = a.k_min;
    config.k_max = sub.count("--k-max") ? a.k_max : std::max<std::uint32_t>(1, omp_guaranteed_order(m));
    config.trials = a.trials;
    config.seed = a.seed;
    config.model = value_model_from_string(a.model);
    if (config.k_min > config.k_max) throw UsageError("--k-min exceeds --k-max");

    const auto reports = run_experiment(m, config);
    std::ostringstream csv;
    write_reports_csv(csv, reports, a.timing);
    if (a.out.empty()) out << csv.str();
    else write_file(a.out, csv.str());

    int status = exit_ok;
    for (const auto& r : reports) {
        if (!r.note.empty()) err << "k=" << r.k << ": " << r.note << '\n';
        if (r.guaranteed && r.note.empty() && r.successes < r.trials) {
            err << "error: k=" << r.k << " is within the OMP guarantee but only " << r.successes << "/" << r.trials
                << " trials recovered exactly\n";
            status = exit_guarantee;
        }
    }
    return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Constant-weight-code sensing matrices: construction, analysis and recovery experiments", "cwsense"};
    app.require_subcommand(1);

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "Build a code, subspace code or matrix and write it to files");
    construct->add_option("construction", ca.construction,
                          "greedy | graham-sloane | sts | affine | spread | devore | ternary-greedy")
        ->required();
    construct->add_option("--n", ca.n, "Length, number of points, or ambient dimension");
    construct->add_option("--d", ca.d, "Minimum distance");
    construct->add_option("--w", ca.w, "Weight");
    construct->add_option("--p", ca.p, "Field order for devore");
    construct->add_option("--r", ca.r, "Polynomial degree bound for devore");
    construct->add_option("--q", ca.q, "Field order for affine and spread");
    construct->add_option("--k", ca.k, "Subspace dimension for spread");
    construct->add_flag("--coset", ca.coset, "Use proper cosets of each subspace (spread)");
    construct->add_flag("--signed", ca.is_signed, "Emit a matrix with seeded random signs on each support");
    construct->add_option("--seed", ca.seed, "Seed for --signed (default 0)");
    construct->add_flag("--emit-matrix", ca.emit_matrix, "Also write the measurement matrix");
    construct->add_option("--format", ca.format, "Matrix format: dense-csv | support-list")->capture_default_str();
    construct->add_option("--out-dir", ca.out_dir, "Output directory")->capture_default_str();
    construct->add_option("--stem", ca.stem, "Output file name stem");

    AnalyzeArgs aa;
    auto* analyze = app.add_subcommand("analyze", "Report exact coherence and bounds of a matrix or code file");
    analyze->add_option("file", aa.file, "Matrix, code or subspace file")->required();
    analyze->add_option("--k", aa.k, "Also report the coherence bound on delta_k");

    BoundsArgs ba;
    auto* bounds = app.add_subcommand("bounds", "Evaluate code-size lower bounds");
    bounds->add_option("--n", ba.n, "Length");
    bounds->add_option("--d", ba.d, "Minimum distance");
    bounds->add_option("--w", ba.w, "Weight");
    bounds->add_option("--k", ba.k, "Sparsity order (with --dims)");
    bounds->add_option("--t", ba.t, "Multiplier t (with --dims)");
    bounds->add_flag("--ternary", ba.ternary, "Ternary codes");
    bounds->add_flag("--dims", ba.dims, "Column counts for n rows at order k");

    RecoverArgs ra;
    auto* recover = app.add_subcommand("recover", "Seeded OMP recovery experiment on a matrix file");
    recover->add_option("file", ra.file, "Matrix file (dense-csv or support-list)")->required();
    recover->add_option("--k-min", ra.k_min, "Smallest sparsity")->capture_default_str();
    recover->add_option("--k-max", ra.k_max, "Largest sparsity (default: OMP-guaranteed order)");
    recover->add_option("--trials", ra.trials, "Trials per k")->capture_default_str();
    recover->add_option("--seed", ra.seed, "Experiment seed")->capture_default_str();
    recover->add_option("--model", ra.model, "Value model: rademacher | gaussian")->capture_default_str();
    recover->add_option("--out", ra.out, "CSV output file (default: stdout)");
    recover->add_flag("--timing", ra.timing, "Fill the seconds column with wall-clock times");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (*construct) return cmd_construct(*construct, ca, out);
        if (*analyze) return cmd_analyze(*analyze, aa, out);
        if (*bounds) return cmd_bounds(*bounds, ba, out);
        if (*recover) return cmd_recover(*recover, ra, out, err);
    } catch (const BudgetError& e) {
        err << "budget: " << e.what() << '\n';
        return exit_budget;
    } catch (const FormatError& e) {
        err << "format error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ValidationError& e) {
        err << "validation failed: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_usage;
}

}  // namespace cwsense::cli
