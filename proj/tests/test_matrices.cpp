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

#include <doctest.h>

#include <sstream>

#include "cwsense/codes.hpp"
#include "cwsense/designs.hpp"
#include "cwsense/error.hpp"
#include "cwsense/matrices.hpp"
#include "cwsense/random.hpp"
#include "oracles.hpp"

using namespace cwsense;

namespace {

BinaryCWCode fano() { return steiner_to_code(steiner_triple_system(7)); }

std::string exported(const MeasurementMatrix& m, MatrixFormat f) {
    std::ostringstream out;
    export_matrix(out, m, f);
    return out.str();
}

MeasurementMatrix imported(const std::string& s) {
    std::istringstream in(s);
    return import_matrix(in);
}

}  // namespace

TEST_CASE("rationals") {
    CHECK(to_string(Rational(2, 6)) == "1/3");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK(parse_rational("3") == Rational(3));
    CHECK_THROWS_AS(parse_rational("1/0"), FormatError);
    CHECK_THROWS_AS(parse_rational("x"), FormatError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), FormatError);
}

TEST_CASE("matrix construction checks its invariants") {
    CHECK_THROWS_AS(MeasurementMatrix(3, {}), ValidationError);
    CHECK_THROWS_AS(MeasurementMatrix(3, {{{0, 1}}, {{0, 1}, {1, 1}}}), ValidationError);
    CHECK_THROWS_AS(MeasurementMatrix(3, {{{3, 1}}}), ValidationError);
    CHECK_THROWS_AS(MeasurementMatrix(3, {{{0, 2}}}), ValidationError);
    CHECK_THROWS_AS(MeasurementMatrix(3, {{{0, 1}, {0, -1}}}), ValidationError);
    const MeasurementMatrix m(3, {{{2, 1}, {0, -1}}});
    CHECK(m.column(0).front().pos == 0);
    CHECK_FALSE(m.is_binary());
}

TEST_CASE("from_binary_code, examples") {
    const auto m = from_binary_code(fano());
    CHECK(m.rows() == 7);
    CHECK(m.cols() == 7);
    CHECK(m.theoretical_bound() == Rational(1, 3));
    CHECK(m.coherence() == Rational(1, 3));
    CHECK(m.is_binary());

    const BinaryCWCode disjoint(6, 3, {{0, 1, 2}, {3, 4, 5}}, CodeSource::ingested);
    const auto d = from_binary_code(disjoint);
    CHECK(d.theoretical_bound() == Rational(0));
    CHECK(d.coherence() == Rational(0));

    const auto a = from_binary_code(affine_plane_code(3));
    CHECK(a.rows() == 9);
    CHECK(a.cols() == 12);
    CHECK(a.theoretical_bound() == Rational(1, 3));
    CHECK(a.provenance().construction == "affine-code");
    CHECK(a.provenance().params == "n=9 d=4 w=3");
}

TEST_CASE("signed matrices") {
    const auto code = fano();
    const auto a = from_binary_code_signed(code, 11);
    const auto b = from_binary_code_signed(code, 11);
    CHECK(a == b);
    CHECK(exported(a, MatrixFormat::support_list) == exported(b, MatrixFormat::support_list));
    CHECK(a.provenance().seed == 11u);
    CHECK(a.provenance().construction == "signed-steiner-code");
    CHECK(a.theoretical_bound() == Rational(1, 3));
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto m = from_binary_code_signed(code, seed);
        CHECK(m.coherence() <= Rational(1, 3));
        for (std::uint32_t j = 0; j < m.cols(); ++j) {
            REQUIRE(m.column(j).size() == 3);
            for (std::uint32_t i = 0; i < 3; ++i) CHECK(m.column(j)[i].pos == code.words()[j][i]);
        }
    }
    const auto plus = from_binary_code_signed(code, [](std::uint32_t, std::uint32_t) { return 1; });
    CHECK(plus.columns() == from_binary_code(code).columns());
    CHECK(plus.dense() == from_binary_code(code).dense());
    CHECK_THROWS_AS(from_binary_code_signed(code, [](std::uint32_t, std::uint32_t) { return 0; }), DomainError);
}

TEST_CASE("signed matrix sign contract") {
    const auto code = fano();
    const auto m = from_binary_code_signed(code, 5);
    for (std::uint32_t j = 0; j < m.cols(); ++j) {
        SplitMix64 stream = SplitMix64(5).split(j);
        for (const auto& e : m.column(j)) CHECK(e.sign == ((stream.next() >> 63) ? -1 : 1));
    }
}

TEST_CASE("from_ternary_code") {
    const SignedWord c1{{0, 1}, {1, 1}}, c2{{0, 1}, {1, -1}};
    CHECK(inner_product(c1, c2) == 0);
    const TernaryCWCode pair(3, 2, {c1, c2}, CodeSource::ingested);
    const auto m = from_ternary_code(pair);
    CHECK(m.coherence() == Rational(0));
    CHECK(m.provenance().construction == "ternary-ingested-code");

    const TernaryCWCode single(3, 2, {c1}, CodeSource::ingested);
    CHECK(from_ternary_code(single).coherence() == Rational(0));

    const auto g = greedy_ternary(6, 4, 3);
    const auto gm = from_ternary_code(g);
    CHECK(gm.theoretical_bound() == Rational(2, 3));
    CHECK(gm.coherence() <= *gm.theoretical_bound());
    CHECK(gm.max_inner_product() == oracle::max_inner_dense(gm));
}

TEST_CASE("ternary words can be anti-correlated beyond 1 - d/(2w)") {
    const SignedWord a{{0, 1}, {1, 1}, {2, 1}}, b{{1, -1}, {2, -1}, {3, 1}};
    CHECK(oracle::hamming(oracle::dense(6, a), oracle::dense(6, b)) == 4);
    CHECK(inner_product(a, b) == -2);
    const TernaryCWCode pair(6, 3, {a, b}, CodeSource::ingested);
    CHECK(pair.distance() == 4);
    const auto m = from_ternary_code(pair);
    CHECK(m.coherence() == Rational(2, 3));
    CHECK(m.coherence() > code_coherence_bound(4, 3));
    CHECK(m.coherence() <= *m.theoretical_bound());
}

TEST_CASE("ternary coherence bound holds on random ternary codes") {
    CHECK(ternary_coherence_bound(4, 3) == Rational(2, 3));
    CHECK(ternary_coherence_bound(2, 3) == Rational(1));
    CHECK(ternary_coherence_bound(6, 3) == Rational(0));
    CHECK(ternary_coherence_bound(8, 3) == Rational(0));
    for (std::uint32_t n = 4; n <= 7; ++n)
        for (std::uint32_t w = 2; w <= 3; ++w)
            for (std::uint32_t d = 2; d <= 2 * w; ++d) {
                const auto m = from_ternary_code(greedy_ternary(n, d, w));
                CHECK(m.coherence() <= ternary_coherence_bound(d, w));
            }
}

TEST_CASE("empty codes have no matrix") {
    const BinaryCWCode empty(5, 2, {}, CodeSource::ingested);
    CHECK_THROWS_AS(from_binary_code(empty), DomainError);
    CHECK_THROWS_AS(from_binary_code_signed(empty, 1), DomainError);
}

TEST_CASE("devore, examples") {
    const auto m32 = devore(3, 2);
    CHECK(m32.rows() == 9);
    CHECK(m32.cols() == 9);
    CHECK(m32.coherence() == Rational(1, 3));
    CHECK(m32.id() == "devore(p=3 r=2)");

    const auto m53 = devore(5, 3);
    CHECK(m53.rows() == 25);
    CHECK(m53.cols() == 125);
    CHECK(m53.coherence() <= Rational(2, 5));
    CHECK(m53.theoretical_bound() == Rational(2, 5));

    const auto m22 = devore(2, 2);
    CHECK(m22.rows() == 4);
    CHECK(m22.cols() == 4);
    CHECK(m22.coherence() <= Rational(1, 2));

    CHECK_THROWS_AS(devore(6, 2), DomainError);
    CHECK_THROWS_AS(devore(3, 1), DomainError);
    CHECK_THROWS_AS(devore(11, 6), BudgetError);
}

TEST_CASE("devore column layout") {
    // Column j is the polynomial with coefficient indices (j mod q, j / q); row a*q + f(a).
    const auto m = devore(3, 2);
    CHECK(m.column(0) == Column{{0, 1}, {3, 1}, {6, 1}});
    CHECK(m.column(1) == Column{{1, 1}, {4, 1}, {7, 1}});
    CHECK(m.column(3) == Column{{0, 1}, {4, 1}, {8, 1}});
}

TEST_CASE("devore inner products are at most r - 1") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u})
        for (std::uint32_t r = 2; r <= 3; ++r) {
            CAPTURE(q);
            CAPTURE(r);
            const auto m = devore(q, r);
            CHECK(oracle::max_inner_dense(m) <= static_cast<long>(r - 1));
            CHECK(m.max_inner_product() == oracle::max_inner_dense(m));
            CHECK(m.coherence() <= *m.theoretical_bound());
        }
    const auto m73 = devore(7, 3);
    CHECK(m73.coherence() == Rational(2, 7));
    CHECK(coherence(m73).sparsity_order == 4);
}

TEST_CASE("coherence reports") {
    const auto f = coherence(from_binary_code(fano()), 3);
    CHECK(f.coherence == Rational(1, 3));
    CHECK(f.max_inner_product == 1);
    CHECK(f.sparsity_order == 4);
    CHECK(f.delta_bound == Rational(2, 3));
    CHECK(f.within_bound());

    const MeasurementMatrix identity(4, {{{0, 1}}, {{1, 1}}, {{2, 1}}, {{3, 1}}});
    const auto i = coherence(identity);
    CHECK(i.coherence == Rational(0));
    CHECK(i.sparsity_order == 4);
    CHECK(i.welch.degenerate);
    CHECK_FALSE(i.delta_bound.has_value());
    CHECK(omp_guaranteed_order(identity) == 4);

    CHECK(omp_guaranteed_order(from_binary_code(fano())) == 1);
    CHECK(omp_guaranteed_order(devore(7, 2)) == 3);
    CHECK(omp_guaranteed_order(devore(5, 2)) == 2);
}

TEST_CASE("welch bound") {
    const auto d = welch_bound(5, 5);
    CHECK(d.degenerate);
    CHECK(d.standard == 0.0);
    CHECK(d.printed == 0.0);

    const auto w = welch_bound(9, 12);
    CHECK_FALSE(w.degenerate);
    CHECK(w.standard == doctest::Approx(std::sqrt(3.0 / 99.0)).epsilon(1e-12));
    CHECK(w.standard == doctest::Approx(0.17408).epsilon(1e-4));
    CHECK(w.printed == doctest::Approx(std::sqrt(12.0 / 27.0)).epsilon(1e-12));
    CHECK(w.standard <= 1.0 / 3.0);

    const auto v = welch_bound(25, 125);
    CHECK(v.standard == doctest::Approx(0.17961).epsilon(1e-4));
    CHECK(v.standard <= 0.4);
}

TEST_CASE("welch bound never exceeds measured coherence") {
    std::vector<MeasurementMatrix> ms;
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) ms.push_back(from_binary_code(affine_plane_code(q)));
    for (std::uint32_t p : {2u, 3u, 5u}) ms.push_back(devore(p, 3));
    for (std::uint32_t n : {7u, 9u, 13u, 15u}) ms.push_back(from_binary_code(steiner_to_code(steiner_triple_system(n))));
    ms.push_back(from_binary_code(greedy_binary(12, 4, 4)));
    for (const auto& m : ms) {
        const auto r = coherence(m);
        if (r.welch.degenerate) continue;
        CHECK(r.welch.standard <= boost::rational_cast<double>(r.coherence) + 1e-12);
    }
}

TEST_CASE("code coherence bound") {
    CHECK(code_coherence_bound(4, 3) == Rational(1, 3));
    CHECK(code_coherence_bound(10, 6) == Rational(1, 6));
    CHECK(code_coherence_bound(8, 3) == Rational(0));
}

TEST_CASE("exact coherence matches the floating oracle") {
    SplitMix64 rng(3);
    for (int t = 0; t < 10; ++t) {
        const auto n = static_cast<std::uint32_t>(8 + rng.uniform_below(12));
        const auto w = static_cast<std::uint32_t>(2 + rng.uniform_below(4));
        const auto code = greedy_binary(n, 4, w);
        const auto m = from_binary_code_signed(code, rng.next());
        CHECK(std::abs(boost::rational_cast<double>(m.coherence()) - oracle::float_coherence(m)) < 1e-12);
    }
}

TEST_CASE("dense export") {
    const MeasurementMatrix id2(2, {{{0, 1}}, {{1, 1}}});
    CHECK(exported(id2, MatrixFormat::dense_csv) == "1,0\n0,1\n");
    const auto back = imported("1,0\n0,1\n");
    CHECK(back == id2);
    CHECK(back.id() == "matrix");

    const auto m = devore(3, 2);
    const auto text = exported(m, MatrixFormat::dense_csv);
    CHECK(text.rfind("# construction: devore\n# params: p=3 r=2\n# bound: 1/3\n1,0,0,1,0,0,1,0,0\n", 0) == 0);
    CHECK(exported(imported(text), MatrixFormat::dense_csv) == text);
    CHECK(imported(text) == m);
}

TEST_CASE("support-list export") {
    const auto m = from_binary_code_signed(fano(), 21);
    const auto text = exported(m, MatrixFormat::support_list);
    CHECK(text.rfind("#!support-list\n# construction: signed-steiner-code\n# params: n=7 d=4 w=3\n# seed: 21\n"
                     "# bound: 1/3\n7 7 3\n",
                     0) == 0);
    const auto back = imported(text);
    CHECK(back == m);
    CHECK(back.provenance().seed == 21u);
    CHECK(exported(back, MatrixFormat::support_list) == text);

    const auto dense = exported(m, MatrixFormat::dense_csv);
    CHECK(exported(imported(dense), MatrixFormat::dense_csv) == dense);
    CHECK(imported(dense) == m);
}

TEST_CASE("matrix import diagnostics") {
    CHECK_THROWS_AS(imported(""), FormatError);
    CHECK_THROWS_AS(imported("1,0\n0\n"), FormatError);
    CHECK_THROWS_AS(imported("1,2\n"), FormatError);
    CHECK_THROWS_AS(imported("1,0\n1,0\n"), FormatError);  // unequal column weights
    CHECK_THROWS_AS(imported("0,0\n"), FormatError);
    CHECK_THROWS_AS(imported("#!support-list\n3 1\n"), FormatError);
    CHECK_THROWS_AS(imported("#!support-list\n3 2 1\n+0\n"), FormatError);
    CHECK_THROWS_AS(imported("#!support-list\n3 1 1\n+3\n"), FormatError);
    CHECK_THROWS_AS(imported("#!support-list\n3 1 1\n0\n"), FormatError);
    CHECK_THROWS_AS(imported("#!support-list\n3 1 2\n+0\n"), FormatError);
    try {
        imported("# c\n1,0\n0,x\n");
        FAIL("expected a format error");
    } catch (const FormatError& e) {
        CHECK(e.line() == 3);
    }
    const auto ok = imported("#!support-list\n# note: anything\n3 2 1\n-2\n+0\n");
    CHECK(ok.cols() == 2);
    CHECK(ok.column(0) == Column{{2, -1}});
}

TEST_CASE("coherence cache is shared by copies") {
    const auto m = devore(5, 2);
    const auto copy = m;
    CHECK(copy.max_inner_product() == 1);
    CHECK(m.max_inner_product() == 1);
}
