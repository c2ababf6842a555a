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

#include "cwsense/finitefield.hpp"

#include <algorithm>

#include "cwsense/error.hpp"

namespace cwsense {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;  // q itself is prime
    std::uint32_t m = 0;
    while (q % p == 0) {
        q /= p;
        ++m;
    }
    if (q != 1) return std::nullopt;
    return std::make_pair(static_cast<std::uint32_t>(p), m);
}

namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * b[i]) % p);
        trim(a);
    }
    return a;
}

}  // namespace

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
    const std::size_t deg = poly.size() - 1;
    if (poly.empty() || poly.back() != 1) throw DomainError("is_irreducible expects a monic polynomial");
    if (deg <= 1) return deg == 1;
    const Poly f(poly.begin(), poly.end());
    // Every reducible f has a monic factor of degree <= deg/2.
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

struct FiniteField::Data {
    std::uint32_t p;
    std::uint32_t m;
    std::uint32_t q;
    Poly modulus;
    std::vector<std::uint32_t> pw;  // p^i for i <= m
};

FiniteField FiniteField::make(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
    if (m == 0) throw DomainError("field degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > max_order) throw DomainError("field order " + std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^16");
    }
    auto d = std::make_shared<Data>();
    d->p = p;
    d->m = m;
    d->q = static_cast<std::uint32_t>(q);
    d->pw.resize(m + 1);
    d->pw[0] = 1;
    for (std::uint32_t i = 1; i <= m; ++i) d->pw[i] = d->pw[i - 1] * p;

    if (m == 1) {
        d->modulus = {0, 1};
    } else {
        // Enumerate (c_{m-1}, ..., c_0) lexicographically, i.e. code = sum c_i p^i ascending.
        bool found = false;
        for (std::uint64_t code = 0; code < q && !found; ++code) {
            Poly f(m + 1, 0);
            std::uint64_t c = code;
            for (std::uint32_t i = 0; i < m; ++i) {
                f[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            f[m] = 1;
            if (is_irreducible(f, p)) {
                d->modulus = std::move(f);
                found = true;
            }
        }
        if (!found) throw InternalError("no irreducible polynomial found for GF(" + std::to_string(q) + ")");
    }
    return FiniteField(std::move(d));
}

std::uint32_t FiniteField::characteristic() const noexcept { return data_->p; }
std::uint32_t FiniteField::degree() const noexcept { return data_->m; }
std::uint32_t FiniteField::order() const noexcept { return data_->q; }
const std::vector<std::uint32_t>& FiniteField::modulus() const noexcept { return data_->modulus; }

std::string FiniteField::name() const { return "GF(" + std::to_string(data_->q) + ")"; }

bool operator==(const FiniteField& a, const FiniteField& b) noexcept {
    return a.data_ == b.data_ || (a.data_->p == b.data_->p && a.data_->modulus == b.data_->modulus);
}

std::vector<std::uint32_t> FiniteField::coefficients(Index a) const {
    const auto& d = *data_;
    if (a >= d.q) throw DomainError("element index out of range for " + name());
    std::vector<std::uint32_t> c(d.m);
    for (std::uint32_t i = 0; i < d.m; ++i) {
        c[i] = a % d.p;
        a /= d.p;
    }
    return c;
}

FiniteField::Index FiniteField::from_coefficients(std::span<const std::uint32_t> c) const {
    const auto& d = *data_;
    if (c.size() != d.m) throw DomainError("coefficient vector length must equal field degree");
    Index a = 0;
    for (std::uint32_t i = 0; i < d.m; ++i) {
        if (c[i] >= d.p) throw DomainError("coefficient not reduced mod p");
        a += c[i] * d.pw[i];
    }
    return a;
}

FiniteField::Index FiniteField::add(Index a, Index b) const {
    const auto& d = *data_;
    if (d.m == 1) return (a + b) % d.p;
    Index r = 0;
    for (std::uint32_t i = 0; i < d.m; ++i) {
        r += ((a % d.p + b % d.p) % d.p) * d.pw[i];
        a /= d.p;
        b /= d.p;
    }
    return r;
}

FiniteField::Index FiniteField::neg(Index a) const {
    const auto& d = *data_;
    if (d.m == 1) return (d.p - a) % d.p;
    Index r = 0;
    for (std::uint32_t i = 0; i < d.m; ++i) {
        r += ((d.p - a % d.p) % d.p) * d.pw[i];
        a /= d.p;
    }
    return r;
}

FiniteField::Index FiniteField::sub(Index a, Index b) const { return add(a, neg(b)); }

FiniteField::Index FiniteField::mul(Index a, Index b) const {
    const auto& d = *data_;
    if (d.m == 1) return static_cast<Index>((static_cast<std::uint64_t>(a) * b) % d.p);
    // Schoolbook product followed by reduction by the monic modulus.
    std::uint32_t ca[32] = {};
    std::uint32_t cb[32] = {};
    std::uint64_t prod[64] = {};
    for (std::uint32_t i = 0; i < d.m; ++i) {
        ca[i] = a % d.p;
        a /= d.p;
        cb[i] = b % d.p;
        b /= d.p;
    }
    for (std::uint32_t i = 0; i < d.m; ++i)
        for (std::uint32_t j = 0; j < d.m; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % d.p;
    for (std::uint32_t k = 2 * d.m - 2; k >= d.m; --k) {
        const std::uint64_t lead = prod[k];
        if (lead == 0) continue;
        prod[k] = 0;
        for (std::uint32_t i = 0; i < d.m; ++i)
            prod[k - d.m + i] = (prod[k - d.m + i] + (d.p - lead) * d.modulus[i]) % d.p;
    }
    Index r = 0;
    for (std::uint32_t i = 0; i < d.m; ++i) r += static_cast<Index>(prod[i]) * d.pw[i];
    return r;
}

FiniteField::Index FiniteField::pow(Index a, std::uint64_t e) const {
    Index result = 1;
    Index base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FiniteField::Index FiniteField::inv(Index a) const {
    if (a == 0) throw DomainError("inversion of zero in " + name());
    return pow(a, data_->q - 2);
}

FieldElement FiniteField::element(Index a) const {
    if (a >= data_->q) throw DomainError("element index out of range for " + name());
    return FieldElement(*this, a);
}

FieldElement FiniteField::zero() const { return FieldElement(*this, 0); }
FieldElement FiniteField::one() const { return FieldElement(*this, 1); }

std::vector<FieldElement> FiniteField::elements() const {
    std::vector<FieldElement> out;
    out.reserve(data_->q);
    for (Index a = 0; a < data_->q; ++a) out.emplace_back(*this, a);
    return out;
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(FiniteField field, FiniteField::Index value) : field_(std::move(field)), value_(value) {
    if (value_ >= field_.order()) throw DomainError("element index out of range for " + field_.name());
}

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!(a.field() == b.field()))
        throw DomainError("field mismatch: " + a.field().name() + " vs " + b.field().name());
}

}  // namespace

FieldElement FieldElement::inv() const { return FieldElement(field_, field_.inv(value_)); }
FieldElement FieldElement::pow(std::uint64_t e) const { return FieldElement(field_, field_.pow(value_, e)); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return FieldElement(a.field_, a.field_.add(a.value_, b.value_));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return FieldElement(a.field_, a.field_.sub(a.value_, b.value_));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return FieldElement(a.field_, a.field_.mul(a.value_, b.value_));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return FieldElement(a.field_, a.field_.mul(a.value_, a.field_.inv(b.value_)));
}

FieldElement operator-(const FieldElement& a) { return FieldElement(a.field_, a.field_.neg(a.value_)); }

bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.value_ == b.value_ && a.field_ == b.field_;
}

FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement neg(const FieldElement& a) { return -a; }
FieldElement inv(const FieldElement& a) { return a.inv(); }

FieldElement poly_eval(std::span<const FieldElement> coeffs, const FieldElement& x) {
    FieldElement acc = x.field().zero();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

FiniteField::Index poly_eval(const FiniteField& f, std::span<const FiniteField::Index> coeffs,
                             FiniteField::Index x) {
    FiniteField::Index acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
    return acc;
}

}  // namespace cwsense
