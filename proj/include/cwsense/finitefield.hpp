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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cwsense {

bool is_prime(std::uint64_t n);

/// (p, m) with q == p^m, or nullopt if q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

class FieldElement;

/*
  GF(p^m) with q = p^m <= 2^16.

  Elements are identified by an index in [0, q): the coefficient vector
  (c_0, ..., c_{m-1}) of c_0 + c_1 x + ... + c_{m-1} x^{m-1} encoded as
  sum c_i p^i. For m == 1 the index is the residue itself. Index-level
  arithmetic is exposed for the constructions; FieldElement wraps an index
  together with its field for checked arithmetic.

  The modulus is the first monic irreducible of degree m when the lower
  coefficients (c_{m-1}, ..., c_0) are enumerated lexicographically
  (GF(4): x^2+x+1, GF(8): x^3+x+1, GF(9): x^2+1, GF(16): x^4+x+1).

  Fields are cheap handles to immutable shared state.
*/
class FiniteField {
public:
    using Index = std::uint32_t;

    static constexpr std::uint32_t max_order = 1u << 16;

    static FiniteField make(std::uint32_t p, std::uint32_t m = 1);

    std::uint32_t characteristic() const noexcept;
    std::uint32_t degree() const noexcept;
    std::uint32_t order() const noexcept;

    /// Modulus coefficients, constant term first, length degree()+1, monic.
    const std::vector<std::uint32_t>& modulus() const noexcept;

    Index add(Index a, Index b) const;
    Index sub(Index a, Index b) const;
    Index neg(Index a) const;
    Index mul(Index a, Index b) const;
    Index inv(Index a) const;
    Index pow(Index a, std::uint64_t e) const;

    std::vector<std::uint32_t> coefficients(Index a) const;
    Index from_coefficients(std::span<const std::uint32_t> c) const;

    FieldElement element(Index a) const;
    FieldElement zero() const;
    FieldElement one() const;
    std::vector<FieldElement> elements() const;

    std::string name() const;

    /// Same characteristic and modulus; make() is deterministic so equal parameters compare equal.
    friend bool operator==(const FiniteField& a, const FiniteField& b) noexcept;

private:
    struct Data;
    explicit FiniteField(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
    std::shared_ptr<const Data> data_;
};

inline FiniteField make_field(std::uint32_t p, std::uint32_t m = 1) { return FiniteField::make(p, m); }

/// Monic irreducibility test over GF(p) by trial division; coefficients constant term first.
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);

class FieldElement {
public:
    FieldElement(FiniteField field, FiniteField::Index value);

    const FiniteField& field() const noexcept { return field_; }
    FiniteField::Index index() const noexcept { return value_; }
    std::vector<std::uint32_t> coefficients() const { return field_.coefficients(value_); }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElement inv() const;
    FieldElement pow(std::uint64_t e) const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a);
    friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
    FiniteField field_;
    FiniteField::Index value_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement inv(const FieldElement& a);

/// Horner evaluation of sum coeffs[i] x^i.
FieldElement poly_eval(std::span<const FieldElement> coeffs, const FieldElement& x);

/// Index-level Horner evaluation, coefficients constant term first.
FiniteField::Index poly_eval(const FiniteField& f, std::span<const FiniteField::Index> coeffs,
                             FiniteField::Index x);

}  // namespace cwsense
