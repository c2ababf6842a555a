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

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cwsense/codes.hpp"
#include "cwsense/finitefield.hpp"

namespace cwsense {

// ---------------------------------------------------------------------------
// Steiner triple systems

enum class StsConstruction { bose, skolem, ingested };

using Triple = std::array<std::uint32_t, 3>;

/// S(2, 3, n): every pair of points lies in exactly one block. Validated on construction.
class SteinerTripleSystem {
public:
    SteinerTripleSystem(std::uint32_t n, std::vector<Triple> blocks, StsConstruction construction);

    std::uint32_t points() const noexcept { return n_; }
    const std::vector<Triple>& blocks() const noexcept { return blocks_; }
    StsConstruction construction() const noexcept { return construction_; }

private:
    std::uint32_t n_;
    std::vector<Triple> blocks_;
    StsConstruction construction_;
};

/// Bose construction over Z_{2s+1} x Z_3, n = 6s + 3.
SteinerTripleSystem sts_bose(std::uint32_t n);

/// Skolem construction over {inf} u Z_{2s} x Z_3, n = 6s + 1, s >= 1.
SteinerTripleSystem sts_skolem(std::uint32_t n);

/// Bose or Skolem by residue class of n mod 6.
SteinerTripleSystem steiner_triple_system(std::uint32_t n);

/// Blocks as weight-3 supports; distance 4 for n >= 7.
BinaryCWCode steiner_to_code(const SteinerTripleSystem& sts);

/// Reads the blocks of an ingested weight-3 code back as a triple system (throws if not one).
SteinerTripleSystem sts_from_code(const BinaryCWCode& code);

/// True iff every t-subset of the points lies in exactly one word of the code.
bool is_steiner_system(const BinaryCWCode& code, std::uint32_t t);

// ---------------------------------------------------------------------------
// Affine plane

/// Lines of AG(2, q) as a (q^2, 2(q-1), q) code of size q^2 + q. Point (x, y) has index x*q + y
/// (field element indices); lines y = a x + b come first (a-major), then verticals x = c.
BinaryCWCode affine_plane_code(std::uint32_t q);

// ---------------------------------------------------------------------------
// Subspace codes

/// Coordinate vector over GF(q); entries are field element indices.
using FieldVector = std::vector<FiniteField::Index>;

/// Integer encoding sum v_i q^i of a coordinate vector.
std::uint64_t encode_vector(std::uint32_t q, const FieldVector& v);
FieldVector decode_vector(std::uint32_t q, std::uint32_t length, std::uint64_t code);

/// Rank of the row space over the field (Gaussian elimination).
std::uint32_t rank(const FiniteField& f, std::vector<FieldVector> rows);

/// Reduced row echelon form with zero rows dropped.
std::vector<FieldVector> row_reduce(const FiniteField& f, std::vector<FieldVector> rows);

/// 2k - 2 dim(U & V) for subspaces given by bases.
std::uint32_t subspace_distance(const FiniteField& f, const std::vector<FieldVector>& u,
                                const std::vector<FieldVector>& v);

/// Encodings of all q^k vectors of the span (including zero), ascending.
std::vector<std::uint64_t> span_encodings(const FiniteField& f, const std::vector<FieldVector>& basis);

/*
  Constant-dimension code: k-dimensional subspaces of GF(q)^n, each stored
  as a reduced echelon basis. The minimum subspace distance is certified by
  an exhaustive pair scan; a one-member code reports 2k.
*/
class SubspaceCode {
public:
    SubspaceCode(FiniteField field, std::uint32_t n, std::uint32_t k, std::vector<std::vector<FieldVector>> bases);

    const FiniteField& field() const noexcept { return field_; }
    std::uint32_t ambient_dimension() const noexcept { return n_; }
    std::uint32_t dimension() const noexcept { return k_; }
    std::uint32_t distance() const noexcept { return d_; }
    std::size_t size() const noexcept { return bases_.size(); }
    const std::vector<std::vector<FieldVector>>& bases() const noexcept { return bases_; }

private:
    FiniteField field_;
    std::uint32_t n_;
    std::uint32_t k_;
    std::uint32_t d_;
    std::vector<std::vector<FieldVector>> bases_;
};

/// Most members a subspace code may have before the exhaustive distance scan is refused.
inline constexpr std::size_t subspace_code_budget = 4096;

/// Desarguesian spread: the 1-dimensional GF(q^k)-subspaces of GF(q^k)^(n/k), read over GF(q).
SubspaceCode spread_code(std::uint32_t q, std::uint32_t n, std::uint32_t k);

/// Nonzero points of each subspace as a (q^n - 1, 2q^k - 2q^(k-t), q^k - 1) code, d = 2t.
/// Position of vector v is encode_vector(v) - 1.
BinaryCWCode subspace_to_code(const SubspaceCode& code);

struct CosetCode {
    BinaryCWCode code;
    std::uint64_t formula_size;  // q^(n-k-1) |C|
};

/// Proper cosets v + U (v not in U) of every member as weight-q^k words, deduplicated by
/// support; certified distance >= 2q^k - 2q^(k-t).
CosetCode subspace_to_coset_code(const SubspaceCode& code);

/// Header `q n k d`, then one member per line as k basis-row encodings.
void write_subspace_code(std::ostream& os, const SubspaceCode& code);
SubspaceCode read_subspace_code(std::istream& is);

}  // namespace cwsense
