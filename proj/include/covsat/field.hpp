// covsat: constructing and verifying short covering codes and saturating sets.
//
// Copyright 2026 The covsat authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "covsat/errors.hpp"

namespace covsat::gf {

/// Canonical index of a field element.  Index 0 is the additive zero and
/// index 1 the multiplicative one; indices below the characteristic p are
/// the integers 0..p-1 of the prime subfield in every context.
using elem_t = std::uint32_t;

/// Largest supported field order.  Log/antilog tables are O(q), so the cap
/// bounds memory; 2^22 comfortably covers every extension the constructions
/// need (e.g. order 11^6 = 1,771,561).
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 22;

/// Immutable arithmetic context for a finite field GF(q).
///
/// Elements are canonical indices (see elem_t).  For a field built directly
/// over its prime subfield, index i encodes the coefficient vector of the
/// element as a polynomial in the canonical generator: i = sum c_j * p^j.
/// For an extension tower built over a base context of order q0, index
/// i = sum idx(d_j) * q0^j where d_j are the base-field digits.  The modulus
/// is always the monic irreducible polynomial of the right degree whose
/// coefficient tuple (c_0, ..., c_{k-1}) has the smallest base-q0 integer
/// encoding; together with the fixed primitive-element choice (smallest
/// canonical index that generates the multiplicative group) this makes every
/// context bit-reproducible across runs and platforms.
///
/// Copying a Field is cheap (shared immutable payload).
class Field {
 public:
  Field() = default;

  /// Builds GF(q) over its prime subfield.  q must be a prime power not
  /// exceeding kMaxFieldOrder.
  [[nodiscard]] static Field of_order(std::uint64_t q);

  [[nodiscard]] bool valid() const noexcept { return d_ != nullptr; }

  /// Field order q.
  [[nodiscard]] std::uint64_t order() const noexcept;
  /// Characteristic p.
  [[nodiscard]] std::uint32_t characteristic() const noexcept;
  /// Absolute degree k with q = p^k.
  [[nodiscard]] std::uint32_t degree() const noexcept;

  /// True when this context was built as an extension of a non-prime base.
  [[nodiscard]] bool is_tower() const noexcept;
  /// Base context of a tower (the prime field context otherwise... only
  /// meaningful for towers; throws invalid_argument_error when not a tower).
  [[nodiscard]] const Field& base() const;
  /// Degree over the immediate base (== degree() unless a tower).
  [[nodiscard]] std::uint32_t relative_degree() const noexcept;
  /// Order of the immediate base (p unless a tower).
  [[nodiscard]] std::uint64_t base_order() const noexcept;
  /// Modulus coefficients c_0..c_k over the immediate base, ascending degree,
  /// including the leading 1.
  [[nodiscard]] const std::vector<elem_t>& modulus() const noexcept;

  // ---- arithmetic on canonical indices ---------------------------------
  [[nodiscard]] elem_t add(elem_t a, elem_t b) const;
  [[nodiscard]] elem_t sub(elem_t a, elem_t b) const;
  [[nodiscard]] elem_t neg(elem_t a) const;
  [[nodiscard]] elem_t mul(elem_t a, elem_t b) const;
  /// Multiplicative inverse; throws invalid_argument_error on 0.
  [[nodiscard]] elem_t inv(elem_t a) const;
  /// a / b; throws invalid_argument_error when b == 0.
  [[nodiscard]] elem_t div(elem_t a, elem_t b) const;
  /// a^e with the convention pow(0, 0) == 1 used by the lift constructions.
  [[nodiscard]] elem_t pow(elem_t a, std::uint64_t e) const;

  /// Smallest-index generator of the multiplicative group.
  [[nodiscard]] elem_t primitive_element() const noexcept;

  /// Digits of a over the immediate base, ascending powers, exactly
  /// relative_degree() entries.
  [[nodiscard]] std::vector<elem_t> digits(elem_t a) const;
  /// Inverse of digits().
  [[nodiscard]] elem_t from_digits(const std::vector<elem_t>& d) const;

  /// Structural equality: same characteristic, same tower shape, same
  /// moduli.  Because construction is canonical, two equal contexts have
  /// identical tables.
  [[nodiscard]] bool operator==(const Field& other) const noexcept;
  [[nodiscard]] bool operator!=(const Field& other) const noexcept {
    return !(*this == other);
  }

  /// Human-readable description, e.g. "GF(9) = GF(3^2), modulus [1 0 1]".
  [[nodiscard]] std::string describe() const;

 private:
  struct Data;
  explicit Field(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  [[nodiscard]] const Data& data() const;

  std::shared_ptr<const Data> d_;

  friend Field build_extension_field(const Field&, std::uint32_t);
};

/// Builds GF(q) over its prime subfield (the canonical entry point).
[[nodiscard]] Field build_field(std::uint64_t q);

/// Builds the degree-m tower GF(q0^m) over an existing base context.  The
/// canonical index of a tower element is the base-q0 encoding of its digit
/// vector, so the base embeds as the identity on indices.
[[nodiscard]] Field build_extension_field(const Field& base, std::uint32_t m);

/// Extension bundle: the tower context together with the maps the lift
/// constructions need.
struct ExtensionMap {
  Field base;
  Field ext;
  std::uint32_t m = 0;

  /// Image of a base element in the extension (identity on canonical
  /// indices by the tower index convention).
  [[nodiscard]] elem_t embed(elem_t b) const noexcept { return b; }
  /// Base-field digit vector of an extension element, ascending powers,
  /// exactly m entries.
  [[nodiscard]] std::vector<elem_t> rep(elem_t x) const { return ext.digits(x); }
};

/// Convenience builder for ExtensionMap.
[[nodiscard]] ExtensionMap build_extension(const Field& base, std::uint32_t m);

/// Table of the unique-up-to-automorphism injective homomorphism
/// GF(small) -> GF(big): entry [a] is the image of a.  Both contexts must
/// share a characteristic and deg(small) must divide deg(big).  The map is
/// pinned by sending the canonical generator of `small` to the smallest-index
/// root of small's (prime-field) modulus inside `big`, which makes it
/// deterministic.
[[nodiscard]] std::vector<elem_t> subfield_embed(const Field& small, const Field& big);

}  // namespace covsat::gf
