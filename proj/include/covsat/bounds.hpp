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
#include <optional>
#include <string>
#include <vector>

#include "covsat/errors.hpp"

namespace covsat::bounds {

/// One evaluated upper bound on the length function l_q(r, R).  `value` is
/// empty when the bound's hypotheses do not hold for (q, r, R); `note` then
/// carries a machine-readable reason, otherwise a case label or remark.
struct BoundValue {
  std::optional<std::int64_t> value;
  std::string note;

  [[nodiscard]] bool applicable() const { return value.has_value(); }
};

/// q^e as a checked 64-bit integer (e >= 0); throws covsat::error on
/// overflow.
[[nodiscard]] std::int64_t ipow(std::int64_t q, std::uint32_t e);

/// Exact integer k-th root when q is a perfect k-th power; empty otherwise.
[[nodiscard]] std::optional<std::int64_t> exact_root(std::int64_t q,
                                                     std::uint32_t k);

[[nodiscard]] bool is_prime(std::int64_t v);

/// Decomposes a prime power q = p^h; empty when q is not a prime power > 1.
struct PrimePower {
  std::int64_t p;
  std::uint32_t h;
};
[[nodiscard]] std::optional<PrimePower> prime_power(std::int64_t q);

/// Order of the largest proper subfield of GF(p^h): p^{h/l} with l the
/// smallest prime divisor of h.  Requires h >= 2 (a prime field has no
/// proper subfield) and q a prime power; throws invalid_argument_error
/// otherwise.
[[nodiscard]] std::int64_t subfield_phi(std::int64_t q);

/// Previously known bound for R >= 4, r = tR, t >= 2:
/// R q^{t-1} + ceil(R/3) q^{t-2} + delta, with delta = 0 for
/// (t = 2, q >= 4), (t = 3, q = 16 or q >= 23), and
/// (t = 5 or t >= 7, q >= 7, q != 9); delta = (2R mod 3)(q^{t-3} + 1) for
/// (t = 4 or t = 6, q >= 7, q != 9).  Anything else is n/a.  The t = 3
/// q-condition is recorded as interpretation-dependent in the note.
[[nodiscard]] BoundValue known_tR(std::int64_t q, std::int64_t r,
                                  std::int64_t R);

/// New bound for r = tR: R q^{t-1} + q^{t-2} + Delta with the five cases
///   (i)   Delta = 0,                        t = 2, q = 4 or q >= 7, R >= 4
///   (ii)  Delta = 0,                        t = 2, q = 5, R in {4, 5}
///   (iii) Delta = 0,                        t >= ceil(log_q R) + 3, odd q >= 7, R >= 4
///   (iv)  Delta = sum_{j=2..t} q^{t-j},     m1+2 < t < 3 m1+2, even q >= 8, R >= 4
///   (v)   Delta = sum_{j=2..m1+2} q^{t-j},  t = m1+2 or t >= 3 m1+2, even q >= 8, R >= 4
/// where m1 = ceil(log_q(R+1)) + 1.  The note carries the case label.
[[nodiscard]] BoundValue new_tR(std::int64_t q, std::int64_t r,
                                std::int64_t R);

/// The five bounds for even R and codimension r = tR + R/2.
enum class EvenRBound {
  kProp12H1,  ///< (R/2)(3 sqrt(q) - 1) q^{t-1} + (R/2) floor(q^{t-2}); q a square >= 16
  kProp12H2,  ///< R(sqrt(q) + q^{1/4} + 1) q^{t-1} + (R/2) floor(q^{t-2}); q a 4th power
  kProp12H3,  ///< R(sqrt(q) + q^{1/3} + q^{1/6} + 1) q^{t-1} + R floor(q^{t-2}); q = p'^6, p' <= 73 prime, t != 4, 6
  kThm22I,    ///< R(sqrt(q) + (sqrt(q)-1)/(phi(sqrt(q))-1)) q^{t-1} + R floor(q^{t-2}) + (R/2) f; q = p^{2eta}, eta >= 2, p >= 3
  kThm22II,   ///< R(sqrt(q) + sqrt(q)/p + 1) q^{t-1} + R floor(q^{t-2}) + (R/2) f; q = p^{2eta}, eta >= 2, p >= 7
};

/// f term shared by the kThm22* variants: q^{t-3} + q^{t-4} when t is 4 or
/// 6 (i.e. r = 9R/2 or 13R/2), else 0.
[[nodiscard]] std::int64_t even_R_f(std::int64_t q, std::int64_t t);

[[nodiscard]] BoundValue even_R(std::int64_t q, std::int64_t r, std::int64_t R,
                                EvenRBound which);

/// Length achieved by the codimension-2R construction: R q + 1, claimed for
/// (q = 4 or q >= 7, R >= 1) and (q = 5, 1 <= R <= 5).  n/a otherwise
/// (q = 5 with R >= 6 is an open conjecture).
[[nodiscard]] BoundValue construction_s_2R(std::int64_t q, std::int64_t r,
                                           std::int64_t R);

/// Known exact values of the length function (equality, not a bound):
/// l_4(4, 2) = 9.
[[nodiscard]] std::optional<std::int64_t> exact_value(std::int64_t q,
                                                      std::int64_t r,
                                                      std::int64_t R);

struct BoundEntry {
  std::string name;
  std::optional<std::int64_t> value;
  std::string note;
};

struct BoundReport {
  std::int64_t q = 0;
  std::int64_t r = 0;
  std::int64_t R = 0;
  std::vector<BoundEntry> entries;
  std::optional<std::int64_t> constructed;
  /// Smallest applicable upper-bound value.
  std::optional<std::int64_t> best;
  /// constructed - best (negative would mean beating every bound).
  std::optional<std::int64_t> margin;
  /// True when constructed equals the new r = tR bound exactly.
  bool meets_new_exactly = false;
};

/// Evaluates every bound whose shape matches (q, r, R) -- the r = tR family
/// plus construction_s_2R and the exact values for r = 2R, or the even-R
/// family for r = tR + R/2 -- and compares an optional constructed length.
[[nodiscard]] BoundReport compare(std::int64_t q, std::int64_t r,
                                  std::int64_t R,
                                  std::optional<std::int64_t> constructed);

}  // namespace covsat::bounds
