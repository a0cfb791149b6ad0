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
#include <vector>

#include "covsat/errors.hpp"
#include "covsat/field.hpp"

namespace covsat::pg {

using gf::Field;
using gf::elem_t;

/// A projective point of PG(N, q) as its N+1 normalized homogeneous
/// coordinates (leftmost nonzero coordinate equal to 1).
using Point = std::vector<elem_t>;

/// Number of points of PG(N, q): (q^{N+1} - 1) / (q - 1).
[[nodiscard]] std::uint64_t point_count(std::uint32_t N, std::uint64_t q);

/// Default cap on materialized/scanned point-space sizes.
inline constexpr std::uint64_t kDefaultPointCap = 10'000'000;

/// Scales a nonzero coordinate vector so its leftmost nonzero entry is 1.
/// Throws invalid_argument_error on the zero vector.
[[nodiscard]] Point normalize(const Field& F, const std::vector<elem_t>& v);

/// Lexicographic rank of a normalized point among all points of its space,
/// comparing coordinate tuples by canonical element index.  Points with more
/// leading zeros come first; ranks run from 0 to point_count(N, q) - 1.
[[nodiscard]] std::uint64_t point_rank(const Field& F, const Point& p);

/// Inverse of point_rank.
[[nodiscard]] Point point_unrank(const Field& F, std::uint32_t N,
                                 std::uint64_t rank);

/// An ordered list of distinct points of one projective space.  Order is
/// the insertion order (constructions give their points a fixed order that
/// downstream code and file formats preserve).
class PointSet {
 public:
  PointSet(Field F, std::uint32_t N);

  /// Appends a point.  Throws invalid_argument_error unless p is normalized,
  /// has the right length, and is not already present.
  void append(Point p);

  [[nodiscard]] const Field& field() const noexcept { return F_; }
  /// Projective dimension N (points have N+1 coordinates).
  [[nodiscard]] std::uint32_t dim() const noexcept { return N_; }
  [[nodiscard]] std::size_t size() const noexcept { return pts_.size(); }
  [[nodiscard]] bool contains(const Point& p) const;
  [[nodiscard]] const Point& operator[](std::size_t i) const { return pts_[i]; }
  [[nodiscard]] const std::vector<Point>& points() const noexcept { return pts_; }

  /// Copy with the i-th point removed (order otherwise preserved).
  [[nodiscard]] PointSet without(std::size_t i) const;

  [[nodiscard]] bool operator==(const PointSet& o) const {
    return F_ == o.F_ && N_ == o.N_ && pts_ == o.pts_;
  }

 private:
  Field F_;
  std::uint32_t N_;
  std::vector<Point> pts_;
  std::vector<std::uint64_t> ranks_;  // sorted, for contains()
};

/// All points of PG(N, q) in rank order.  Throws cap_error when the space
/// has more than `cap` points.
[[nodiscard]] PointSet enumerate_points(const Field& F, std::uint32_t N,
                                        std::uint64_t cap = kDefaultPointCap);

/// Result of the span-closure breadth-first search.
struct SaturationResult {
  /// Smallest rho such that every point of the space lies in a subspace
  /// spanned by at most rho+1 points of the set; empty when the set does not
  /// span the space (no rho works).
  std::optional<std::uint32_t> level;
  /// covered[k] = number of space points lying in spans of at most k+1 set
  /// points (covered[0] = |S|); one entry per BFS layer actually run.
  std::vector<std::uint64_t> covered;
};

/// Point-side saturation by layered closure: L_1 = S and L_{k+1} extends
/// L_k by all normalize(P + c*s), P in L_k, s in S, c nonzero.  This is the
/// geometric route; the syndrome-side route lives in covsat::codes and the
/// two are cross-checked by the duality tests.  `workers` splits each layer's
/// frontier; results are identical for any worker count.
[[nodiscard]] SaturationResult saturation_level(
    const PointSet& S, std::uint64_t point_cap = kDefaultPointCap,
    unsigned workers = 1);

/// True iff S is rho-saturating and no proper subset obtained by deleting a
/// single point still is.  Point-side (leave-one-out closures).
[[nodiscard]] bool is_minimal_saturating(const PointSet& S, std::uint32_t rho,
                                         std::uint64_t point_cap = kDefaultPointCap,
                                         unsigned workers = 1);

/// Witness sets: entry i lists, in rank order, the points of the space not
/// rho-covered once S[i] is removed.  S[i] is essential iff entry i is
/// nonempty; S is minimal rho-saturating iff it is rho-saturating and every
/// entry is nonempty.
[[nodiscard]] std::vector<std::vector<Point>> essential_points(
    const PointSet& S, std::uint32_t rho,
    std::uint64_t point_cap = kDefaultPointCap, unsigned workers = 1);

/// Smallest number of points of S on any line of PG(2, q).  Requires
/// dim() == 2.  S is a double blocking set iff the result is >= 2.
[[nodiscard]] std::uint64_t min_line_intersections(const PointSet& S);

/// True iff every line of the plane meets S in at least two points.
[[nodiscard]] bool is_double_blocking(const PointSet& S);

/// Applies the canonical subfield embedding GF(small) -> GF(big) to every
/// coordinate.  Normalization is preserved (1 maps to 1), so the image is a
/// point set of PG(N, big.order()); with big = GF(q^2) this realizes the
/// subplane embedding of PG(2, q) into PG(2, q^2).
[[nodiscard]] PointSet baer_embed(const PointSet& S, const Field& big);

}  // namespace covsat::pg
