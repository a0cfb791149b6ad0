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
#include "covsat/geometry.hpp"

namespace covsat::codes {

using gf::Field;
using gf::elem_t;

/// Default cap on syndrome-space sizes q^r walked by the breadth-first
/// search and the weight-profile dynamic program.
inline constexpr std::uint64_t kDefaultSyndromeCap = 50'000'000;

/// An r x n matrix over GF(q) viewed as the parity-check matrix of the code
/// it defines.  Columns are stored in insertion order; the order is part of
/// the construction contracts and of the file format.
///
/// Zero and repeated columns are tolerated (one construction variant
/// produces them deliberately); they are reported by the diagnostic
/// accessors and make the minimum distance 1 or 2.
class ParityCheckMatrix {
 public:
  ParityCheckMatrix(Field F, std::uint32_t rows);

  void append_column(const std::vector<elem_t>& col);

  [[nodiscard]] const Field& field() const noexcept { return F_; }
  [[nodiscard]] std::uint32_t rows() const noexcept { return r_; }
  [[nodiscard]] std::uint32_t cols() const noexcept {
    return static_cast<std::uint32_t>(data_.size() / r_);
  }
  [[nodiscard]] elem_t at(std::uint32_t row, std::uint32_t col) const {
    return data_[std::size_t{col} * r_ + row];
  }
  /// Column entries, top row first.
  [[nodiscard]] std::vector<elem_t> column(std::uint32_t col) const;

  /// Rank over GF(q) by Gaussian elimination.
  [[nodiscard]] std::uint32_t rank() const;

  /// Indices of all-zero columns (usually empty).
  [[nodiscard]] std::vector<std::uint32_t> zero_columns() const;

  /// Copy with column j removed.
  [[nodiscard]] ParityCheckMatrix without_column(std::uint32_t j) const;

  [[nodiscard]] bool operator==(const ParityCheckMatrix& o) const {
    return F_ == o.F_ && r_ == o.r_ && data_ == o.data_;
  }

  /// Flat column-major storage (column j occupies entries [j*r, (j+1)*r)).
  [[nodiscard]] const std::vector<elem_t>& flat() const noexcept { return data_; }

 private:
  Field F_;
  std::uint32_t r_;
  std::vector<elem_t> data_;
};

// ---------------------------------------------------------------------------
// Covering radius (syndrome BFS)
// ---------------------------------------------------------------------------

struct RadiusResult {
  /// Covering radius; empty when the columns do not span GF(q)^r (some
  /// syndromes are unreachable, i.e. the radius is infinite).
  std::optional<std::uint32_t> radius;
  /// dist[s] = weight of the coset leader of syndrome s (0xFF: unreachable).
  std::vector<std::uint8_t> dist;
  /// Number of syndromes walked (q^r).
  std::uint64_t syndromes = 0;
};

/// Exact covering radius by breadth-first search over all q^r syndromes.
/// Throws cap_error when q^r exceeds max_syndromes.  Deterministic for any
/// worker count.
[[nodiscard]] RadiusResult covering_radius(
    const ParityCheckMatrix& H,
    std::uint64_t max_syndromes = kDefaultSyndromeCap, unsigned workers = 1);

// ---------------------------------------------------------------------------
// Weight profiles (coset capsule spectrum)
// ---------------------------------------------------------------------------

/// Per-syndrome achievable-weight profile: for every syndrome s, bit w of
/// mask(s) is set iff s is a linear combination, with nonzero coefficients,
/// of exactly w distinct columns (0 <= w <= w_cap <= 15).  Computed by a
/// dynamic program over columns -- an independent route from the BFS, and
/// the basis for the capsule statistics.
struct CoverageProfile {
  std::uint32_t w_cap = 0;
  std::vector<std::uint16_t> masks;
  std::uint64_t syndromes = 0;

  /// Covering radius read off the profile: max over s of the smallest set
  /// bit; empty when some syndrome has no representation of weight <= w_cap.
  [[nodiscard]] std::optional<std::uint32_t> radius() const;

  /// Largest l such that every syndrome (the zero one included) has a
  /// representation of weight in [l, R]; empty when some syndrome has none
  /// of weight <= R at all.  Requires R <= w_cap.
  [[nodiscard]] std::optional<std::uint32_t> capsule_floor(std::uint32_t R) const;

  /// True iff the code has covering radius exactly R and every syndrome has
  /// a representation of weight exactly R (the (R, R) surface-covering
  /// property).  Requires R <= w_cap.
  [[nodiscard]] bool surface_covering(std::uint32_t R) const;
};

[[nodiscard]] CoverageProfile capsule_spectrum(
    const ParityCheckMatrix& H, std::uint32_t w_cap,
    std::uint64_t max_syndromes = kDefaultSyndromeCap, unsigned workers = 1);

// ---------------------------------------------------------------------------
// Minimum distance (small-weight scan) and weight distributions
// ---------------------------------------------------------------------------

struct MinDistanceResult {
  /// Exact minimum distance when a dependency of weight <= scanned cap was
  /// found; otherwise empty.
  std::optional<std::uint32_t> d;
  /// Always valid: d >= at_least (equals *d when exact).
  std::uint32_t at_least = 1;
  std::vector<std::uint32_t> zero_columns;
  /// One representative pair of proportional columns, if any.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> proportional_pair;
};

/// Scans dependencies of weight 1..d_cap (d_cap <= 4).  The weight-4 scan
/// hashes all pairwise combinations; it is skipped (result stays a bound)
/// when that table would exceed ~3*10^7 entries.
[[nodiscard]] MinDistanceResult min_distance_small(const ParityCheckMatrix& H,
                                                   std::uint32_t d_cap = 4);

/// Exact weight distribution A_0..A_n of the code with parity-check matrix
/// H, computed from the q^r words of the row-space code and the dual
/// transform.  Requires q^r <= cap and full rank; exact 64-bit integers.
[[nodiscard]] std::vector<std::int64_t> weight_distribution_via_dual(
    const ParityCheckMatrix& H, std::uint64_t cap = 2'000'000);

// ---------------------------------------------------------------------------
// Local optimality (no removable column)
// ---------------------------------------------------------------------------

struct LocalOptResult {
  bool locally_optimal = false;
  /// Columns whose removal keeps the covering radius at most R.
  std::vector<std::uint32_t> removable;
};

enum class LocalOptStrategy {
  kAuto,       ///< mask BFS when n <= 64, else per-column re-runs
  kPerColumn,  ///< definitional route: covering_radius(H minus column j)
  kMaskBfs,    ///< one pass over per-syndrome avoid-column masks (n <= 64)
};

/// Decides whether deleting any single column raises the covering radius
/// above base.radius (rank drops count as raising it).  `base` must be the
/// result of covering_radius(H).
[[nodiscard]] LocalOptResult local_optimality(
    const ParityCheckMatrix& H, const RadiusResult& base,
    std::uint64_t max_syndromes = kDefaultSyndromeCap, unsigned workers = 1,
    LocalOptStrategy strategy = LocalOptStrategy::kAuto);

// ---------------------------------------------------------------------------
// Point set <-> matrix bridge
// ---------------------------------------------------------------------------

/// Columns := the points of S in order (normalized homogeneous coordinates).
[[nodiscard]] ParityCheckMatrix from_point_set(const pg::PointSet& S);

/// Inverse bridge: columns normalized back to points of PG(r-1, q).  Throws
/// invalid_argument_error on a zero column or when two columns are
/// projectively equal (the set would lose them).
[[nodiscard]] pg::PointSet to_point_set(const ParityCheckMatrix& H);

}  // namespace covsat::codes
