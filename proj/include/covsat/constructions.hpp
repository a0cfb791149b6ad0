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
#include <string>
#include <vector>

#include "covsat/codes.hpp"
#include "covsat/errors.hpp"
#include "covsat/field.hpp"
#include "covsat/geometry.hpp"

namespace covsat::cons {

using gf::Field;
using gf::elem_t;

/// Default cap on the number of columns a generator will materialize.
inline constexpr std::uint64_t kDefaultColumnCap = 1'000'000;

// ---------------------------------------------------------------------------
// The line+conics point set ("Construction S")
// ---------------------------------------------------------------------------

/// The ((rho+1)q + 1)-point set S_rho in PG(2 rho + 1, q), emitted in its
/// defining index order:
///   P_1                = (1, 0, ..., 0)
///   P_j                = (1, a_j, 0, ..., 0)                    j = 2..q
///   P_{uq+j-1}         = (0^{2u-1}, 1, a_j, a_j^2, 0^{2rho-2u}) u = 1..rho, j = 2..q
///   P_{(u+1)q}         = T_u = (0^{2u-1}, 0, 1, 0, 0^{2rho-2u})
///   P_{(rho+1)q+1}     = (0, ..., 0, 1)
/// with a_j the field element of canonical index j-1 (so a_2..a_q run over
/// the nonzero elements in index order).  Requires q >= 3.
[[nodiscard]] pg::PointSet construction_s(const Field& F, std::uint32_t rho);

// ---------------------------------------------------------------------------
// Seeds for the lifting constructions
// ---------------------------------------------------------------------------

/// A parity-check matrix together with its covering invariants.  `measured`
/// distinguishes values verified here (BFS + weight-profile DP, cross-checked)
/// from values carried as claims when the syndrome space exceeds the cap.
struct SeedCode {
  codes::ParityCheckMatrix H;
  std::uint32_t R = 0;    ///< covering radius
  std::uint32_t ell = 0;  ///< capsule floor at R (the code is (R, ell))
  bool measured = false;
};

/// Runs both verification routes on H and returns the measured seed.
/// Throws invalid_argument_error when H is rank-deficient, cap_error when
/// q^r > max_syndromes, and error when the two routes disagree.
[[nodiscard]] SeedCode measure_seed(const codes::ParityCheckMatrix& H,
                                    std::uint64_t max_syndromes =
                                        codes::kDefaultSyndromeCap,
                                    unsigned workers = 1);

// ---------------------------------------------------------------------------
// The q^m lifting constructions QM1 / QM2
// ---------------------------------------------------------------------------

/// QM1: from an (R, R) surface-covering seed [n_0, n_0-r_0]_q with columns
/// h_j, build the q^m n_0 columns b_j(xi_u) = (h_j, xi_u, beta_j xi_u, ...,
/// beta_j^{R-1} xi_u) over all u, blocks in column order j = 1..n_0, with
/// each F_{q^m} entry expanded to m rows of base-q coordinates.
/// beta_j is the element of F_{q^m} with canonical index j-1; when
/// q^m = n_0 - 1 exactly, the last column's beta is the reserved symbol and
/// its block is (h_j, 0, ..., 0, xi_u).  New redundancy r_0 + Rm.
///
/// Throws refusal_error unless seed.ell == seed.R (the construction's
/// covering argument needs weight-exactly-R representations); throws
/// invalid_argument_error when q^m < n_0 - 1, R < 2, or m < 1; cap_error
/// when the output exceeds max_columns.
[[nodiscard]] codes::ParityCheckMatrix qm1(const SeedCode& seed,
                                           std::uint32_t m,
                                           std::uint64_t max_columns =
                                               kDefaultColumnCap);

/// Which reading of QM2's W block to build (the printed definition is
/// internally inconsistent; see the module notes in the README).
enum class QM2Variant {
  kLiteral,  ///< theta = (q^{m+1}-1)/(q-1) columns: all points of PG(m, q)
             ///< in rank order, truncated to their last m coordinates
             ///< (contains a zero column and proportional pairs -> d = 1)
  kReduced,  ///< (q^m-1)/(q-1) columns: the redundancy-m Hamming parity
             ///< check, i.e. the points of PG(m-1, q) in rank order (d = 3)
};

/// QM2: from an (R, R-1) seed (ell_0 = R-1 exactly), build
/// [C  B_1 ... B_{n_0}] where the B_j are as in QM1 (no reserved symbol;
/// requires q^m >= n_0) and C carries zeros in the first r_0 + (R-1)m rows
/// and the W block of the chosen variant in the last m rows.
///
/// Throws refusal_error unless seed.ell == seed.R - 1; otherwise errors as
/// in qm1.
[[nodiscard]] codes::ParityCheckMatrix qm2(const SeedCode& seed,
                                           std::uint32_t m,
                                           QM2Variant variant,
                                           std::uint64_t max_columns =
                                               kDefaultColumnCap);

// ---------------------------------------------------------------------------
// Direct sum
// ---------------------------------------------------------------------------

/// Block-diagonal sum: r = r_1 + r_2 rows, n = n_1 + n_2 columns; covering
/// radii add.  Throws invalid_argument_error on a field mismatch.
[[nodiscard]] codes::ParityCheckMatrix direct_sum(
    const codes::ParityCheckMatrix& a, const codes::ParityCheckMatrix& b);

// ---------------------------------------------------------------------------
// Plane sets
// ---------------------------------------------------------------------------

/// The (3 sqrt(q) - 1)-point 1-saturating set in PG(2, q), q a square:
///   {(1, 0, x)   : x in the subfield}     (x in subfield index order)
/// u {(1, 0, c b) : c nonzero subfield}    (b = the field's primitive element)
/// u {(0, 1, x)   : x in the subfield}.
/// Throws invalid_argument_error when q is not a square of a prime power.
[[nodiscard]] pg::PointSet plane_saturating_set(const Field& F);

/// The union of the three coordinate lines of PG(2, s) (a triangle of
/// non-concurrent lines), in point-rank order: 3s points, every line of the
/// plane meets the set at least twice.  Baer-embed it into PG(2, s^2) to
/// get a 1-saturating set there.
[[nodiscard]] pg::PointSet triangle_double_blocking(const Field& F);

// ---------------------------------------------------------------------------
// The codimension r = tR family pipeline
// ---------------------------------------------------------------------------

struct FamilyStage {
  std::string op;  ///< "seed" | "qm1" | "qm2-literal"
  std::uint32_t m = 0;
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::uint32_t claimed_R = 0;
  std::uint32_t claimed_ell = 0;
  /// Filled at materialization: "measured" when this stage's matrix was
  /// verified by the dual routes, else "claimed (<reason>)".
  std::string verification;
};

struct FamilyPlan {
  std::int64_t q = 0;
  std::int64_t R = 0;
  std::int64_t t = 0;
  std::int64_t m1 = 0;  ///< even q only: ceil(log_q(R+1)) + 1
  std::string case_label;
  std::vector<FamilyStage> stages;
  std::int64_t n = 0;            ///< final length (literal W for QM2 stages)
  std::int64_t r = 0;            ///< tR
  std::int64_t closed_form = 0;  ///< theorem value; equals n by construction
};

/// Symbolic pipeline for the infinite families with r = tR, R >= 4:
/// odd q >= 7: seed alone (t = 2) or seed -> QM1(m = t-2) for
/// t >= ceil(log_q R) + 3; even q >= 8 with m1 = ceil(log_q(R+1)) + 1:
/// seed -> QM2(m = t-2) for m1+2 < t < 3m1+2, seed -> QM2(m = m1) for
/// t = m1+2, and seed -> QM2(m = m1) -> QM1(m = t-2-m1) for t >= 3m1+2.
/// Lengths are exact integers and checked against the closed form.
/// Throws invalid_argument_error for inadmissible (q, R, t).
[[nodiscard]] FamilyPlan family_plan(std::int64_t q, std::int64_t R,
                                     std::int64_t t);

struct FamilyResult {
  FamilyPlan plan;  ///< with per-stage verification notes filled in
  codes::ParityCheckMatrix H;
};

/// Materializes the family matrix for F.order() = q, verifying each stage's
/// (R, ell) whenever its syndrome space fits max_syndromes and recording
/// claimed values otherwise.  Throws cap_error when the final length
/// exceeds max_columns.
[[nodiscard]] FamilyResult family_codimension_tR(
    const Field& F, std::int64_t R, std::int64_t t,
    std::uint64_t max_syndromes = codes::kDefaultSyndromeCap,
    unsigned workers = 1, std::uint64_t max_columns = kDefaultColumnCap);

}  // namespace covsat::cons
