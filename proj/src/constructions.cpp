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

#include "covsat/constructions.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "covsat/bounds.hpp"

namespace covsat::cons {

namespace {

/// True iff q^e <= cap, evaluated without overflow.
bool pow_within(std::uint64_t q, std::uint32_t e, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (v > cap / q) return false;
    v *= q;
  }
  return v <= cap;
}

/// Smallest L >= 0 with q^L >= v (q >= 2, v >= 1).
std::int64_t ceil_log(std::int64_t q, std::int64_t v) {
  std::int64_t L = 0;
  __int128 p = 1;
  while (p < v) {
    p *= q;
    ++L;
  }
  return L;
}

std::int64_t to_int64(__int128 v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max()) {
    throw cap_error(std::string(what) + " overflows a 64-bit length");
  }
  return static_cast<std::int64_t>(v);
}

/// Appends the q^m lifted columns for one seed column h.  beta_pow holds
/// (beta^0, ..., beta^{R-1}) as extension elements; when empty, the column
/// carries the reserved symbol: all blocks zero except the last, which gets
/// the coordinates of xi.
void append_lift_block(codes::ParityCheckMatrix& out, const gf::ExtensionMap& E,
                       const std::vector<elem_t>& h, std::uint32_t R,
                       const std::vector<elem_t>& beta_pow) {
  const std::uint64_t qm = E.ext.order();
  const auto r0 = static_cast<std::uint32_t>(h.size());
  const std::uint32_t m = E.m;
  std::vector<elem_t> col(r0 + std::size_t{R} * m, 0);
  std::copy(h.begin(), h.end(), col.begin());
  for (std::uint64_t u = 0; u < qm; ++u) {
    const auto xi = static_cast<elem_t>(u);
    if (beta_pow.empty()) {
      std::fill(col.begin() + r0, col.end(), 0);
      const auto d = E.rep(xi);
      std::copy(d.begin(), d.end(),
                col.begin() + r0 + std::size_t{R - 1} * m);
    } else {
      for (std::uint32_t v = 0; v < R; ++v) {
        const auto d = E.rep(E.ext.mul(beta_pow[v], xi));
        std::copy(d.begin(), d.end(), col.begin() + r0 + std::size_t{v} * m);
      }
    }
    out.append_column(col);
  }
}

/// Shared argument validation and B-block emission for qm1/qm2.
struct LiftContext {
  gf::ExtensionMap E;
  std::uint64_t qm = 0;
  std::uint32_t n0 = 0;
  std::uint32_t r0 = 0;
};

LiftContext prepare_lift(const SeedCode& seed, std::uint32_t m,
                         const char* name) {
  if (m < 1) {
    throw invalid_argument_error(std::string(name) + ": m must be >= 1");
  }
  if (seed.R < 2) {
    throw invalid_argument_error(std::string(name) +
                                 ": seed covering radius must be >= 2, got " +
                                 std::to_string(seed.R));
  }
  if (seed.H.cols() == 0) {
    throw invalid_argument_error(std::string(name) + ": empty seed matrix");
  }
  LiftContext ctx;
  ctx.E = gf::build_extension(seed.H.field(), m);
  ctx.qm = ctx.E.ext.order();
  ctx.n0 = seed.H.cols();
  ctx.r0 = seed.H.rows();
  return ctx;
}

void append_b_blocks(codes::ParityCheckMatrix& out, const SeedCode& seed,
                     const LiftContext& ctx, bool star_on_last) {
  std::vector<elem_t> beta_pow(seed.R);
  for (std::uint32_t j = 0; j < ctx.n0; ++j) {
    const std::vector<elem_t> h = seed.H.column(j);
    if (star_on_last && j == ctx.n0 - 1) {
      append_lift_block(out, ctx.E, h, seed.R, {});
    } else {
      const auto beta = static_cast<elem_t>(j);
      for (std::uint32_t v = 0; v < seed.R; ++v) {
        beta_pow[v] = ctx.E.ext.pow(beta, v);
      }
      append_lift_block(out, ctx.E, h, seed.R, beta_pow);
    }
  }
}

std::string ordinal(std::size_t i) { return std::to_string(i + 1); }

}  // namespace

// ---------------------------------------------------------------------------
// Construction S
// ---------------------------------------------------------------------------

pg::PointSet construction_s(const Field& F, std::uint32_t rho) {
  if (!F.valid()) {
    throw invalid_argument_error("construction_s: invalid field context");
  }
  const std::uint64_t q = F.order();
  if (q < 3) {
    throw invalid_argument_error("construction_s: needs q >= 3, got q = " +
                                 std::to_string(q));
  }
  const std::uint32_t N = 2 * rho + 1;
  pg::PointSet S(F, N);
  const auto blank = [N] { return pg::Point(std::size_t{N} + 1, 0); };

  {
    auto p = blank();
    p[0] = 1;
    S.append(std::move(p));  // the affine origin of the base line
  }
  for (std::uint64_t j = 2; j <= q; ++j) {  // remaining affine line points
    auto p = blank();
    p[0] = 1;
    p[1] = static_cast<elem_t>(j - 1);
    S.append(std::move(p));
  }
  for (std::uint32_t u = 1; u <= rho; ++u) {
    for (std::uint64_t j = 2; j <= q; ++j) {  // the u-th conic arc
      const auto a = static_cast<elem_t>(j - 1);
      auto p = blank();
      p[2 * u - 1] = 1;
      p[2 * u] = a;
      p[2 * u + 1] = F.mul(a, a);
      S.append(std::move(p));
    }
    auto t = blank();  // the arc's tangent point T_u
    t[2 * u] = 1;
    S.append(std::move(t));
  }
  {
    auto p = blank();  // the point at infinity
    p[N] = 1;
    S.append(std::move(p));
  }
  return S;
}

// ---------------------------------------------------------------------------
// Seed measurement
// ---------------------------------------------------------------------------

SeedCode measure_seed(const codes::ParityCheckMatrix& H,
                      std::uint64_t max_syndromes, unsigned workers) {
  const codes::RadiusResult rr = codes::covering_radius(H, max_syndromes,
                                                        workers);
  if (!rr.radius) {
    throw invalid_argument_error(
        "measure_seed: the columns do not span GF(q)^r, so the covering "
        "radius is infinite (rank " +
        std::to_string(H.rank()) + " < " + std::to_string(H.rows()) + ")");
  }
  const std::uint32_t R = *rr.radius;
  if (R > 15) {
    throw cap_error("measure_seed: covering radius " + std::to_string(R) +
                    " exceeds the weight-profile cap of 15");
  }
  const codes::CoverageProfile prof =
      codes::capsule_spectrum(H, R, max_syndromes, workers);
  const auto r2 = prof.radius();
  if (!r2 || *r2 != R) {
    throw error(
        "measure_seed: the BFS and weight-profile routes disagree on the "
        "covering radius (" +
        std::to_string(R) + " vs " +
        (r2 ? std::to_string(*r2) : std::string("none")) + ")");
  }
  const auto ell = prof.capsule_floor(R);
  if (!ell) {
    throw error("measure_seed: weight profile has a syndrome with no "
                "representation within the radius");
  }
  return SeedCode{H, R, *ell, true};
}

// ---------------------------------------------------------------------------
// QM1 / QM2
// ---------------------------------------------------------------------------

codes::ParityCheckMatrix qm1(const SeedCode& seed, std::uint32_t m,
                             std::uint64_t max_columns) {
  if (seed.ell != seed.R) {
    throw refusal_error(
        "qm1 requires an (R, R) surface-covering seed -- every syndrome must "
        "be reachable with weight exactly R -- but this seed is (R, ell) = (" +
        std::to_string(seed.R) + ", " + std::to_string(seed.ell) + ")");
  }
  LiftContext ctx = prepare_lift(seed, m, "qm1");
  if (ctx.qm + 1 < ctx.n0) {
    throw invalid_argument_error(
        "qm1: needs q^m >= n_0 - 1, got q^m = " + std::to_string(ctx.qm) +
        " and n_0 = " + std::to_string(ctx.n0));
  }
  const std::uint64_t n = ctx.qm * ctx.n0;
  if (n > max_columns) {
    throw cap_error("qm1: output would have " + std::to_string(n) +
                    " columns; the cap is " + std::to_string(max_columns));
  }
  codes::ParityCheckMatrix out(seed.H.field(),
                               ctx.r0 + seed.R * m);
  const bool star = (ctx.qm == std::uint64_t{ctx.n0} - 1);
  append_b_blocks(out, seed, ctx, star);
  return out;
}

codes::ParityCheckMatrix qm2(const SeedCode& seed, std::uint32_t m,
                             QM2Variant variant, std::uint64_t max_columns) {
  if (seed.ell + 1 != seed.R) {
    throw refusal_error(
        "qm2 requires an (R, R-1) seed -- the floor must sit exactly one "
        "below the radius -- but this seed is (R, ell) = (" +
        std::to_string(seed.R) + ", " + std::to_string(seed.ell) + ")");
  }
  LiftContext ctx = prepare_lift(seed, m, "qm2");
  if (ctx.qm < ctx.n0) {
    throw invalid_argument_error(
        "qm2: needs q^m >= n_0, got q^m = " + std::to_string(ctx.qm) +
        " and n_0 = " + std::to_string(ctx.n0));
  }
  const Field& F = seed.H.field();
  const std::uint64_t q = F.order();
  const std::uint64_t theta = (variant == QM2Variant::kLiteral)
                                  ? (ctx.qm * q - 1) / (q - 1)
                                  : (ctx.qm - 1) / (q - 1);
  const std::uint64_t n = theta + ctx.qm * ctx.n0;
  if (n > max_columns) {
    throw cap_error("qm2: output would have " + std::to_string(n) +
                    " columns; the cap is " + std::to_string(max_columns));
  }
  const std::uint32_t r = ctx.r0 + seed.R * m;
  codes::ParityCheckMatrix out(F, r);

  // The C block comes first: zeros except for the W block in the last m rows.
  std::vector<elem_t> col(r, 0);
  const std::uint32_t pg_dim = (variant == QM2Variant::kLiteral) ? m : m - 1;
  for (std::uint64_t rank = 0; rank < theta; ++rank) {
    const pg::Point P = pg::point_unrank(F, pg_dim, rank);
    std::fill(col.begin(), col.end(), 0);
    // Literal variant: drop the leading homogeneous coordinate of each
    // PG(m, q) point, keeping the trailing m.  Reduced variant: the points
    // of PG(m-1, q) have exactly m coordinates already.
    const std::size_t skip = (variant == QM2Variant::kLiteral) ? 1 : 0;
    std::copy(P.begin() + skip, P.end(), col.begin() + (r - m));
    out.append_column(col);
  }
  append_b_blocks(out, seed, ctx, /*star_on_last=*/false);
  return out;
}

// ---------------------------------------------------------------------------
// Direct sum
// ---------------------------------------------------------------------------

codes::ParityCheckMatrix direct_sum(const codes::ParityCheckMatrix& a,
                                    const codes::ParityCheckMatrix& b) {
  if (a.field() != b.field()) {
    throw invalid_argument_error("direct_sum: field mismatch");
  }
  codes::ParityCheckMatrix out(a.field(), a.rows() + b.rows());
  std::vector<elem_t> col(std::size_t{a.rows()} + b.rows(), 0);
  for (std::uint32_t j = 0; j < a.cols(); ++j) {
    std::fill(col.begin(), col.end(), 0);
    const auto top = a.column(j);
    std::copy(top.begin(), top.end(), col.begin());
    out.append_column(col);
  }
  for (std::uint32_t j = 0; j < b.cols(); ++j) {
    std::fill(col.begin(), col.end(), 0);
    const auto bottom = b.column(j);
    std::copy(bottom.begin(), bottom.end(), col.begin() + a.rows());
    out.append_column(col);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Plane sets
// ---------------------------------------------------------------------------

pg::PointSet plane_saturating_set(const Field& F) {
  if (!F.valid()) {
    throw invalid_argument_error("plane_saturating_set: invalid field context");
  }
  const std::uint64_t q = F.order();
  const auto root = bounds::exact_root(static_cast<std::int64_t>(q), 2);
  if (!root) {
    throw invalid_argument_error(
        "plane_saturating_set: q must be a square, got q = " +
        std::to_string(q));
  }
  const auto s = static_cast<std::uint64_t>(*root);
  const Field sub = gf::build_field(s);
  const std::vector<elem_t> emb = gf::subfield_embed(sub, F);
  const elem_t beta = F.primitive_element();

  pg::PointSet S(F, 2);
  for (std::uint64_t x = 0; x < s; ++x) {
    S.append({1, 0, emb[x]});
  }
  for (std::uint64_t c = 1; c < s; ++c) {
    S.append({1, 0, F.mul(emb[c], beta)});
  }
  for (std::uint64_t x = 0; x < s; ++x) {
    S.append({0, 1, emb[x]});
  }
  return S;
}

pg::PointSet triangle_double_blocking(const Field& F) {
  if (!F.valid()) {
    throw invalid_argument_error(
        "triangle_double_blocking: invalid field context");
  }
  pg::PointSet S(F, 2);
  const std::uint64_t total = pg::point_count(2, F.order());
  for (std::uint64_t rank = 0; rank < total; ++rank) {
    pg::Point P = pg::point_unrank(F, 2, rank);
    if (P[0] == 0 || P[1] == 0 || P[2] == 0) {
      S.append(std::move(P));
    }
  }
  return S;
}

// ---------------------------------------------------------------------------
// The r = tR family
// ---------------------------------------------------------------------------

FamilyPlan family_plan(std::int64_t q, std::int64_t R, std::int64_t t) {
  if (R < 4) {
    throw invalid_argument_error("family: R >= 4 required, got R = " +
                                 std::to_string(R));
  }
  if (!bounds::prime_power(q)) {
    throw invalid_argument_error("family: q must be a prime power, got q = " +
                                 std::to_string(q));
  }
  const bool odd = (q % 2 != 0);
  if (odd && q < 7) {
    throw invalid_argument_error("family: odd q must be >= 7, got q = " +
                                 std::to_string(q));
  }
  if (!odd && q < 8) {
    throw invalid_argument_error("family: even q must be >= 8, got q = " +
                                 std::to_string(q));
  }

  FamilyPlan plan;
  plan.q = q;
  plan.R = R;
  plan.t = t;
  plan.r = t * R;

  FamilyStage seed;
  seed.op = "seed";
  seed.n = R * q + 1;
  seed.r = 2 * R;
  seed.claimed_R = static_cast<std::uint32_t>(R);
  seed.claimed_ell = static_cast<std::uint32_t>(odd ? R : R - 1);
  plan.stages.push_back(seed);

  __int128 n = R * q + 1;
  std::int64_t r = 2 * R;
  const auto push_lift = [&](const std::string& op, std::int64_t m) {
    if (op == "qm1") {
      n *= bounds::ipow(q, static_cast<std::uint32_t>(m));
    } else {
      const __int128 qm1p = bounds::ipow(q, static_cast<std::uint32_t>(m + 1));
      n = n * bounds::ipow(q, static_cast<std::uint32_t>(m)) +
          (qm1p - 1) / (q - 1);
    }
    r += R * m;
    FamilyStage st;
    st.op = op;
    st.m = static_cast<std::uint32_t>(m);
    st.n = to_int64(n, "family: stage length");
    st.r = r;
    st.claimed_R = static_cast<std::uint32_t>(R);
    st.claimed_ell = static_cast<std::uint32_t>(R);
    plan.stages.push_back(st);
  };

  if (odd) {
    const std::int64_t lo = ceil_log(q, R) + 3;
    if (t == 2) {
      plan.case_label = "odd q, t = 2: seed alone";
    } else if (t >= lo) {
      plan.case_label = "odd q: seed -> qm1";
      push_lift("qm1", t - 2);
    } else {
      throw invalid_argument_error(
          "family: for odd q = " + std::to_string(q) + ", R = " +
          std::to_string(R) + ", t must be 2 or >= " + std::to_string(lo) +
          "; t = " + std::to_string(t) + " is not covered");
    }
  } else {
    const std::int64_t m1 = ceil_log(q, R + 1) + 1;
    plan.m1 = m1;
    if (t < m1 + 2) {
      throw invalid_argument_error(
          "family: for even q = " + std::to_string(q) + ", R = " +
          std::to_string(R) + ", t must be >= m_1 + 2 = " +
          std::to_string(m1 + 2) + "; t = " + std::to_string(t) +
          " is not covered");
    }
    if (t < 3 * m1 + 2) {
      plan.case_label = "even q: seed -> qm2";
      push_lift("qm2-literal", t - 2);
    } else {
      plan.case_label = "even q: seed -> qm2 -> qm1";
      push_lift("qm2-literal", m1);
      push_lift("qm1", t - 2 - m1);
    }
  }

  plan.n = to_int64(n, "family: final length");
  if (plan.stages.back().r != plan.r) {
    throw error("family: internal redundancy accounting error");
  }

  const bounds::BoundValue closed = bounds::new_tR(q, plan.r, R);
  if (!closed.applicable()) {
    throw error("family: no closed form applies to (q, R, t) = (" +
                std::to_string(q) + ", " + std::to_string(R) + ", " +
                std::to_string(t) + "): " + closed.note);
  }
  plan.closed_form = *closed.value;
  if (plan.closed_form != plan.n) {
    throw error("family: pipeline length " + std::to_string(plan.n) +
                " does not match the closed form " +
                std::to_string(plan.closed_form));
  }
  return plan;
}

FamilyResult family_codimension_tR(const Field& F, std::int64_t R,
                                   std::int64_t t,
                                   std::uint64_t max_syndromes,
                                   unsigned workers,
                                   std::uint64_t max_columns) {
  if (!F.valid()) {
    throw invalid_argument_error("family: invalid field context");
  }
  FamilyPlan plan = family_plan(static_cast<std::int64_t>(F.order()), R, t);
  if (static_cast<std::uint64_t>(plan.n) > max_columns) {
    throw cap_error("family: planned length " + std::to_string(plan.n) +
                    " exceeds the column cap " + std::to_string(max_columns));
  }
  const std::uint64_t q = F.order();

  // Measures a stage's matrix when its syndrome space fits the cap; returns
  // the seed to feed forward and records how the stage was checked.
  const auto settle_stage = [&](const codes::ParityCheckMatrix& H,
                                FamilyStage& st) -> SeedCode {
    if (st.claimed_R <= 15 &&
        pow_within(q, H.rows(), max_syndromes)) {
      SeedCode meas = measure_seed(H, max_syndromes, workers);
      if (meas.R != st.claimed_R || meas.ell != st.claimed_ell) {
        throw error("family: stage " + ordinal(&st - plan.stages.data()) +
                    " (" + st.op + ") measured (R, ell) = (" +
                    std::to_string(meas.R) + ", " + std::to_string(meas.ell) +
                    ") but the theorem claims (" +
                    std::to_string(st.claimed_R) + ", " +
                    std::to_string(st.claimed_ell) + ")");
      }
      st.verification = "measured: R = " + std::to_string(meas.R) +
                        ", ell = " + std::to_string(meas.ell);
      return meas;
    }
    st.verification = "claimed (syndrome space q^" +
                      std::to_string(H.rows()) + " exceeds the cap " +
                      std::to_string(max_syndromes) + ")";
    return SeedCode{H, st.claimed_R, st.claimed_ell, false};
  };

  const auto rho = static_cast<std::uint32_t>(R - 1);
  codes::ParityCheckMatrix H =
      codes::from_point_set(construction_s(F, rho));
  SeedCode cur = settle_stage(H, plan.stages[0]);

  for (std::size_t i = 1; i < plan.stages.size(); ++i) {
    FamilyStage& st = plan.stages[i];
    codes::ParityCheckMatrix lifted =
        (st.op == "qm1") ? qm1(cur, st.m, max_columns)
                         : qm2(cur, st.m, QM2Variant::kLiteral, max_columns);
    if (lifted.cols() != static_cast<std::uint64_t>(st.n)) {
      throw error("family: stage " + ordinal(i) + " produced " +
                  std::to_string(lifted.cols()) + " columns, expected " +
                  std::to_string(st.n));
    }
    cur = settle_stage(lifted, st);
    H = std::move(lifted);
  }
  return FamilyResult{std::move(plan), std::move(H)};
}

}  // namespace covsat::cons
