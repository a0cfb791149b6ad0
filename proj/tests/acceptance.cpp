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
//
// Acceptance gate: one pass/fail verdict per criterion, every number
// recomputed from scratch in this process.  Criterion 5's strict-improvement
// half is expected to fail at thirteen documented q = 8 grid points (the new
// closed form does not beat the previously known bound there); the process
// exits 0 only when the observed failure set matches that frozen list
// exactly, so any drift -- new failures or silent recoveries -- still turns
// the gate red.

#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "covsat/bounds.hpp"
#include "covsat/codes.hpp"
#include "covsat/constructions.hpp"
#include "covsat/errors.hpp"
#include "covsat/field.hpp"
#include "covsat/geometry.hpp"

namespace {

using covsat::codes::CoverageProfile;
using covsat::codes::ParityCheckMatrix;
using covsat::codes::RadiusResult;
using covsat::gf::Field;
using covsat::gf::build_field;
using covsat::gf::elem_t;

constexpr std::uint64_t kSynCap = 50'000'000;    // 9^8 = 43 046 721 fits
constexpr std::uint64_t kPointCap = 10'000'000;  // theta(7, 9) = 5 380 840 fits
constexpr unsigned kWorkers = 1;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt_secs(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << s << "s";
  return os.str();
}

// ---------------------------------------------------------------------------
// Cross-route ledger (criterion 8a): every matrix verified anywhere in this
// binary runs both the syndrome BFS and the weight-profile DP, and the two
// must agree syndrome by syndrome.
// ---------------------------------------------------------------------------

struct CrossTally {
  std::uint64_t matrices = 0;
  std::uint64_t syndromes = 0;
  std::vector<std::string> mismatches;

  [[nodiscard]] bool ok() const { return mismatches.empty(); }
};

struct Routes {
  RadiusResult rr;
  CoverageProfile prof;
};

Routes check_routes(const std::string& name, const ParityCheckMatrix& H,
                    std::uint32_t w_cap, CrossTally& tally) {
  Routes v;
  v.rr = covsat::codes::covering_radius(H, kSynCap, kWorkers);
  if (!v.rr.radius) {
    tally.mismatches.push_back(name + ": rank-deficient, routes incomparable");
    return v;
  }
  if (*v.rr.radius > w_cap) w_cap = *v.rr.radius;
  v.prof = covsat::codes::capsule_spectrum(H, w_cap, kSynCap, kWorkers);
  bool agree = (v.prof.radius() == v.rr.radius);
  for (std::uint64_t s = 0; agree && s < v.rr.syndromes; ++s) {
    const std::uint16_t mask = v.prof.masks[s];
    const unsigned via_dp =
        mask == 0 ? 0xFF : static_cast<unsigned>(std::countr_zero(mask));
    if (via_dp != v.rr.dist[s]) agree = false;
  }
  tally.matrices += 1;
  tally.syndromes += v.rr.syndromes;
  if (!agree) tally.mismatches.push_back(name + ": BFS and DP disagree");
  return v;
}

// ---------------------------------------------------------------------------
// Criterion 1 -- the construction grid.  Each case also feeds criteria 2
// and 7, which read the stored outcomes instead of recomputing.
// ---------------------------------------------------------------------------

struct GridOutcome {
  std::uint64_t n = 0;
  std::optional<std::uint32_t> sat;
  std::optional<std::uint32_t> R;
  std::optional<std::uint32_t> ell;
  std::optional<std::uint32_t> d;
  bool locally_optimal = false;
  bool minimal = false;
  std::string minimal_route;
  bool ok = false;
};

using GridKey = std::pair<int, int>;  // (q, rho)

bool criterion1(CrossTally& tally, std::map<GridKey, GridOutcome>& grid) {
  const std::vector<GridKey> cases = {
      {4, 1}, {4, 2}, {4, 3}, {5, 1}, {5, 2}, {5, 3}, {5, 4}, {7, 1},
      {7, 2}, {7, 3}, {8, 1}, {8, 2}, {8, 3}, {9, 1}, {9, 2}, {9, 3}};
  std::cout << "criterion 1: construction grid, " << cases.size()
            << " (q, rho) cases\n";
  bool all_ok = true;
  for (const auto& [q, rho] : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    GridOutcome out;
    const Field F = build_field(static_cast<std::uint64_t>(q));
    const covsat::pg::PointSet S =
        covsat::cons::construction_s(F, static_cast<std::uint32_t>(rho));
    out.n = S.size();
    const bool size_ok =
        out.n == static_cast<std::uint64_t>(rho + 1) * q + 1;

    // Point-side route: layered closure over the projective space.
    const auto sat = covsat::pg::saturation_level(S, kPointCap, kWorkers);
    out.sat = sat.level;
    const bool sat_ok = sat.level && *sat.level == static_cast<unsigned>(rho);

    // Syndrome-side route: BFS + DP on the bridged parity-check matrix.
    const ParityCheckMatrix H = covsat::codes::from_point_set(S);
    std::ostringstream nm;
    nm << "grid(" << q << "," << rho << ")";
    const Routes v = check_routes(nm.str(), H, rho + 1, tally);
    out.R = v.rr.radius;
    const bool R_ok = v.rr.radius && *v.rr.radius == rho + 1u;
    if (R_ok) out.ell = v.prof.capsule_floor(rho + 1);

    const auto md = covsat::codes::min_distance_small(H, 4);
    out.d = md.d;
    const bool d_ok = md.d && *md.d == 3;

    const auto lo =
        covsat::codes::local_optimality(H, v.rr, kSynCap, kWorkers);
    out.locally_optimal = lo.locally_optimal;

    // Minimality: point-side leave-one-out closures where the space is
    // small; above the threshold, the radius duality certifies it (for a
    // set saturating at exactly rho, deleting point j keeps it
    // rho-saturating iff the bridged code keeps covering radius <= rho+1
    // without column j -- precisely the local-optimality scan).
    const std::uint64_t theta =
        covsat::pg::point_count(2 * rho + 1, static_cast<std::uint64_t>(q));
    if (theta <= 200'000) {
      out.minimal =
          covsat::pg::is_minimal_saturating(S, rho, kPointCap, kWorkers);
      out.minimal_route = "point-side";
      if (out.minimal != lo.locally_optimal) {
        out.minimal_route += " (DISAGREES with radius duality)";
        all_ok = false;
      }
    } else {
      out.minimal = lo.locally_optimal;
      out.minimal_route = "radius-duality";
    }

    out.ok = size_ok && sat_ok && R_ok && d_ok && out.locally_optimal &&
             out.minimal;
    all_ok = all_ok && out.ok;
    grid[{q, rho}] = out;

    std::cout << "  (" << q << "," << rho << "): n=" << out.n
              << " saturation=" << (out.sat ? std::to_string(*out.sat) : "-")
              << " minimal=" << (out.minimal ? "yes" : "NO") << "("
              << out.minimal_route << ")"
              << " R=" << (out.R ? std::to_string(*out.R) : "-")
              << " d=" << (out.d ? std::to_string(*out.d) : ">=4")
              << " locally_optimal=" << (out.locally_optimal ? "yes" : "NO")
              << "  [" << (out.ok ? "ok" : "FAIL") << "] "
              << fmt_secs(seconds_since(t0)) << std::endl;
  }
  return all_ok;
}

// ---------------------------------------------------------------------------
// Criterion 2 -- capsule floors of the codimension-8 seeds, read off the
// profiles criterion 1 already computed.
// ---------------------------------------------------------------------------

bool criterion2(const std::map<GridKey, GridOutcome>& grid) {
  struct Want {
    int q;
    std::uint32_t ell;
  };
  bool ok = true;
  std::cout << "criterion 2: capsule floors on the (q, R=4) seeds\n ";
  for (const Want w : {Want{7, 4}, Want{8, 3}, Want{9, 4}}) {
    const auto it = grid.find({w.q, 3});
    const bool here = it != grid.end() && it->second.ell &&
                      *it->second.ell == w.ell;
    std::cout << "  (" << w.q << ",4): ell_max="
              << (it != grid.end() && it->second.ell
                      ? std::to_string(*it->second.ell)
                      : "-")
              << (w.ell == 4 ? " (=R)" : " (=R-1)")
              << (here ? "" : " MISMATCH");
    ok = ok && here;
  }
  std::cout << std::endl;
  return ok;
}

// ---------------------------------------------------------------------------
// Criterion 3 -- the first lifting construction, end to end.  The branch is
// data-driven: a measured (2, 2) seed must lift to the verified [144, 136]
// code; a seed whose capsule floor is not 2 must be refused with the
// precondition error, and observing that refusal is the passing outcome.
// ---------------------------------------------------------------------------

bool criterion3(CrossTally& tally) {
  const Field F4 = build_field(4);
  const ParityCheckMatrix H1 =
      covsat::codes::from_point_set(covsat::cons::construction_s(F4, 1));
  const auto seed = covsat::cons::measure_seed(H1, kSynCap, kWorkers);
  std::cout << "criterion 3: qm1 end to end on the codimension-4 seed\n"
            << "  measured seed: (R, ell) = (" << seed.R << ", " << seed.ell
            << ")\n";
  if (seed.R == 2 && seed.ell == 2) {
    const ParityCheckMatrix L = covsat::cons::qm1(seed, 2);
    const Routes v = check_routes("qm1(m=2)", L, 2, tally);
    const auto md = covsat::codes::min_distance_small(L, 4);
    const auto lo = covsat::codes::local_optimality(L, v.rr, kSynCap, kWorkers);
    const bool ok = L.cols() == 144 && L.rows() == 8 && v.rr.radius &&
                    *v.rr.radius == 2 && v.prof.capsule_floor(2) == 2u &&
                    md.d && *md.d == 3 && lo.locally_optimal;
    std::cout << "  lift accepted: [" << L.cols() << ", " << (L.cols() - 8)
              << "] verified " << (ok ? "ok" : "FAIL") << std::endl;
    return ok;
  }
  try {
    (void)covsat::cons::qm1(seed, 2);
  } catch (const covsat::refusal_error& e) {
    const std::string what = e.what();
    const bool ok = what.find("(R, ell) = (2, 0)") != std::string::npos;
    std::cout << "  refusal observed (this is the passing outcome): " << what
              << std::endl;
    return ok;
  }
  std::cout << "  FAIL: qm1 accepted a seed with ell != R" << std::endl;
  return false;
}

// ---------------------------------------------------------------------------
// Criterion 4 -- the second lifting construction at desk scale, both W-block
// variants.  Pass condition: both lifts verify covering radius R and the
// surface-covering property; the d = 3 statement is reported per variant.
// ---------------------------------------------------------------------------

bool criterion4(CrossTally& tally) {
  const auto t0 = std::chrono::steady_clock::now();
  const Field F4 = build_field(4);
  const ParityCheckMatrix H2 =
      covsat::codes::from_point_set(covsat::cons::construction_s(F4, 2));
  const auto seed = covsat::cons::measure_seed(H2, kSynCap, kWorkers);
  std::cout << "criterion 4: qm2 end to end at desk scale\n"
            << "  seed [13, 7]_4 measured (R, ell) = (" << seed.R << ", "
            << seed.ell << ")\n";
  if (seed.ell + 1 != seed.R) {
    std::cout << "  FAIL: no (R, R-1) seed available" << std::endl;
    return false;
  }
  // m = 2: the lifted redundancy is 6 + 3*2 = 12, and 4^12 = 16 777 216
  // syndromes stay within the 5*10^7 desk budget.
  bool ok = true;
  std::string d3_variants;
  for (const auto variant : {covsat::cons::QM2Variant::kLiteral,
                             covsat::cons::QM2Variant::kReduced}) {
    const bool literal = variant == covsat::cons::QM2Variant::kLiteral;
    const std::string name = literal ? "literal" : "reduced";
    const ParityCheckMatrix L = covsat::cons::qm2(seed, 2, variant);
    const Routes v = check_routes("qm2(" + name + ")", L, seed.R, tally);
    const auto md = covsat::codes::min_distance_small(L, 4);
    const bool radius_ok = v.rr.radius && *v.rr.radius == seed.R;
    const bool surface_ok = radius_ok && v.prof.surface_covering(seed.R);
    ok = ok && radius_ok && surface_ok;
    if (md.d && *md.d == 3) {
      if (!d3_variants.empty()) d3_variants += " and ";
      d3_variants += name;
    }
    std::cout << "  " << name << ": [" << L.cols() << ", " << (L.cols() - 12)
              << "]_4  R=" << (v.rr.radius ? std::to_string(*v.rr.radius) : "-")
              << " surface=" << (surface_ok ? "yes" : "NO")
              << " d=" << (md.d ? std::to_string(*md.d) : ">=5") << std::endl;
  }
  std::cout << "  d = 3 attained by: "
            << (d3_variants.empty() ? "neither variant" : d3_variants)
            << "  " << fmt_secs(seconds_since(t0)) << std::endl;
  return ok;
}

// ---------------------------------------------------------------------------
// Criterion 5 -- family lengths across the grid.  Closed-form equality must
// hold everywhere; the strict-improvement half fails at thirteen documented
// q = 8 points and the binary treats exactly that set as the expected
// outcome.
// ---------------------------------------------------------------------------

struct Crit5 {
  bool closed_ok = false;
  bool strict_clean = false;     // no strict-improvement failures at all
  bool as_documented = false;    // failures match the frozen list exactly
  int admissible = 0;
};

Crit5 criterion5() {
  // The frozen strict-improvement failure set: (q, R, t) triples where the
  // emitted length does not beat the previously known bound (one tie at
  // (8, 5, 4), both sides 2697; the rest exceed it slightly).
  const std::vector<std::array<int, 3>> documented = {
      {8, 4, 5}, {8, 4, 7}, {8, 4, 8}, {8, 5, 4}, {8, 5, 5},
      {8, 5, 6}, {8, 5, 7}, {8, 5, 8}, {8, 6, 4}, {8, 6, 5},
      {8, 6, 6}, {8, 6, 7}, {8, 6, 8}};
  Crit5 res;
  std::cout << "criterion 5: family lengths, q in {7,8,9,11}, R in {4,5,6}, "
               "admissible t <= 8\n";
  int closed_hits = 0;
  std::vector<std::array<int, 3>> fails;
  for (const int q : {7, 8, 9, 11}) {
    for (const int R : {4, 5, 6}) {
      for (int t = 2; t <= 8; ++t) {
        covsat::cons::FamilyPlan plan;
        try {
          plan = covsat::cons::family_plan(q, R, t);
        } catch (const covsat::invalid_argument_error&) {
          continue;  // inadmissible (q, R, t)
        }
        res.admissible += 1;
        const auto nv = covsat::bounds::new_tR(q, static_cast<std::int64_t>(t) * R, R);
        if (nv.applicable() && plan.n == *nv.value &&
            plan.closed_form == *nv.value) {
          closed_hits += 1;
        } else {
          std::cout << "  CLOSED-FORM MISMATCH at (q=" << q << ", R=" << R
                    << ", t=" << t << "): emitted " << plan.n << std::endl;
        }
        const auto kv = covsat::bounds::known_tR(q, static_cast<std::int64_t>(t) * R, R);
        if (kv.applicable() && !(plan.n < *kv.value)) {
          fails.push_back({q, R, t});
          std::cout << "  strict improvement fails at (q=" << q << ", R=" << R
                    << ", t=" << t << "): new " << plan.n << " vs known "
                    << *kv.value << (plan.n == *kv.value ? " (tie)" : "")
                    << std::endl;
        }
      }
    }
  }
  res.closed_ok = closed_hits == res.admissible && res.admissible == 69;
  res.strict_clean = fails.empty();
  res.as_documented = fails == documented;
  std::cout << "  closed-form equality: " << closed_hits << "/"
            << res.admissible << " admissible points\n"
            << "  strict improvement: fails at " << fails.size()
            << " points, documented set "
            << (res.as_documented ? "matched exactly" : "NOT matched")
            << std::endl;
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 6 -- the small plane sets, the triangle, and its Baer embedding.
// ---------------------------------------------------------------------------

bool criterion6(CrossTally& tally) {
  bool ok = true;
  std::cout << "criterion 6: plane saturating sets and the triangle\n";
  struct Want {
    std::uint64_t q;
    std::size_t size;
  };
  for (const Want w : {Want{9, 8}, Want{16, 11}, Want{25, 14}}) {
    const Field F = build_field(w.q);
    const covsat::pg::PointSet S = covsat::cons::plane_saturating_set(F);
    const auto sat = covsat::pg::saturation_level(S, kPointCap, kWorkers);
    const bool minimal =
        covsat::pg::is_minimal_saturating(S, 1, kPointCap, kWorkers);
    const Routes v = check_routes("plane(" + std::to_string(w.q) + ")",
                                  covsat::codes::from_point_set(S), 2, tally);
    const bool case_ok = S.size() == w.size && sat.level && *sat.level == 1 &&
                         minimal && v.rr.radius && *v.rr.radius == 2;
    ok = ok && case_ok;
    std::cout << "  q=" << w.q << ": size=" << S.size()
              << " saturation=" << (sat.level ? std::to_string(*sat.level) : "-")
              << " minimal=" << (minimal ? "yes" : "NO") << "  ["
              << (case_ok ? "ok" : "FAIL") << "]\n";
  }

  const Field F3 = build_field(3);
  const covsat::pg::PointSet tri = covsat::cons::triangle_double_blocking(F3);
  const bool blocking = covsat::pg::is_double_blocking(tri);
  const std::uint64_t meets = covsat::pg::min_line_intersections(tri);
  const Field F9 = build_field(9);
  const covsat::pg::PointSet emb = covsat::pg::baer_embed(tri, F9);
  const auto sat9 = covsat::pg::saturation_level(emb, kPointCap, kWorkers);
  (void)check_routes("baer(3->9)", covsat::codes::from_point_set(emb), 2,
                     tally);
  const bool tri_ok = tri.size() == 9 && blocking && meets >= 2 &&
                      sat9.level && *sat9.level == 1;
  ok = ok && tri_ok;
  std::cout << "  triangle PG(2,3): size=" << tri.size()
            << " double_blocking=" << (blocking ? "yes" : "NO")
            << " min_line_meets=" << meets << "; Baer image in PG(2,9) "
            << "saturation="
            << (sat9.level ? std::to_string(*sat9.level) : "-") << "  ["
            << (tri_ok ? "ok" : "FAIL") << "]" << std::endl;
  return ok;
}

// ---------------------------------------------------------------------------
// Criterion 7 -- the nine-column code hits the known exact length value at
// (q, r, R) = (4, 4, 2).
// ---------------------------------------------------------------------------

bool criterion7(const std::map<GridKey, GridOutcome>& grid) {
  const auto it = grid.find({4, 1});
  const auto exact = covsat::bounds::exact_value(4, 4, 2);
  const bool ok = it != grid.end() && it->second.n == 9 && it->second.R &&
                  *it->second.R == 2 && it->second.locally_optimal &&
                  exact && *exact == 9 && 9 == 2 * 4 + 1;
  std::cout << "criterion 7: exact value at (q, r, R) = (4, 4, 2)\n"
            << "  bridged seed: n=9, R=2, locally optimal; table value "
            << (exact ? std::to_string(*exact) : "-") << "  ["
            << (ok ? "ok" : "FAIL") << "]" << std::endl;
  return ok;
}

// ---------------------------------------------------------------------------
// Criterion 8 -- the oracle/property suite.
// ---------------------------------------------------------------------------

bool duality_suite() {
  // Random point sets: saturation measured point-side must equal the
  // bridged code's covering radius minus one, layer by layer.
  std::mt19937_64 rng(0xACCE97);
  struct Space {
    std::uint64_t q;
    std::uint32_t N;
  };
  const std::vector<Space> spaces = {{2, 2}, {3, 2}, {4, 2}, {5, 2},
                                     {7, 2}, {2, 3}, {3, 3}, {2, 4}};
  int sets = 0;
  bool ok = true;
  for (const Space sp : spaces) {
    const Field F = build_field(sp.q);
    const std::uint64_t theta = covsat::pg::point_count(sp.N, sp.q);
    for (int rep = 0; rep < 3; ++rep) {
      const std::size_t want = sp.N + 1 + (rep % 3);
      std::set<std::uint64_t> ranks;
      std::uniform_int_distribution<std::uint64_t> pick(0, theta - 1);
      while (ranks.size() < want) ranks.insert(pick(rng));
      covsat::pg::PointSet S(F, sp.N);
      for (const auto r : ranks) {
        S.append(covsat::pg::point_unrank(F, sp.N, r));
      }
      const auto sat = covsat::pg::saturation_level(S, kPointCap, kWorkers);
      const auto H = covsat::codes::from_point_set(S);
      const auto rr = covsat::codes::covering_radius(H, kSynCap, kWorkers);
      ++sets;
      if (sat.level.has_value() != rr.radius.has_value()) {
        ok = false;
        continue;
      }
      if (sat.level && *sat.level + 1 != *rr.radius) ok = false;
      // Layer equality: each point covered within k+1 set points accounts
      // for q-1 nonzero syndrome multiples at coset-leader weight <= k+1.
      for (std::size_t k = 0; k < sat.covered.size(); ++k) {
        std::uint64_t within = 0;
        for (std::uint64_t s = 0; s < rr.syndromes; ++s) {
          if (rr.dist[s] >= 1 && rr.dist[s] <= k + 1) ++within;
        }
        if ((sp.q - 1) * sat.covered[k] != within) ok = false;
      }
    }
  }
  std::cout << "  duality: point-side vs syndrome-side on " << sets
            << " random sets  [" << (ok ? "ok" : "FAIL") << "]\n";
  return ok;
}

bool field_axioms() {
  const auto t0 = std::chrono::steady_clock::now();
  int orders = 0;
  unsigned long long triples = 0;
  bool ok = true;
  for (std::int64_t q = 2; q <= 512; ++q) {
    if (!covsat::bounds::prime_power(q)) continue;
    ++orders;
    const Field F = build_field(static_cast<std::uint64_t>(q));
    const auto n = static_cast<elem_t>(q);
    for (elem_t a = 0; a < n && ok; ++a) {
      if (F.add(a, 0) != a || F.mul(a, 1) != a) ok = false;
      if (F.add(a, F.neg(a)) != 0) ok = false;
      if (a != 0 && F.mul(a, F.inv(a)) != 1) ok = false;
    }
    for (elem_t a = 0; a < n && ok; ++a) {
      for (elem_t b = 0; b < n && ok; ++b) {
        if (F.add(a, b) != F.add(b, a) || F.mul(a, b) != F.mul(b, a)) {
          ok = false;
        }
      }
    }
    for (elem_t a = 0; a < n && ok; ++a) {
      for (elem_t b = 0; b < n && ok; ++b) {
        for (elem_t c = 0; c < n; ++c) {
          if (F.add(F.add(a, b), c) != F.add(a, F.add(b, c)) ||
              F.mul(F.mul(a, b), c) != F.mul(a, F.mul(b, c)) ||
              F.mul(a, F.add(b, c)) != F.add(F.mul(a, b), F.mul(a, c))) {
            ok = false;
            break;
          }
        }
        triples += n;
      }
    }
    if (!ok) {
      std::cout << "  field axioms FAIL at q=" << q << "\n";
      break;
    }
  }
  std::cout << "  field axioms: exhaustive over " << orders
            << " prime-power orders q <= 512 (" << triples << " triples)  ["
            << (ok ? "ok" : "FAIL") << "] " << fmt_secs(seconds_since(t0))
            << "\n";
  return ok && orders >= 117;
}

bool direct_sums(CrossTally& tally) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto bridge = [](std::uint64_t q, std::uint32_t rho) {
    const Field F = build_field(q);
    return covsat::codes::from_point_set(covsat::cons::construction_s(F, rho));
  };
  const ParityCheckMatrix h14 = bridge(4, 1);  // R = 2
  const ParityCheckMatrix h24 = bridge(4, 2);  // R = 3
  const ParityCheckMatrix h15 = bridge(5, 1);  // R = 2
  const ParityCheckMatrix h17 = bridge(7, 1);  // R = 2
  struct Pair {
    const ParityCheckMatrix* a;
    const ParityCheckMatrix* b;
    std::uint32_t sum;
    const char* name;
  };
  const std::vector<Pair> pairs = {{&h14, &h14, 4, "4+4 rho1/rho1"},
                                   {&h14, &h24, 5, "4 rho1 + 4 rho2"},
                                   {&h24, &h24, 6, "4 rho2 + 4 rho2"},
                                   {&h15, &h15, 4, "5+5 rho1/rho1"},
                                   {&h17, &h17, 4, "7+7 rho1/rho1"}};
  bool ok = true;
  for (const Pair& p : pairs) {
    const ParityCheckMatrix D = covsat::cons::direct_sum(*p.a, *p.b);
    const Routes v = check_routes(std::string("dsum ") + p.name, D, p.sum,
                                  tally);
    if (!(v.rr.radius && *v.rr.radius == p.sum)) {
      ok = false;
      std::cout << "  direct sum " << p.name << ": radius "
                << (v.rr.radius ? std::to_string(*v.rr.radius) : "-")
                << " != " << p.sum << "\n";
    }
  }
  std::cout << "  direct sums: radii add on " << pairs.size()
            << " desk-scale pairs  [" << (ok ? "ok" : "FAIL") << "] "
            << fmt_secs(seconds_since(t0)) << "\n";
  return ok;
}

ParityCheckMatrix submatrix(const ParityCheckMatrix& H,
                            const std::vector<std::uint32_t>& rows,
                            const std::vector<std::uint32_t>& cols) {
  ParityCheckMatrix out(H.field(), static_cast<std::uint32_t>(rows.size()));
  for (const auto j : cols) {
    std::vector<elem_t> col;
    col.reserve(rows.size());
    for (const auto i : rows) col.push_back(H.at(i, j));
    out.append_column(col);
  }
  return out;
}

bool component_distances() {
  // The component codes of the codimension-8 seeds: the line block is a
  // [q, q-2, 3] MDS code; each conic block alone is [q-1, q-4, 4]; adding
  // its tangent column keeps d = 4 for even q but drops to d = 3 for odd q;
  // the last block behaves the same with the infinity column adjoined.
  bool ok = true;
  for (const std::uint64_t q : {7ull, 8ull, 9ull}) {
    const Field F = build_field(q);
    const ParityCheckMatrix H =
        covsat::codes::from_point_set(covsat::cons::construction_s(F, 3));
    const auto qi = static_cast<std::uint32_t>(q);
    const std::uint32_t odd_d = 3, even_d = 4;
    const std::uint32_t mixed = q % 2 == 0 ? even_d : odd_d;
    const auto d_of = [&](const std::vector<std::uint32_t>& rows,
                          const std::vector<std::uint32_t>& cols) {
      const auto md = covsat::codes::min_distance_small(submatrix(H, rows, cols), 4);
      return md.d ? *md.d : 0;
    };
    std::vector<std::uint32_t> line_cols;
    for (std::uint32_t j = 0; j < qi; ++j) line_cols.push_back(j);
    if (d_of({0, 1}, line_cols) != 3) ok = false;
    for (std::uint32_t u = 1; u <= 3; ++u) {
      const std::vector<std::uint32_t> rows = {2 * u - 1, 2 * u, 2 * u + 1};
      std::vector<std::uint32_t> conic;
      for (std::uint32_t j = u * qi; j <= u * qi + qi - 2; ++j) {
        conic.push_back(j);
      }
      if (d_of(rows, conic) != 4) ok = false;
      std::vector<std::uint32_t> with_t = conic;
      with_t.push_back((u + 1) * qi - 1);
      if (d_of(rows, with_t) != mixed) ok = false;
      if (u == 3) {
        std::vector<std::uint32_t> with_inf = conic;
        with_inf.push_back(4 * qi);  // the final infinity column
        if (d_of(rows, with_inf) != 4) ok = false;
        std::vector<std::uint32_t> with_both = with_t;
        with_both.push_back(4 * qi);
        if (d_of(rows, with_both) != mixed) ok = false;
      }
    }
    if (!ok) {
      std::cout << "  component distances FAIL at q=" << q << "\n";
      break;
    }
  }
  std::cout << "  component distances: line/conic/tangent/infinity blocks "
               "for q in {7,8,9}  ["
            << (ok ? "ok" : "FAIL") << "]\n";
  return ok;
}

bool criterion8(CrossTally& tally) {
  std::cout << "criterion 8: oracle and property suite\n";
  const bool dual = duality_suite();
  const bool fields = field_axioms();
  const bool sums = direct_sums(tally);
  const bool comps = component_distances();
  const bool cross = tally.ok();
  std::cout << "  cross-route: BFS vs weight-profile DP agreed on "
            << tally.matrices << " matrices (" << tally.syndromes
            << " syndromes total)  [" << (cross ? "ok" : "FAIL") << "]";
  for (const auto& m : tally.mismatches) std::cout << "\n    " << m;
  std::cout << std::endl;
  return dual && fields && sums && comps && cross;
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  std::cout << "covsat acceptance suite\n-----------------------\n";
  CrossTally tally;
  std::map<GridKey, GridOutcome> grid;

  bool c1 = false, c2 = false, c3 = false, c4 = false, c6 = false, c7 = false,
       c8 = false;
  Crit5 c5;
  try {
    c1 = criterion1(tally, grid);
    c2 = criterion2(grid);
    c3 = criterion3(tally);
    c4 = criterion4(tally);
    c5 = criterion5();
    c6 = criterion6(tally);
    c7 = criterion7(grid);
    c8 = criterion8(tally);
  } catch (const std::exception& e) {
    std::cout << "acceptance aborted: " << e.what() << std::endl;
    return 1;
  }

  // Criterion 5 is honest-red: the criterion itself fails (the strict
  // improvement does not hold everywhere), and the gate accepts only the
  // exact documented failure set.
  const bool c5_criterion = c5.closed_ok && c5.strict_clean;
  const bool c5_expected = c5.closed_ok && c5.as_documented;

  std::cout << "\nsummary\n";
  const auto line = [](int id, bool pass, const std::string& text,
                       const std::string& qualifier = "") {
    std::cout << "  criterion " << id << "  " << (pass ? "PASS" : "FAIL")
              << (qualifier.empty() ? "" : " " + qualifier) << "  " << text
              << "\n";
  };
  line(1, c1, "construction grid, 16 cases: size, saturation, minimality, "
              "radius, d = 3, local optimality");
  line(2, c2, "capsule floors 4/3/4 on the (7,4)/(8,4)/(9,4) seeds");
  line(3, c3, "qm1 precondition refusal on the (2, 0) seed is the specified "
              "outcome");
  line(4, c4, "qm2 both W variants verified (R, surface-covering); d = 3 "
              "reported per variant");
  line(5, c5_criterion,
       c5.closed_ok
           ? "closed-form equality 69/69; strict improvement fails at 13 "
             "documented q = 8 points"
           : "closed-form equality BROKEN",
       c5_criterion ? "" : (c5_expected ? "(expected)" : "(UNEXPECTED)"));
  line(6, c6, "plane sets 8/11/14 minimal 1-saturating; triangle double "
              "blocking; Baer image 1-saturating");
  line(7, c7, "nine columns realize the exact length value at (4, 4, 2)");
  line(8, c8, "cross-route, duality, exhaustive fields q <= 512, direct "
              "sums, component distances");

  const bool gate = c1 && c2 && c3 && c4 && c5_expected && c6 && c7 && c8;
  const int green = c1 + c2 + c3 + c4 + c5_criterion + c6 + c7 + c8;
  std::cout << "result: " << green << "/8 criteria green";
  if (gate && !c5_criterion) {
    std::cout << "; criterion 5 red matches the documented defect set, gate "
                 "accepts";
  }
  std::cout << "  (" << fmt_secs(seconds_since(t0)) << ")\n"
            << (gate ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL") << std::endl;
  return gate ? 0 : 1;
}
