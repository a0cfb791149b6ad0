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

// Exit codes: 0 success / all claims pass; 1 claim failure or internal
// inconsistency; 2 usage or parameter error; 3 a cap caused work to be
// skipped without any failure.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "covsat/bounds.hpp"
#include "covsat/codes.hpp"
#include "covsat/constructions.hpp"
#include "covsat/errors.hpp"
#include "covsat/field.hpp"
#include "covsat/geometry.hpp"
#include "covsat/matrix_io.hpp"
#include "covsat/verify.hpp"

namespace {

using covsat::gf::Field;

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  const std::string s(v);
  if (s.find_first_not_of("0123456789") != std::string::npos) {
    throw covsat::invalid_argument_error(std::string(name) +
                                         " must be a decimal integer, got '" +
                                         s + "'");
  }
  return std::stoull(s);
}

/// Emits a matrix to the given path ("-" = stdout).
void emit(const std::string& out, const covsat::codes::ParityCheckMatrix& H,
          const std::string& provenance) {
  if (out == "-") {
    covsat::io::write_matrix(std::cout, H, provenance);
  } else {
    covsat::io::write_matrix_file(out, H, provenance);
    std::cerr << "wrote " << H.rows() << "x" << H.cols() << " matrix to "
              << out << "\n";
  }
}

covsat::io::MatrixFile load(const std::string& path) {
  return covsat::io::read_matrix_file(path);
}

// ---------------------------------------------------------------------------
// Shared option bundles
// ---------------------------------------------------------------------------

struct CapOptions {
  std::uint64_t max_syndromes = 0;
  std::uint64_t max_points = 0;
  std::uint64_t max_columns = 0;
  unsigned workers = 1;

  void fill_defaults() {
    if (max_syndromes == 0) {
      max_syndromes = env_u64("COVSAT_MAX_SYNDROMES",
                              covsat::codes::kDefaultSyndromeCap);
    }
    if (max_points == 0) {
      max_points = env_u64("COVSAT_MAX_POINTS", covsat::pg::kDefaultPointCap);
    }
    if (max_columns == 0) {
      max_columns =
          env_u64("COVSAT_MAX_COLUMNS", covsat::cons::kDefaultColumnCap);
    }
    if (workers == 0) workers = 1;
  }
};

void add_cap_options(CLI::App* cmd, CapOptions& caps, bool with_columns) {
  cmd->add_option("--max-syndromes", caps.max_syndromes,
                  "Cap on the syndrome space q^r (default "
                  "COVSAT_MAX_SYNDROMES or 50000000)");
  cmd->add_option("--max-points", caps.max_points,
                  "Cap on the point-space size for saturation checks "
                  "(default COVSAT_MAX_POINTS or 10000000)");
  if (with_columns) {
    cmd->add_option("--max-columns", caps.max_columns,
                    "Cap on generated matrix columns (default "
                    "COVSAT_MAX_COLUMNS or 1000000)");
  }
  cmd->add_option("--workers", caps.workers,
                  "Worker threads (results are identical for any count)");
}

// ---------------------------------------------------------------------------
// family / bounds text+json emitters
// ---------------------------------------------------------------------------

nlohmann::json bounds_json(const covsat::bounds::BoundReport& rep) {
  nlohmann::json j;
  j["q"] = rep.q;
  j["r"] = rep.r;
  j["R"] = rep.R;
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : rep.entries) {
    entries.push_back({{"name", e.name},
                       {"value", e.value ? nlohmann::json(*e.value)
                                         : nlohmann::json(nullptr)},
                       {"note", e.note}});
  }
  j["entries"] = std::move(entries);
  j["best"] = rep.best ? nlohmann::json(*rep.best) : nlohmann::json(nullptr);
  j["constructed"] = rep.constructed ? nlohmann::json(*rep.constructed)
                                     : nlohmann::json(nullptr);
  j["margin"] =
      rep.margin ? nlohmann::json(*rep.margin) : nlohmann::json(nullptr);
  j["meets_new_exactly"] = rep.meets_new_exactly;
  return j;
}

void print_bounds_text(std::ostream& os,
                       const covsat::bounds::BoundReport& rep) {
  os << "covsat bounds  q=" << rep.q << " r=" << rep.r << " R=" << rep.R;
  if (rep.R > 0 && rep.r % rep.R == 0) os << " (t=" << rep.r / rep.R << ")";
  os << "\n";
  for (const auto& e : rep.entries) {
    os << "  " << e.name;
    for (std::size_t pad = e.name.size(); pad < 20; ++pad) os << ' ';
    if (e.value) {
      os << *e.value;
      if (rep.best && *e.value == *rep.best) os << "  <- best";
      if (!e.note.empty()) os << "  (" << e.note << ")";
    } else {
      os << "n/a: " << e.note;
    }
    os << "\n";
  }
  if (rep.constructed) {
    os << "  constructed         " << *rep.constructed;
    if (rep.margin) os << "  margin " << *rep.margin;
    os << "  meets_new_exactly=" << (rep.meets_new_exactly ? "yes" : "no")
       << "\n";
  }
}

nlohmann::json family_json(const covsat::cons::FamilyPlan& plan,
                           const covsat::bounds::BoundReport& bounds,
                           bool materialized) {
  nlohmann::json j;
  j["q"] = plan.q;
  j["R"] = plan.R;
  j["t"] = plan.t;
  if (plan.q % 2 == 0) j["m1"] = plan.m1;
  j["case"] = plan.case_label;
  nlohmann::json stages = nlohmann::json::array();
  for (const auto& st : plan.stages) {
    nlohmann::json s;
    s["op"] = st.op;
    if (st.op != "seed") s["m"] = st.m;
    s["n"] = st.n;
    s["r"] = st.r;
    s["claimed_R"] = st.claimed_R;
    s["claimed_ell"] = st.claimed_ell;
    s["verification"] = st.verification.empty() ? "not materialized"
                                                : st.verification;
    stages.push_back(std::move(s));
  }
  j["stages"] = std::move(stages);
  j["n"] = plan.n;
  j["r"] = plan.r;
  j["closed_form"] = plan.closed_form;
  j["materialized"] = materialized;
  j["bounds"] = bounds_json(bounds);
  return j;
}

void print_family_text(std::ostream& os, const covsat::cons::FamilyPlan& plan,
                       const covsat::bounds::BoundReport& bounds,
                       bool materialized) {
  os << "covsat family  q=" << plan.q << " R=" << plan.R << " t=" << plan.t
     << "  [" << plan.case_label << "]";
  if (plan.q % 2 == 0) os << "  m1=" << plan.m1;
  os << "\n";
  for (const auto& st : plan.stages) {
    os << "  stage " << st.op;
    if (st.op != "seed") os << "(m=" << st.m << ")";
    os << ": n=" << st.n << " r=" << st.r << " claims (R, ell)=("
       << st.claimed_R << ", " << st.claimed_ell << ")";
    if (!st.verification.empty()) os << " -- " << st.verification;
    os << "\n";
  }
  os << "  length " << plan.n << " = closed form " << plan.closed_form
     << (materialized ? "  (matrix materialized)" : "  (plan only)") << "\n";
  print_bounds_text(os, bounds);
}

// ---------------------------------------------------------------------------
// main
// ---------------------------------------------------------------------------

int run(int argc, char** argv) {
  CLI::App app{
      "covsat: generators, verifiers, and length bounds for short covering "
      "codes and saturating sets in projective spaces"};
  app.require_subcommand(1);
  int exit_code = 0;

  // ---- gen ---------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "Generate a parity-check matrix file");
  gen->require_subcommand(1);

  struct {
    std::uint64_t q = 0;
    std::uint32_t rho = 0;
    std::string out = "-";
  } s_args;
  auto* gen_s = gen->add_subcommand(
      "s", "The line+conics point set in PG(2rho+1, q), as a matrix");
  gen_s->add_option("--q", s_args.q, "Field order (q >= 3)")->required();
  gen_s->add_option("--rho", s_args.rho, "Saturation parameter rho >= 0")
      ->required();
  gen_s->add_option("-o,--out", s_args.out, "Output file (- = stdout)");
  gen_s->callback([&] {
    const Field F = covsat::gf::build_field(s_args.q);
    const auto S = covsat::cons::construction_s(F, s_args.rho);
    const auto H = covsat::codes::from_point_set(S);
    emit(s_args.out, H,
         "gen s --q " + std::to_string(s_args.q) + " --rho " +
             std::to_string(s_args.rho));
  });

  struct {
    std::string seed;
    std::uint32_t m = 0;
    std::string out = "-";
    CapOptions caps;
  } qm1_args;
  auto* gen_qm1 = gen->add_subcommand(
      "qm1", "Lift a surface-covering seed by the first q^m construction");
  gen_qm1->add_option("--seed", qm1_args.seed, "Seed matrix file")->required();
  gen_qm1->add_option("--m", qm1_args.m, "Extension degree m >= 1")
      ->required();
  gen_qm1->add_option("-o,--out", qm1_args.out, "Output file (- = stdout)");
  add_cap_options(gen_qm1, qm1_args.caps, true);
  gen_qm1->callback([&] {
    qm1_args.caps.fill_defaults();
    const auto mf = load(qm1_args.seed);
    const auto seed = covsat::cons::measure_seed(
        mf.H, qm1_args.caps.max_syndromes, qm1_args.caps.workers);
    const auto H =
        covsat::cons::qm1(seed, qm1_args.m, qm1_args.caps.max_columns);
    emit(qm1_args.out, H,
         "gen qm1 --m " + std::to_string(qm1_args.m) + " --seed " +
             covsat::io::matrix_digest(mf.H));
  });

  struct {
    std::string seed;
    std::uint32_t m = 0;
    std::string variant = "literal";
    std::string out = "-";
    CapOptions caps;
  } qm2_args;
  auto* gen_qm2 = gen->add_subcommand(
      "qm2", "Lift an (R, R-1) seed by the second q^m construction");
  gen_qm2->add_option("--seed", qm2_args.seed, "Seed matrix file")->required();
  gen_qm2->add_option("--m", qm2_args.m, "Extension degree m >= 1")
      ->required();
  gen_qm2
      ->add_option("--variant", qm2_args.variant,
                   "W block reading: literal | reduced")
      ->check(CLI::IsMember({"literal", "reduced"}));
  gen_qm2->add_option("-o,--out", qm2_args.out, "Output file (- = stdout)");
  add_cap_options(gen_qm2, qm2_args.caps, true);
  gen_qm2->callback([&] {
    qm2_args.caps.fill_defaults();
    const auto mf = load(qm2_args.seed);
    const auto seed = covsat::cons::measure_seed(
        mf.H, qm2_args.caps.max_syndromes, qm2_args.caps.workers);
    const auto variant = qm2_args.variant == "literal"
                             ? covsat::cons::QM2Variant::kLiteral
                             : covsat::cons::QM2Variant::kReduced;
    const auto H = covsat::cons::qm2(seed, qm2_args.m, variant,
                                     qm2_args.caps.max_columns);
    emit(qm2_args.out, H,
         "gen qm2 --m " + std::to_string(qm2_args.m) + " --variant " +
             qm2_args.variant + " --seed " + covsat::io::matrix_digest(mf.H));
  });

  struct {
    std::string a, b;
    std::string out = "-";
  } dsum_args;
  auto* gen_dsum =
      gen->add_subcommand("dsum", "Block-diagonal direct sum of two matrices");
  gen_dsum->add_option("--a", dsum_args.a, "First matrix file")->required();
  gen_dsum->add_option("--b", dsum_args.b, "Second matrix file")->required();
  gen_dsum->add_option("-o,--out", dsum_args.out, "Output file (- = stdout)");
  gen_dsum->callback([&] {
    const auto ma = load(dsum_args.a);
    const auto mb = load(dsum_args.b);
    const auto H = covsat::cons::direct_sum(ma.H, mb.H);
    emit(dsum_args.out, H,
         "gen dsum --a " + covsat::io::matrix_digest(ma.H) + " --b " +
             covsat::io::matrix_digest(mb.H));
  });

  struct {
    std::uint64_t q = 0;
    std::string out = "-";
  } plane_args;
  auto* gen_plane = gen->add_subcommand(
      "plane-sat", "The (3 sqrt(q) - 1)-point saturating set in PG(2, q)");
  gen_plane->add_option("--q", plane_args.q, "Square field order")->required();
  gen_plane->add_option("-o,--out", plane_args.out,
                        "Output file (- = stdout)");
  gen_plane->callback([&] {
    const Field F = covsat::gf::build_field(plane_args.q);
    const auto S = covsat::cons::plane_saturating_set(F);
    emit(plane_args.out, covsat::codes::from_point_set(S),
         "gen plane-sat --q " + std::to_string(plane_args.q));
  });

  struct {
    std::uint64_t q = 0;
    std::string out = "-";
  } tri_args;
  auto* gen_tri = gen->add_subcommand(
      "triangle", "Three coordinate lines of PG(2, q): a double blocking set");
  gen_tri->add_option("--q", tri_args.q, "Field order")->required();
  gen_tri->add_option("-o,--out", tri_args.out, "Output file (- = stdout)");
  gen_tri->callback([&] {
    const Field F = covsat::gf::build_field(tri_args.q);
    const auto S = covsat::cons::triangle_double_blocking(F);
    emit(tri_args.out, covsat::codes::from_point_set(S),
         "gen triangle --q " + std::to_string(tri_args.q));
  });

  // ---- verify ------------------------------------------------------------
  struct {
    std::string file;
    covsat::io::Claims claims;
    CapOptions caps;
    std::uint32_t max_d = 4;
    std::uint64_t max_local_opt_work = 5'000'000'000ULL;
    bool skip_local_opt = false;
    bool json = false;
    bool timings = false;
  } v_args;
  auto* verify = app.add_subcommand(
      "verify", "Measure a matrix file and judge optional claims");
  verify->add_option("file", v_args.file, "Matrix file to verify")->required();
  verify->add_option("--n", v_args.claims.n, "Claimed length");
  verify->add_option("--R", v_args.claims.R, "Claimed covering radius");
  verify->add_option("--ell", v_args.claims.ell, "Claimed capsule floor");
  verify->add_option("--d", v_args.claims.d, "Claimed minimum distance");
  verify->add_option("--surface", v_args.claims.surface_covering,
                     "Claimed surface-covering flag (true/false)");
  verify->add_option("--locally-optimal", v_args.claims.locally_optimal,
                     "Claimed local optimality (true/false)");
  verify->add_option("--saturation", v_args.claims.saturation,
                     "Claimed saturation level rho of the column point set");
  verify->add_option("--minimal", v_args.claims.minimal,
                     "Claimed minimality as a rho-saturating set");
  add_cap_options(verify, v_args.caps, false);
  verify->add_option("--max-d", v_args.max_d,
                     "Exact minimum-distance search depth (<= 4)");
  verify->add_option("--max-local-opt-work", v_args.max_local_opt_work,
                     "Step budget for the local-optimality check");
  verify->add_flag("--skip-local-opt", v_args.skip_local_opt,
                   "Skip the local-optimality check");
  verify->add_flag("--json", v_args.json, "Emit the report as JSON");
  verify->add_flag("--timings", v_args.timings,
                   "Include wall-clock fields (non-deterministic bytes)");
  verify->callback([&] {
    v_args.caps.fill_defaults();
    const auto mf = load(v_args.file);
    covsat::io::VerifyOptions opt;
    opt.max_syndromes = v_args.caps.max_syndromes;
    opt.max_points = v_args.caps.max_points;
    opt.max_d = v_args.max_d;
    opt.max_local_opt_work = v_args.max_local_opt_work;
    opt.skip_local_opt = v_args.skip_local_opt;
    opt.workers = v_args.caps.workers;
    opt.timings = v_args.timings;
    const auto rep = covsat::io::verify_matrix(mf.H, v_args.claims, opt);
    std::cout << (v_args.json ? covsat::io::to_json(rep, opt.timings)
                              : covsat::io::to_text(rep, opt.timings));
    exit_code = rep.any_fail() ? 1 : (rep.any_skip() ? 3 : 0);
  });

  // ---- family ------------------------------------------------------------
  struct {
    std::int64_t q = 0;
    std::int64_t R = 0;
    std::int64_t t = 0;
    std::string out;
    CapOptions caps;
    bool json = false;
  } f_args;
  auto* family = app.add_subcommand(
      "family", "Plan (and optionally build) the r = tR family pipeline");
  family->add_option("--q", f_args.q, "Field order")->required();
  family->add_option("--R", f_args.R, "Covering radius (>= 4)")->required();
  family->add_option("--t", f_args.t, "Codimension factor: r = tR")
      ->required();
  family->add_option("-o,--out", f_args.out,
                     "Materialize the matrix to this file (- = stdout)");
  add_cap_options(family, f_args.caps, true);
  family->add_flag("--json", f_args.json, "Emit the report as JSON");
  family->callback([&] {
    f_args.caps.fill_defaults();
    covsat::cons::FamilyPlan plan;
    bool materialized = false;
    if (f_args.out.empty()) {
      plan = covsat::cons::family_plan(f_args.q, f_args.R, f_args.t);
    } else {
      const Field F =
          covsat::gf::build_field(static_cast<std::uint64_t>(f_args.q));
      auto res = covsat::cons::family_codimension_tR(
          F, f_args.R, f_args.t, f_args.caps.max_syndromes,
          f_args.caps.workers, f_args.caps.max_columns);
      plan = std::move(res.plan);
      materialized = true;
      emit(f_args.out, res.H,
           "family --q " + std::to_string(f_args.q) + " --R " +
               std::to_string(f_args.R) + " --t " + std::to_string(f_args.t));
    }
    const auto brep =
        covsat::bounds::compare(plan.q, plan.r, plan.R, plan.n);
    if (f_args.json) {
      std::cout << family_json(plan, brep, materialized).dump(2) << "\n";
    } else {
      print_family_text(std::cout, plan, brep, materialized);
    }
  });

  // ---- bounds ------------------------------------------------------------
  struct {
    std::int64_t q = 0;
    std::int64_t R = 0;
    std::optional<std::int64_t> r;
    std::optional<std::int64_t> t;
    std::optional<std::int64_t> n;
    bool json = false;
  } b_args;
  auto* bounds = app.add_subcommand(
      "bounds", "Evaluate the length bounds for given (q, r, R)");
  bounds->add_option("--q", b_args.q, "Field order")->required();
  bounds->add_option("--R", b_args.R, "Covering radius")->required();
  auto* opt_r = bounds->add_option("--r", b_args.r, "Codimension r");
  auto* opt_t =
      bounds->add_option("--t", b_args.t, "Codimension factor (r = tR)");
  opt_r->excludes(opt_t);
  bounds->add_option("--n", b_args.n,
                     "Constructed length to compare against the bounds");
  bounds->add_flag("--json", b_args.json, "Emit the report as JSON");
  bounds->callback([&] {
    if (!b_args.r && !b_args.t) {
      throw covsat::invalid_argument_error("bounds: pass --r or --t");
    }
    const std::int64_t r = b_args.r ? *b_args.r : *b_args.t * b_args.R;
    const auto rep = covsat::bounds::compare(b_args.q, r, b_args.R, b_args.n);
    if (b_args.json) {
      std::cout << bounds_json(rep).dump(2) << "\n";
    } else {
      print_bounds_text(std::cout, rep);
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const covsat::cap_error& e) {
    std::cerr << "covsat: skipped: " << e.what() << "\n";
    return 3;
  } catch (const covsat::invalid_argument_error& e) {
    std::cerr << "covsat: error: " << e.what() << "\n";
    return 2;
  } catch (const covsat::refusal_error& e) {
    std::cerr << "covsat: refused: " << e.what() << "\n";
    return 2;
  } catch (const covsat::error& e) {
    std::cerr << "covsat: failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "covsat: failure: " << e.what() << "\n";
    return 1;
  }
}
