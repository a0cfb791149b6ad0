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

#include "covsat/verify.hpp"

#include <bit>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "covsat/errors.hpp"
#include "json.hpp"

namespace covsat::io {

namespace {

std::string u2s(std::uint64_t v) { return std::to_string(v); }

std::string opt2s(const std::optional<std::uint32_t>& v) {
  return v ? std::to_string(*v) : std::string("-");
}

std::string bool2s(bool b) { return b ? "yes" : "no"; }

std::string opt2s(const std::optional<bool>& v) {
  return v ? bool2s(*v) : std::string("-");
}

const char* status_word(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkip: return "skip";
    case CheckStatus::kInfo: return "info";
  }
  return "info";
}

/// True iff q^e <= cap; on success *out = q^e.
bool pow_within(std::uint64_t q, std::uint64_t e, std::uint64_t cap,
                std::uint64_t* out) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (v > cap / q) return false;
    v *= q;
  }
  if (v > cap) return false;
  if (out) *out = v;
  return true;
}

class Fnv1a {
 public:
  void mix(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h_ ^= (v >> (8 * i)) & 0xFF;
      h_ *= 0x100000001b3ULL;
    }
  }
  [[nodiscard]] std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

}  // namespace

std::string matrix_digest(const codes::ParityCheckMatrix& H) {
  Fnv1a f;
  const gf::Field& F = H.field();
  f.mix(F.characteristic());
  f.mix(F.degree());
  for (const auto c : F.modulus()) f.mix(c);
  f.mix(H.rows());
  f.mix(H.cols());
  for (const auto e : H.flat()) f.mix(e);
  std::ostringstream os;
  os << "fnv1a:" << std::hex << std::setw(16) << std::setfill('0')
     << f.value();
  return os.str();
}

bool VerifyReport::any_fail() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::kFail) return true;
  }
  return false;
}

bool VerifyReport::any_skip() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::kSkip) return true;
  }
  return false;
}

std::string VerifyReport::result() const {
  if (any_fail()) return "FAIL";
  if (any_skip()) return "SKIP";
  return "PASS";
}

VerifyReport verify_matrix(const codes::ParityCheckMatrix& H,
                           const Claims& claims, const VerifyOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport rep;
  rep.digest = matrix_digest(H);
  rep.q = H.field().order();
  rep.n = H.cols();
  rep.r = H.rows();
  rep.rank = H.rank();

  const auto add = [&rep](std::string name, CheckStatus st,
                          std::string measured, std::string expected,
                          std::string note) {
    rep.checks.push_back(CheckResult{std::move(name), st, std::move(measured),
                                     std::move(expected), std::move(note)});
  };
  const auto judge_eq = [&add](const std::string& name, std::uint64_t measured,
                               std::uint64_t expected,
                               const std::string& note = "") {
    add(name,
        measured == expected ? CheckStatus::kPass : CheckStatus::kFail,
        u2s(measured), u2s(expected), note);
  };

  if (claims.n) judge_eq("n", rep.n, *claims.n);

  const bool spans = (rep.rank == rep.r);
  if (!spans) {
    add("span", CheckStatus::kFail, "rank " + u2s(rep.rank),
        "rank " + u2s(rep.r),
        "columns do not span GF(q)^r; the covering radius is infinite");
  }

  // ---- syndrome-space measurements (BFS + weight-profile cross-check) ----
  std::uint64_t space = 0;
  const bool walkable =
      pow_within(rep.q, rep.r, opt.max_syndromes, &space);
  const std::string cap_note =
      "syndrome space q^" + u2s(rep.r) + " exceeds the cap " +
      u2s(opt.max_syndromes) + " (raise --max-syndromes / COVSAT_MAX_SYNDROMES)";

  codes::RadiusResult rr;
  bool walked = false;
  if (walkable) {
    rr = codes::covering_radius(H, opt.max_syndromes, opt.workers);
    rep.syndromes = rr.syndromes;
    walked = true;
    if (rr.radius) {
      rep.R = *rr.radius;
      if (*rep.R <= 15 && *rep.R >= 1) {
        const codes::CoverageProfile prof =
            codes::capsule_spectrum(H, *rep.R, opt.max_syndromes, opt.workers);
        std::uint64_t mismatches = 0;
        for (std::uint64_t s = 0; s < space; ++s) {
          const std::uint32_t via_dp =
              prof.masks[s] ? static_cast<std::uint32_t>(
                                  std::countr_zero(prof.masks[s]))
                            : 0xFFFFFFFFu;
          const std::uint32_t via_bfs =
              rr.dist[s] == 0xFF ? 0xFFFFFFFFu : rr.dist[s];
          if (via_dp != via_bfs) ++mismatches;
        }
        if (mismatches == 0) {
          add("cross-route", CheckStatus::kPass, "agree", "agree",
              "BFS and weight-profile coset-leader weights match on all " +
                  u2s(space) + " syndromes");
        } else {
          add("cross-route", CheckStatus::kFail, u2s(mismatches) + " mismatches",
              "agree", "the two routes disagree; implementation defect");
        }
        rep.ell = prof.capsule_floor(*rep.R);
        rep.surface_covering = prof.surface_covering(*rep.R);
      }
    }
  }

  const auto syndrome_claim =
      [&](const std::string& name, const std::optional<std::uint32_t>& claim,
          const std::optional<std::uint32_t>& measured) {
        if (!claim) return;
        if (!walked) {
          add(name, CheckStatus::kSkip, "-", u2s(*claim), cap_note);
        } else if (!measured) {
          add(name, CheckStatus::kFail, "none", u2s(*claim),
              rr.radius ? "radius exceeds the weight-profile cap"
                        : "covering radius infinite (rank-deficient matrix)");
        } else {
          judge_eq(name, *measured, *claim);
        }
      };
  syndrome_claim("R", claims.R, rep.R);
  syndrome_claim("ell", claims.ell, rep.ell);

  if (claims.surface_covering) {
    if (!walked) {
      add("surface_covering", CheckStatus::kSkip, "-",
          bool2s(*claims.surface_covering), cap_note);
    } else if (!rep.surface_covering.has_value()) {
      add("surface_covering", CheckStatus::kFail, "none",
          bool2s(*claims.surface_covering),
          "covering radius unavailable");
    } else {
      add("surface_covering",
          *rep.surface_covering == *claims.surface_covering
              ? CheckStatus::kPass
              : CheckStatus::kFail,
          bool2s(*rep.surface_covering), bool2s(*claims.surface_covering), "");
    }
  }

  // ---- minimum distance ---------------------------------------------------
  {
    const codes::MinDistanceResult md =
        codes::min_distance_small(H, opt.max_d);
    rep.d = md.d;
    rep.d_at_least = md.at_least;
    if (claims.d) {
      if (rep.d) {
        judge_eq("d", *rep.d, *claims.d);
      } else if (*claims.d < md.at_least) {
        add("d", CheckStatus::kFail, ">= " + u2s(md.at_least), u2s(*claims.d),
            "every word of weight below " + u2s(md.at_least) + " was excluded");
      } else {
        add("d", CheckStatus::kSkip, ">= " + u2s(md.at_least), u2s(*claims.d),
            "exact search capped at weight " + u2s(opt.max_d));
      }
    }
  }

  // ---- local optimality ---------------------------------------------------
  if (claims.locally_optimal) {
    const std::string expected = bool2s(*claims.locally_optimal);
    if (opt.skip_local_opt) {
      add("locally_optimal", CheckStatus::kSkip, "-", expected,
          "disabled by --skip-local-opt");
    } else if (!walked) {
      add("locally_optimal", CheckStatus::kSkip, "-", expected, cap_note);
    } else if (!rep.R) {
      add("locally_optimal", CheckStatus::kFail, "none", expected,
          "covering radius infinite (rank-deficient matrix)");
    } else {
      const __int128 est = static_cast<__int128>(*rep.R + 1) * space * rep.n *
                           (rep.n <= 64 ? 1 : rep.n);
      if (est > static_cast<__int128>(opt.max_local_opt_work)) {
        add("locally_optimal", CheckStatus::kSkip, "-", expected,
            "estimated work exceeds the budget " +
                u2s(opt.max_local_opt_work));
      } else {
        const codes::LocalOptResult lo = codes::local_optimality(
            H, rr, opt.max_syndromes, opt.workers,
            codes::LocalOptStrategy::kAuto);
        rep.locally_optimal = lo.locally_optimal;
        std::string note;
        if (!lo.removable.empty()) {
          note = "removable column " + u2s(lo.removable.front());
          if (lo.removable.size() > 1) {
            note += " (+" + u2s(lo.removable.size() - 1) + " more)";
          }
        }
        add("locally_optimal",
            lo.locally_optimal == *claims.locally_optimal ? CheckStatus::kPass
                                                          : CheckStatus::kFail,
            bool2s(lo.locally_optimal), expected, note);
      }
    }
  }

  // ---- point-side saturation ----------------------------------------------
  if (claims.saturation || claims.minimal) {
    std::optional<pg::PointSet> S;
    std::string bridge_error;
    try {
      S = codes::to_point_set(H);
    } catch (const covsat::error& e) {
      bridge_error = e.what();
    }
    if (claims.saturation) {
      if (!S) {
        add("saturation", CheckStatus::kFail, "-", u2s(*claims.saturation),
            "columns are not a projective point set: " + bridge_error);
      } else {
        try {
          const pg::SaturationResult sr =
              pg::saturation_level(*S, opt.max_points, opt.workers);
          rep.saturation = sr.level;
          if (!sr.level) {
            add("saturation", CheckStatus::kFail, "none",
                u2s(*claims.saturation),
                "the set does not saturate the space at any level");
          } else {
            judge_eq("saturation", *sr.level, *claims.saturation);
          }
        } catch (const covsat::cap_error& e) {
          add("saturation", CheckStatus::kSkip, "-", u2s(*claims.saturation),
              e.what());
        }
      }
    }
    if (claims.minimal) {
      if (!S) {
        add("minimal", CheckStatus::kFail, "-", bool2s(*claims.minimal),
            "columns are not a projective point set: " + bridge_error);
      } else if (!claims.saturation) {
        add("minimal", CheckStatus::kFail, "-", bool2s(*claims.minimal),
            "a minimality claim needs a saturation level claim to pin rho");
      } else {
        try {
          const bool min = pg::is_minimal_saturating(
              *S, *claims.saturation, opt.max_points, opt.workers);
          rep.minimal = min;
          add("minimal",
              min == *claims.minimal ? CheckStatus::kPass : CheckStatus::kFail,
              bool2s(min), bool2s(*claims.minimal), "");
        } catch (const covsat::cap_error& e) {
          add("minimal", CheckStatus::kSkip, "-", bool2s(*claims.minimal),
              e.what());
        }
      }
    }
  }

  const auto t1 = std::chrono::steady_clock::now();
  rep.seconds = std::chrono::duration<double>(t1 - t0).count();
  return rep;
}

std::string to_text(const VerifyReport& rep, bool timings) {
  std::ostringstream os;
  os << "covsat verify report\n";
  os << "  digest    " << rep.digest << "\n";
  os << "  field     GF(" << rep.q << ")\n";
  os << "  size      n=" << rep.n << " r=" << rep.r << " rank=" << rep.rank
     << "\n";
  if (rep.syndromes) {
    os << "  syndromes " << rep.syndromes << "\n";
  }
  os << "  measured  R=" << opt2s(rep.R) << " ell=" << opt2s(rep.ell)
     << " surface=" << opt2s(rep.surface_covering);
  if (rep.d) {
    os << " d=" << *rep.d;
  } else {
    os << " d>=" << rep.d_at_least;
  }
  os << " locally_optimal=" << opt2s(rep.locally_optimal);
  if (rep.saturation || rep.minimal) {
    os << " saturation=" << opt2s(rep.saturation)
       << " minimal=" << opt2s(rep.minimal);
  }
  os << "\n";
  if (!rep.checks.empty()) {
    os << "  checks\n";
    for (const auto& c : rep.checks) {
      os << "    [" << status_word(c.status) << "] " << c.name << ": measured "
         << c.measured << ", expected " << c.expected;
      if (!c.note.empty()) os << "  (" << c.note << ")";
      os << "\n";
    }
  }
  os << "  result    " << rep.result() << "\n";
  if (timings) {
    os << "  time      " << std::fixed << std::setprecision(3) << rep.seconds
       << " s\n";
  }
  return os.str();
}

std::string to_json(const VerifyReport& rep, bool timings) {
  nlohmann::json j;
  j["digest"] = rep.digest;
  j["field"] = {{"q", rep.q}};
  j["shape"] = {{"n", rep.n}, {"r", rep.r}, {"rank", rep.rank}};
  j["syndromes"] = rep.syndromes;
  nlohmann::json m;
  m["R"] = rep.R ? nlohmann::json(*rep.R) : nlohmann::json(nullptr);
  m["ell"] = rep.ell ? nlohmann::json(*rep.ell) : nlohmann::json(nullptr);
  m["surface_covering"] = rep.surface_covering
                              ? nlohmann::json(*rep.surface_covering)
                              : nlohmann::json(nullptr);
  m["d"] = rep.d ? nlohmann::json(*rep.d) : nlohmann::json(nullptr);
  m["d_at_least"] = rep.d_at_least;
  m["locally_optimal"] = rep.locally_optimal
                             ? nlohmann::json(*rep.locally_optimal)
                             : nlohmann::json(nullptr);
  m["saturation"] = rep.saturation ? nlohmann::json(*rep.saturation)
                                   : nlohmann::json(nullptr);
  m["minimal"] =
      rep.minimal ? nlohmann::json(*rep.minimal) : nlohmann::json(nullptr);
  j["measured"] = std::move(m);
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : rep.checks) {
    checks.push_back({{"name", c.name},
                      {"status", status_word(c.status)},
                      {"measured", c.measured},
                      {"expected", c.expected},
                      {"note", c.note}});
  }
  j["checks"] = std::move(checks);
  j["result"] = rep.result();
  if (timings) j["runtime_seconds"] = rep.seconds;
  return j.dump(2) + "\n";
}

}  // namespace covsat::io
