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

#include "covsat/codes.hpp"
#include "covsat/geometry.hpp"

namespace covsat::io {

/// Caps and switches for a verification run.  Every expensive step that
/// would exceed its cap is reported as "skipped" with the reason, never
/// silently dropped.
struct VerifyOptions {
  std::uint64_t max_syndromes = codes::kDefaultSyndromeCap;
  std::uint64_t max_points = pg::kDefaultPointCap;
  std::uint32_t max_d = 4;  ///< min-distance search depth (<= 4 exact)
  /// Rough step budget for the local-optimality check (mask route when
  /// n <= 64, per-column BFS otherwise).
  std::uint64_t max_local_opt_work = 5'000'000'000ULL;
  bool skip_local_opt = false;
  unsigned workers = 1;
  bool timings = false;  ///< include wall-clock fields in emitted reports
};

/// Claims to check; absent fields are measured (when feasible) but not judged.
struct Claims {
  std::optional<std::uint64_t> n;
  std::optional<std::uint32_t> R;
  std::optional<std::uint32_t> ell;
  std::optional<std::uint32_t> d;
  std::optional<bool> surface_covering;
  std::optional<bool> locally_optimal;
  std::optional<std::uint32_t> saturation;  ///< rho: saturation_level == rho
  std::optional<bool> minimal;  ///< minimal rho-saturating (needs saturation)

  [[nodiscard]] bool any() const {
    return n || R || ell || d || surface_covering || locally_optimal ||
           saturation || minimal;
  }
};

enum class CheckStatus { kPass, kFail, kSkip, kInfo };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kInfo;
  std::string measured;  ///< printable measured value ("-" when unknown)
  std::string expected;  ///< printable claim ("-" when none)
  std::string note;      ///< skip reason or extra detail
};

struct VerifyReport {
  std::string digest;  ///< fnv1a-64 over the canonical matrix content
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  std::uint64_t r = 0;
  std::uint32_t rank = 0;
  std::uint64_t syndromes = 0;  ///< q^r when walked, else 0

  // Measured parameters (absent when skipped or infinite).
  std::optional<std::uint32_t> R;
  std::optional<std::uint32_t> ell;
  std::optional<std::uint32_t> d;
  std::uint32_t d_at_least = 1;
  std::optional<bool> surface_covering;
  std::optional<bool> locally_optimal;
  std::optional<std::uint32_t> saturation;
  std::optional<bool> minimal;

  std::vector<CheckResult> checks;
  double seconds = 0.0;

  [[nodiscard]] bool any_fail() const;
  [[nodiscard]] bool any_skip() const;
  /// "PASS" when no check failed or was skipped, "FAIL" on any failure,
  /// else "SKIP".
  [[nodiscard]] std::string result() const;
};

/// Runs the verifier pipeline on H: rank, syndrome BFS, weight-profile DP
/// (the two routes are compared syndrome for syndrome), minimum distance,
/// and -- when claimed -- local optimality and point-set saturation.
[[nodiscard]] VerifyReport verify_matrix(const codes::ParityCheckMatrix& H,
                                         const Claims& claims,
                                         const VerifyOptions& opt);

/// Canonical content digest (fnv1a-64 over field parameters, shape, and entries).
[[nodiscard]] std::string matrix_digest(const codes::ParityCheckMatrix& H);

/// Human-readable report.  Deterministic; runtime appears only with
/// opt.timings.
[[nodiscard]] std::string to_text(const VerifyReport& rep, bool timings);

/// Machine-readable JSON report (single object, 2-space indent, sorted
/// keys stable across runs).  Runtime appears only with opt.timings.
[[nodiscard]] std::string to_json(const VerifyReport& rep, bool timings);

}  // namespace covsat::io
