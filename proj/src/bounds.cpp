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

#include "covsat/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace covsat::bounds {

namespace {

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

std::int64_t checked(__int128 v, const char* what) {
  if (v < 0 || v > static_cast<__int128>(kMax)) {
    throw error(std::string("bound arithmetic overflows 64 bits in ") + what);
  }
  return static_cast<std::int64_t>(v);
}

/// q^e when e >= 0, else 0 (the floor of a proper fraction).
std::int64_t pow_or_zero(std::int64_t q, std::int64_t e) {
  if (e < 0) return 0;
  return ipow(q, static_cast<std::uint32_t>(e));
}

/// Smallest L >= 0 with q^L >= v (exact integer ceil(log_q v) for v >= 1).
std::int64_t ceil_log(std::int64_t q, std::int64_t v) {
  std::int64_t L = 0;
  __int128 p = 1;
  while (p < v) {
    p *= q;
    ++L;
  }
  return L;
}

BoundValue na(std::string reason) { return {std::nullopt, std::move(reason)}; }

}  // namespace

std::int64_t ipow(std::int64_t q, std::uint32_t e) {
  if (q < 0) throw invalid_argument_error("ipow: negative base");
  __int128 v = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    v *= q;
    if (v > static_cast<__int128>(kMax)) {
      throw error("bound arithmetic overflows 64 bits in ipow");
    }
  }
  return static_cast<std::int64_t>(v);
}

std::optional<std::int64_t> exact_root(std::int64_t q, std::uint32_t k) {
  if (q < 1 || k < 1) return std::nullopt;
  if (k == 1) return q;
  auto guess = static_cast<std::int64_t>(
      std::llround(std::pow(static_cast<double>(q), 1.0 / k)));
  for (std::int64_t c = std::max<std::int64_t>(1, guess - 2); c <= guess + 2;
       ++c) {
    __int128 p = 1;
    for (std::uint32_t i = 0; i < k && p <= q; ++i) p *= c;
    if (p == q) return c;
  }
  return std::nullopt;
}

bool is_prime(std::int64_t v) {
  if (v < 2) return false;
  for (std::int64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

std::optional<PrimePower> prime_power(std::int64_t q) {
  if (q < 2) return std::nullopt;
  std::int64_t p = q;
  for (std::int64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::uint32_t h = 0;
  std::int64_t v = q;
  while (v % p == 0) {
    v /= p;
    ++h;
  }
  if (v != 1) return std::nullopt;
  return PrimePower{p, h};
}

std::int64_t subfield_phi(std::int64_t q) {
  const auto pp = prime_power(q);
  if (!pp) throw invalid_argument_error("phi: not a prime power");
  if (pp->h < 2) {
    throw invalid_argument_error("phi: a prime field has no proper subfield");
  }
  std::uint32_t l = 2;
  while (pp->h % l != 0) ++l;  // terminates: h >= 2 has a prime divisor
  return ipow(pp->p, pp->h / l);
}

BoundValue known_tR(std::int64_t q, std::int64_t r, std::int64_t R) {
  if (R < 4) return na("requires R >= 4");
  if (r % R != 0) return na("requires r = tR");
  const std::int64_t t = r / R;
  if (t < 2) return na("requires t >= 2");

  std::int64_t delta = 0;
  std::string note;
  if (t == 2 && q >= 4) {
    note = "delta = 0 (t = 2)";
  } else if (t == 3 && (q == 16 || q >= 23)) {
    note =
        "delta = 0 (t = 3; q = 16 read as admissible alongside q >= 23 -- "
        "interpretation-dependent)";
  } else if ((t == 4 || t == 6) && q >= 7 && q != 9) {
    delta = checked(static_cast<__int128>((2 * R) % 3) *
                        (ipow(q, static_cast<std::uint32_t>(t - 3)) + 1),
                    "known_tR delta");
    note = "delta = (2R mod 3)(q^{t-3} + 1)";
  } else if ((t == 5 || t >= 7) && q >= 7 && q != 9) {
    note = "delta = 0 (t = 5 or t >= 7)";
  } else {
    return na("no delta branch applies for this (q, t)");
  }

  const __int128 v =
      static_cast<__int128>(R) * ipow(q, static_cast<std::uint32_t>(t - 1)) +
      static_cast<__int128>((R + 2) / 3) *
          ipow(q, static_cast<std::uint32_t>(t - 2)) +
      delta;
  return {checked(v, "known_tR"), note};
}

BoundValue new_tR(std::int64_t q, std::int64_t r, std::int64_t R) {
  if (R < 4) return na("requires R >= 4");
  if (r % R != 0) return na("requires r = tR");
  const std::int64_t t = r / R;
  if (t < 2) return na("requires t >= 2");

  const bool even_q = q % 2 == 0;
  const std::int64_t m1 = ceil_log(q, R + 1) + 1;

  __int128 delta = 0;
  std::string label;
  if (t == 2 && (q == 4 || q >= 7)) {
    label = "case (i)";
  } else if (t == 2 && q == 5 && (R == 4 || R == 5)) {
    label = "case (ii)";
  } else if (!even_q && q >= 7 && t >= ceil_log(q, R) + 3) {
    label = "case (iii)";
  } else if (even_q && q >= 8 && m1 + 2 < t && t < 3 * m1 + 2) {
    for (std::int64_t j = 2; j <= t; ++j) delta += pow_or_zero(q, t - j);
    label = "case (iv)";
  } else if (even_q && q >= 8 && (t == m1 + 2 || t >= 3 * m1 + 2)) {
    for (std::int64_t j = 2; j <= m1 + 2; ++j) delta += pow_or_zero(q, t - j);
    label = "case (v)";
  } else {
    return na("no case applies for this (q, t, R)");
  }

  const __int128 v =
      static_cast<__int128>(R) * ipow(q, static_cast<std::uint32_t>(t - 1)) +
      ipow(q, static_cast<std::uint32_t>(t - 2)) + delta;
  return {checked(v, "new_tR"), label};
}

std::int64_t even_R_f(std::int64_t q, std::int64_t t) {
  if (t != 4 && t != 6) return 0;
  return checked(static_cast<__int128>(pow_or_zero(q, t - 3)) +
                     pow_or_zero(q, t - 4),
                 "even_R_f");
}

BoundValue even_R(std::int64_t q, std::int64_t r, std::int64_t R,
                  EvenRBound which) {
  if (R < 2 || R % 2 != 0) return na("requires even R >= 2");
  if ((2 * r - R) % (2 * R) != 0) return na("requires r = tR + R/2");
  const std::int64_t t = (r - R / 2) / R;
  if (t < 1) return na("requires t >= 1");

  const auto sq = exact_root(q, 2);
  if (!sq) return na("requires square q");
  const std::int64_t head = ipow(q, static_cast<std::uint32_t>(t - 1));
  const std::int64_t tail = pow_or_zero(q, t - 2);  // floor term, 0 at t = 1

  __int128 v = 0;
  std::string note;
  switch (which) {
    case EvenRBound::kProp12H1: {
      if (q < 16) return na("requires q >= 16");
      if (!prime_power(*sq)) return na("requires sqrt(q) a prime power");
      v = static_cast<__int128>(R / 2) * (3 * *sq - 1) * head +
          static_cast<__int128>(R / 2) * tail;
      note = "square q";
      break;
    }
    case EvenRBound::kProp12H2: {
      const auto q4 = exact_root(q, 4);
      if (!q4 || !prime_power(*q4)) return na("requires q a 4th power");
      v = static_cast<__int128>(R) * (*sq + *q4 + 1) * head +
          static_cast<__int128>(R / 2) * tail;
      note = "4th-power q";
      break;
    }
    case EvenRBound::kProp12H3: {
      const auto q6 = exact_root(q, 6);
      if (!q6) return na("requires q a 6th power");
      if (!is_prime(*q6) || *q6 > 73) return na("requires q = p'^6, p' <= 73 prime");
      if (t == 4 || t == 6) return na("requires t != 4, 6");
      const auto q3 = exact_root(q, 3);
      v = static_cast<__int128>(R) * (*sq + *q3 + *q6 + 1) * head +
          static_cast<__int128>(R) * tail;
      note = "6th-power q";
      break;
    }
    case EvenRBound::kThm22I: {
      const auto pp = prime_power(q);
      if (!pp || pp->h % 2 != 0 || pp->h < 4) {
        return na("requires q = p^{2 eta}, eta >= 2");
      }
      if (pp->p < 3) return na("requires p >= 3");
      const std::int64_t phi = subfield_phi(*sq);
      // (sqrt(q) - 1)/(phi - 1) is integral: phi - 1 = p^{eta/l} - 1 divides
      // p^eta - 1.
      const std::int64_t frac = (*sq - 1) / (phi - 1);
      v = static_cast<__int128>(R) * (*sq + frac) * head +
          static_cast<__int128>(R) * tail +
          static_cast<__int128>(R / 2) * even_R_f(q, t);
      note = "subfield variant";
      break;
    }
    case EvenRBound::kThm22II: {
      const auto pp = prime_power(q);
      if (!pp || pp->h % 2 != 0 || pp->h < 4) {
        return na("requires q = p^{2 eta}, eta >= 2");
      }
      if (pp->p < 7) return na("requires p >= 7");
      v = static_cast<__int128>(R) * (*sq + *sq / pp->p + 1) * head +
          static_cast<__int128>(R) * tail +
          static_cast<__int128>(R / 2) * even_R_f(q, t);
      note = "1/p variant";
      break;
    }
  }
  return {checked(v, "even_R"), note};
}

BoundValue construction_s_2R(std::int64_t q, std::int64_t r, std::int64_t R) {
  if (R < 1) return na("requires R >= 1");
  if (r != 2 * R) return na("requires r = 2R");
  const bool claimed = (q == 4 || q >= 7) || (q == 5 && R <= 5);
  if (!claimed) {
    if (q == 5) return na("q = 5, R >= 6 is an open conjecture");
    return na("no claim for this q");
  }
  return {checked(static_cast<__int128>(R) * q + 1, "construction_s_2R"),
          q == 5 ? "q = 5 claimed only for R <= 5" : "codimension-2R seed"};
}

std::optional<std::int64_t> exact_value(std::int64_t q, std::int64_t r,
                                        std::int64_t R) {
  if (q == 4 && r == 4 && R == 2) return 9;
  return std::nullopt;
}

BoundReport compare(std::int64_t q, std::int64_t r, std::int64_t R,
                    std::optional<std::int64_t> constructed) {
  if (q < 2 || r < 1 || R < 1) {
    throw invalid_argument_error("compare: need q >= 2, r >= 1, R >= 1");
  }
  BoundReport rep;
  rep.q = q;
  rep.r = r;
  rep.R = R;
  rep.constructed = constructed;

  const auto push = [&rep](std::string name, const BoundValue& bv) {
    rep.entries.push_back({std::move(name), bv.value, bv.note});
  };

  if (r % R == 0) {
    push("known_tR", known_tR(q, r, R));
    const BoundValue nb = new_tR(q, r, R);
    push("new_tR", nb);
    push("construction_s_2R", construction_s_2R(q, r, R));
    if (constructed && nb.value && *constructed == *nb.value) {
      rep.meets_new_exactly = true;
    }
  }
  if (R % 2 == 0 && (2 * r - R) % (2 * R) == 0 && (r - R / 2) / R >= 1) {
    push("prop12_h1", even_R(q, r, R, EvenRBound::kProp12H1));
    push("prop12_h2", even_R(q, r, R, EvenRBound::kProp12H2));
    push("prop12_h3", even_R(q, r, R, EvenRBound::kProp12H3));
    push("thm22_i", even_R(q, r, R, EvenRBound::kThm22I));
    push("thm22_ii", even_R(q, r, R, EvenRBound::kThm22II));
  }
  if (const auto ex = exact_value(q, r, R)) {
    rep.entries.push_back({"exact", *ex, "known exact value (equality)"});
  }

  for (const auto& e : rep.entries) {
    if (e.value && (!rep.best || *e.value < *rep.best)) rep.best = *e.value;
  }
  if (rep.best && constructed) rep.margin = *constructed - *rep.best;
  return rep;
}

}  // namespace covsat::bounds
