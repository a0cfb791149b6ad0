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

#include "covsat/geometry.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace covsat::pg {

std::uint64_t point_count(std::uint32_t N, std::uint64_t q) {
  std::uint64_t total = 0;
  std::uint64_t power = 1;  // q^j
  for (std::uint32_t j = 0; j <= N; ++j) {
    if (total > UINT64_MAX - power) {
      throw cap_error("projective space too large to count in 64 bits");
    }
    total += power;
    if (j < N && power > UINT64_MAX / q) {
      throw cap_error("projective space too large to count in 64 bits");
    }
    if (j < N) power *= q;
  }
  return total;
}

Point normalize(const Field& F, const std::vector<elem_t>& v) {
  std::size_t lead = v.size();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) {
      lead = i;
      break;
    }
  }
  if (lead == v.size()) {
    throw invalid_argument_error("cannot normalize the zero vector");
  }
  Point out(v);
  if (out[lead] != 1) {
    const elem_t s = F.inv(out[lead]);
    for (std::size_t i = lead; i < out.size(); ++i) out[i] = F.mul(out[i], s);
  }
  return out;
}

std::uint64_t point_rank(const Field& F, const Point& p) {
  const std::uint64_t q = F.order();
  const auto N = static_cast<std::uint32_t>(p.size() - 1);
  std::size_t lead = p.size();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0) {
      lead = i;
      break;
    }
  }
  if (lead == p.size() || p[lead] != 1) {
    throw invalid_argument_error("point_rank requires a normalized point");
  }
  // Points with more leading zeros rank first; within a fixed lead position
  // the tail digits are a plain base-q number.
  const std::uint64_t before =
      (lead == N) ? 0 : point_count(static_cast<std::uint32_t>(N - lead - 1), q);
  std::uint64_t value = 0;
  for (std::size_t i = lead + 1; i <= N; ++i) value = value * q + p[i];
  return before + value;
}

Point point_unrank(const Field& F, std::uint32_t N, std::uint64_t rank) {
  const std::uint64_t q = F.order();
  // Find the lead position L: its block spans ranks [theta(N-L-1), theta(N-L)).
  std::uint32_t lead = N;
  std::uint64_t before = 0;
  std::uint64_t block = 1;  // q^{N-L}
  while (true) {
    if (rank < before + block) break;
    if (lead == 0) throw invalid_argument_error("point rank out of range");
    before += block;
    block *= q;
    --lead;
  }
  Point p(N + 1, 0);
  p[lead] = 1;
  std::uint64_t value = rank - before;
  for (std::uint32_t i = N; i > lead; --i) {
    p[i] = static_cast<elem_t>(value % q);
    value /= q;
  }
  return p;
}

// ---------------------------------------------------------------------------
// PointSet
// ---------------------------------------------------------------------------

PointSet::PointSet(Field F, std::uint32_t N) : F_(std::move(F)), N_(N) {
  if (!F_.valid()) throw invalid_argument_error("PointSet over an empty field");
}

void PointSet::append(Point p) {
  if (p.size() != N_ + 1) {
    throw invalid_argument_error("point has the wrong number of coordinates");
  }
  for (elem_t c : p) {
    if (c >= F_.order()) throw invalid_argument_error("coordinate out of range");
  }
  const std::uint64_t r = point_rank(F_, p);  // also validates normalization
  const auto it = std::lower_bound(ranks_.begin(), ranks_.end(), r);
  if (it != ranks_.end() && *it == r) {
    throw invalid_argument_error("duplicate point in PointSet");
  }
  ranks_.insert(it, r);
  pts_.push_back(std::move(p));
}

bool PointSet::contains(const Point& p) const {
  const std::uint64_t r = point_rank(F_, p);
  return std::binary_search(ranks_.begin(), ranks_.end(), r);
}

PointSet PointSet::without(std::size_t i) const {
  PointSet out(F_, N_);
  for (std::size_t j = 0; j < pts_.size(); ++j) {
    if (j != i) out.append(pts_[j]);
  }
  return out;
}

PointSet enumerate_points(const Field& F, std::uint32_t N, std::uint64_t cap) {
  const std::uint64_t theta = point_count(N, F.order());
  if (theta > cap) {
    throw cap_error("point space has " + std::to_string(theta) +
                    " points, above the cap " + std::to_string(cap));
  }
  PointSet out(F, N);
  for (std::uint64_t r = 0; r < theta; ++r) out.append(point_unrank(F, N, r));
  return out;
}

// ---------------------------------------------------------------------------
// Span-closure BFS
// ---------------------------------------------------------------------------

namespace {

/// Shared state for one layered closure run over a point space.
class Closure {
 public:
  Closure(const PointSet& S, std::uint64_t point_cap, unsigned workers)
      : S_(S),
        F_(S.field()),
        N_(S.dim()),
        q_(F_.order()),
        theta_(point_count(N_, q_)),
        workers_(workers == 0 ? 1 : workers) {
    if (theta_ > point_cap) {
      throw cap_error("saturation closure over " + std::to_string(theta_) +
                      " points exceeds the cap " + std::to_string(point_cap));
    }
    if (S_.size() == 0) throw invalid_argument_error("empty point set");
    bits_.assign((theta_ + 63) / 64, 0);
    // Scaled generators c*s for every s in S (skipping one designated point
    // is handled by the caller via the mask), all nonzero c.
    scaled_.reserve(S_.size() * (q_ - 1));
    for (std::size_t i = 0; i < S_.size(); ++i) {
      for (elem_t c = 1; c < q_; ++c) {
        std::vector<elem_t> v(N_ + 1);
        for (std::uint32_t j = 0; j <= N_; ++j) v[j] = F_.mul(c, S_[i][j]);
        scaled_.push_back(std::move(v));
        scaled_owner_.push_back(i);
      }
    }
  }

  /// Runs layers until the space is covered, nothing new appears, or
  /// max_layers expansions have been done.  skip, when set, removes one set
  /// point (by index) from both the seeds and the generators.
  SaturationResult run(std::uint64_t max_layers,
                       std::optional<std::size_t> skip = std::nullopt) {
    std::fill(bits_.begin(), bits_.end(), 0);
    std::vector<std::uint64_t> frontier;
    for (std::size_t i = 0; i < S_.size(); ++i) {
      if (skip && *skip == i) continue;
      const std::uint64_t r = point_rank(F_, S_[i]);
      if (!test_and_set(r)) frontier.push_back(r);
    }
    SaturationResult res;
    std::uint64_t covered = frontier.size();
    res.covered.push_back(covered);
    if (covered == theta_) {
      res.level = 0;
      return res;
    }
    for (std::uint64_t layer = 1; layer <= max_layers; ++layer) {
      frontier = expand(frontier, skip);
      covered += frontier.size();
      res.covered.push_back(covered);
      if (covered == theta_) {
        res.level = static_cast<std::uint32_t>(layer);
        return res;
      }
      if (frontier.empty()) return res;  // stalled: set does not span
    }
    return res;
  }

  /// Ranks not yet covered, ascending.
  [[nodiscard]] std::vector<std::uint64_t> uncovered() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 0; r < theta_; ++r) {
      if (!(bits_[r >> 6] & (std::uint64_t{1} << (r & 63)))) out.push_back(r);
    }
    return out;
  }

 private:
  bool test_and_set(std::uint64_t r) {
    std::atomic_ref<std::uint64_t> word(bits_[r >> 6]);
    const std::uint64_t mask = std::uint64_t{1} << (r & 63);
    return (word.fetch_or(mask, std::memory_order_relaxed) & mask) != 0;
  }

  /// One layer: all normalize(P + c*s) for P in the frontier.
  std::vector<std::uint64_t> expand(const std::vector<std::uint64_t>& frontier,
                                    std::optional<std::size_t> skip) {
    const unsigned W =
        static_cast<unsigned>(std::min<std::uint64_t>(workers_, frontier.size() ? frontier.size() : 1));
    std::vector<std::vector<std::uint64_t>> found(W);
    auto work = [&](unsigned w) {
      std::vector<elem_t> p(N_ + 1);
      std::vector<elem_t> t(N_ + 1);
      const std::size_t lo = frontier.size() * w / W;
      const std::size_t hi = frontier.size() * (w + 1) / W;
      for (std::size_t fi = lo; fi < hi; ++fi) {
        unrank_into(frontier[fi], p);
        for (std::size_t g = 0; g < scaled_.size(); ++g) {
          if (skip && scaled_owner_[g] == *skip) continue;
          const std::vector<elem_t>& sv = scaled_[g];
          std::size_t lead = N_ + 1;
          for (std::uint32_t j = 0; j <= N_; ++j) {
            t[j] = F_.add(p[j], sv[j]);
            if (lead > N_ && t[j] != 0) lead = j;
          }
          if (lead > N_) continue;  // landed on the zero vector
          std::uint64_t value = 0;
          if (t[lead] == 1) {
            for (std::uint32_t j = static_cast<std::uint32_t>(lead) + 1; j <= N_; ++j) {
              value = value * q_ + t[j];
            }
          } else {
            const elem_t s = F_.inv(t[lead]);
            for (std::uint32_t j = static_cast<std::uint32_t>(lead) + 1; j <= N_; ++j) {
              value = value * q_ + F_.mul(t[j], s);
            }
          }
          const std::uint64_t before =
              (lead == N_) ? 0
                           : theta_partial(static_cast<std::uint32_t>(N_ - lead - 1));
          const std::uint64_t r = before + value;
          if (!test_and_set(r)) found[w].push_back(r);
        }
      }
    };
    if (W == 1) {
      work(0);
    } else {
      std::vector<std::thread> th;
      th.reserve(W);
      for (unsigned w = 0; w < W; ++w) th.emplace_back(work, w);
      for (auto& t : th) t.join();
    }
    std::size_t total = 0;
    for (const auto& f : found) total += f.size();
    std::vector<std::uint64_t> out;
    out.reserve(total);
    for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
    return out;
  }

  void unrank_into(std::uint64_t rank, std::vector<elem_t>& p) const {
    std::uint32_t lead = N_;
    std::uint64_t before = 0;
    std::uint64_t block = 1;
    while (rank >= before + block) {
      before += block;
      block *= q_;
      --lead;
    }
    std::fill(p.begin(), p.end(), 0);
    p[lead] = 1;
    std::uint64_t value = rank - before;
    for (std::uint32_t i = N_; i > lead; --i) {
      p[i] = static_cast<elem_t>(value % q_);
      value /= q_;
    }
  }

  [[nodiscard]] std::uint64_t theta_partial(std::uint32_t dim) const {
    // theta(dim, q) without overflow concerns (dim <= N, already checked).
    std::uint64_t total = 0;
    std::uint64_t power = 1;
    for (std::uint32_t j = 0; j <= dim; ++j) {
      total += power;
      power *= q_;
    }
    return total;
  }

  const PointSet& S_;
  const Field& F_;
  const std::uint32_t N_;
  const std::uint64_t q_;
  const std::uint64_t theta_;
  const unsigned workers_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<elem_t>> scaled_;
  std::vector<std::size_t> scaled_owner_;
};

}  // namespace

SaturationResult saturation_level(const PointSet& S, std::uint64_t point_cap,
                                  unsigned workers) {
  Closure c(S, point_cap, workers);
  // theta layers is a safe upper bound on any possible level.
  return c.run(point_count(S.dim(), S.field().order()));
}

bool is_minimal_saturating(const PointSet& S, std::uint32_t rho,
                           std::uint64_t point_cap, unsigned workers) {
  Closure c(S, point_cap, workers);
  const SaturationResult full = c.run(rho);
  if (!full.level.has_value() || *full.level > rho) return false;
  for (std::size_t i = 0; i < S.size(); ++i) {
    const SaturationResult r = c.run(rho, i);
    if (r.level.has_value() && *r.level <= rho) return false;  // still saturating
  }
  return true;
}

std::vector<std::vector<Point>> essential_points(const PointSet& S,
                                                 std::uint32_t rho,
                                                 std::uint64_t point_cap,
                                                 unsigned workers) {
  Closure c(S, point_cap, workers);
  std::vector<std::vector<Point>> out(S.size());
  for (std::size_t i = 0; i < S.size(); ++i) {
    (void)c.run(rho, i);
    for (std::uint64_t r : c.uncovered()) {
      out[i].push_back(point_unrank(S.field(), S.dim(), r));
    }
  }
  return out;
}

std::uint64_t min_line_intersections(const PointSet& S) {
  if (S.dim() != 2) {
    throw invalid_argument_error("line intersections are defined on a plane");
  }
  const Field& F = S.field();
  const std::uint64_t lines = point_count(2, F.order());
  std::uint64_t best = UINT64_MAX;
  for (std::uint64_t lr = 0; lr < lines; ++lr) {
    const Point l = point_unrank(F, 2, lr);
    std::uint64_t hits = 0;
    for (std::size_t i = 0; i < S.size(); ++i) {
      elem_t acc = 0;
      for (std::uint32_t j = 0; j <= 2; ++j) {
        acc = F.add(acc, F.mul(l[j], S[i][j]));
      }
      if (acc == 0) ++hits;
    }
    best = std::min(best, hits);
    if (best == 0) break;
  }
  return best;
}

bool is_double_blocking(const PointSet& S) {
  return min_line_intersections(S) >= 2;
}

PointSet baer_embed(const PointSet& S, const Field& big) {
  const std::vector<elem_t> f = gf::subfield_embed(S.field(), big);
  PointSet out(big, S.dim());
  for (std::size_t i = 0; i < S.size(); ++i) {
    Point p(S.dim() + 1);
    for (std::uint32_t j = 0; j <= S.dim(); ++j) p[j] = f[S[i][j]];
    out.append(std::move(p));
  }
  return out;
}

}  // namespace covsat::pg
