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

#include "covsat/codes.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>
#include <unordered_map>

namespace covsat::codes {

namespace {

/// Runs fn(w, begin, end) on `workers` slices of [0, count).  Slice bounds
/// are a pure function of (count, workers), so any data written to disjoint
/// target slices is reproducible for every worker count.
template <typename Fn>
void parallel_slices(std::uint64_t count, unsigned workers, Fn&& fn) {
  const unsigned W = workers == 0 ? 1 : workers;
  if (W == 1 || count < 2) {
    fn(0u, std::uint64_t{0}, count);
    return;
  }
  std::vector<std::thread> th;
  th.reserve(W);
  for (unsigned w = 0; w < W; ++w) {
    const std::uint64_t lo = count * w / W;
    const std::uint64_t hi = count * (w + 1) / W;
    th.emplace_back([&fn, w, lo, hi] { fn(w, lo, hi); });
  }
  for (auto& t : th) t.join();
}

/// Shared machinery for walking the syndrome space GF(q)^r of a matrix.
///
/// A syndrome is ranked as sum_i row_i * q^i (row 0 least significant) and
/// split into hi * lo_size + lo halves.  For every (coefficient c, column j)
/// pair the effect of adding c*column_j is precomputed as one table per
/// half, so a neighbor costs two loads and one add -- no division or digit
/// work in the hot loops.  Tables are pair-transposed (entry layout
/// [half_value][pair]) so the inner pair loop reads consecutively.
class SyndromeEngine {
 public:
  SyndromeEngine(const ParityCheckMatrix& H, std::uint64_t max_syndromes)
      : F_(H.field()), q_(F_.order()), r_(H.rows()), n_(H.cols()) {
    if (r_ == 0 || n_ == 0) {
      throw invalid_argument_error("syndrome walk over an empty matrix");
    }
    size_ = 1;
    for (std::uint32_t i = 0; i < r_; ++i) {
      if (size_ > max_syndromes / q_ + 1) {
        throw cap_error("syndrome space q^r = " + std::to_string(q_) + "^" +
                        std::to_string(r_) + " exceeds the cap " +
                        std::to_string(max_syndromes) +
                        " (override with --max-syndromes or "
                        "COVSAT_MAX_SYNDROMES)");
      }
      size_ *= q_;
    }
    if (size_ > max_syndromes) {
      throw cap_error("syndrome space q^r = " + std::to_string(size_) +
                      " exceeds the cap " + std::to_string(max_syndromes) +
                      " (override with --max-syndromes or "
                      "COVSAT_MAX_SYNDROMES)");
    }
    lo_digits_ = r_ / 2;
    lo_size_ = 1;
    for (std::uint32_t i = 0; i < lo_digits_; ++i) lo_size_ *= q_;
    hi_size_ = size_ / lo_size_;

    pairs_ = std::size_t{n_} * (q_ - 1);
    lo_tab_.assign(pairs_ * lo_size_, 0);
    hi_tab_.assign(pairs_ * hi_size_, 0);
    pair_col_.assign(pairs_, 0);

    std::vector<elem_t> digits(r_);
    std::vector<elem_t> cur(r_);
    for (std::uint64_t c = 1; c < q_; ++c) {
      for (std::uint32_t j = 0; j < n_; ++j) {
        const std::size_t p = (c - 1) * n_ + j;
        pair_col_[p] = j;
        for (std::uint32_t i = 0; i < r_; ++i) {
          digits[i] = F_.mul(static_cast<elem_t>(c), H.at(i, j));
        }
        // Low half: all lo values, digit counter in cur[0..lo_digits).
        std::fill(cur.begin(), cur.end(), 0);
        for (std::uint64_t lo = 0; lo < lo_size_; ++lo) {
          std::uint64_t v = 0;
          for (std::uint32_t i = lo_digits_; i-- > 0;) {
            v = v * q_ + F_.add(cur[i], digits[i]);
          }
          lo_tab_[lo * pairs_ + p] = static_cast<std::uint32_t>(v);
          for (std::uint32_t i = 0; i < lo_digits_; ++i) {
            if (++cur[i] < q_) break;
            cur[i] = 0;
          }
        }
        // High half, premultiplied by lo_size.
        std::fill(cur.begin(), cur.end(), 0);
        for (std::uint64_t hi = 0; hi < hi_size_; ++hi) {
          std::uint64_t v = 0;
          for (std::uint32_t i = r_; i-- > lo_digits_;) {
            v = v * q_ + F_.add(cur[i], digits[i]);
          }
          hi_tab_[hi * pairs_ + p] = v * lo_size_;
          for (std::uint32_t i = lo_digits_; i < r_; ++i) {
            if (++cur[i] < q_) break;
            cur[i] = 0;
          }
        }
      }
    }
  }

  [[nodiscard]] std::uint64_t size() const { return size_; }
  [[nodiscard]] std::uint64_t lo_size() const { return lo_size_; }
  [[nodiscard]] std::uint64_t hi_size() const { return hi_size_; }
  [[nodiscard]] std::size_t pairs() const { return pairs_; }
  [[nodiscard]] std::uint32_t pair_column(std::size_t p) const {
    return pair_col_[p];
  }
  /// Pair index of (coefficient c, column j).
  [[nodiscard]] std::size_t pair_index(elem_t c, std::uint32_t j) const {
    return std::size_t{c - 1} * n_ + j;
  }
  [[nodiscard]] const Field& field() const { return F_; }
  [[nodiscard]] std::uint32_t n() const { return n_; }

  /// Neighbor s + delta(pair p) given the split parts of s.
  [[nodiscard]] std::uint64_t step(std::uint64_t hi, std::uint64_t lo,
                                   std::size_t p) const {
    return hi_tab_[hi * pairs_ + p] + lo_tab_[lo * pairs_ + p];
  }

 private:
  const Field& F_;
  std::uint64_t q_;
  std::uint32_t r_;
  std::uint32_t n_;
  std::uint64_t size_ = 0;
  std::uint32_t lo_digits_ = 0;
  std::uint64_t lo_size_ = 1;
  std::uint64_t hi_size_ = 1;
  std::size_t pairs_ = 0;
  std::vector<std::uint32_t> lo_tab_;
  std::vector<std::uint64_t> hi_tab_;
  std::vector<std::uint32_t> pair_col_;
};

constexpr std::uint8_t kUnset = 0xFF;

}  // namespace

// ---------------------------------------------------------------------------
// ParityCheckMatrix
// ---------------------------------------------------------------------------

ParityCheckMatrix::ParityCheckMatrix(Field F, std::uint32_t rows)
    : F_(std::move(F)), r_(rows) {
  if (!F_.valid()) throw invalid_argument_error("matrix over an empty field");
  if (rows == 0) throw invalid_argument_error("matrix needs at least one row");
}

void ParityCheckMatrix::append_column(const std::vector<elem_t>& col) {
  if (col.size() != r_) {
    throw invalid_argument_error("column has the wrong number of rows");
  }
  for (elem_t c : col) {
    if (c >= F_.order()) throw invalid_argument_error("entry out of range");
  }
  data_.insert(data_.end(), col.begin(), col.end());
}

std::vector<elem_t> ParityCheckMatrix::column(std::uint32_t col) const {
  return {data_.begin() + std::size_t{col} * r_,
          data_.begin() + std::size_t{col + 1} * r_};
}

std::uint32_t ParityCheckMatrix::rank() const {
  const std::uint32_t n = cols();
  // Row-major working copy.
  std::vector<elem_t> m(std::size_t{r_} * n);
  for (std::uint32_t i = 0; i < r_; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) m[std::size_t{i} * n + j] = at(i, j);
  }
  std::uint32_t rank = 0;
  for (std::uint32_t col = 0; col < n && rank < r_; ++col) {
    std::uint32_t pivot = rank;
    while (pivot < r_ && m[std::size_t{pivot} * n + col] == 0) ++pivot;
    if (pivot == r_) continue;
    if (pivot != rank) {
      for (std::uint32_t j = col; j < n; ++j) {
        std::swap(m[std::size_t{pivot} * n + j], m[std::size_t{rank} * n + j]);
      }
    }
    const elem_t inv = F_.inv(m[std::size_t{rank} * n + col]);
    for (std::uint32_t j = col; j < n; ++j) {
      m[std::size_t{rank} * n + j] = F_.mul(m[std::size_t{rank} * n + j], inv);
    }
    for (std::uint32_t i = rank + 1; i < r_; ++i) {
      const elem_t f = m[std::size_t{i} * n + col];
      if (f == 0) continue;
      for (std::uint32_t j = col; j < n; ++j) {
        m[std::size_t{i} * n + j] = F_.sub(
            m[std::size_t{i} * n + j], F_.mul(f, m[std::size_t{rank} * n + j]));
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<std::uint32_t> ParityCheckMatrix::zero_columns() const {
  std::vector<std::uint32_t> out;
  const std::uint32_t n = cols();
  for (std::uint32_t j = 0; j < n; ++j) {
    bool zero = true;
    for (std::uint32_t i = 0; i < r_ && zero; ++i) zero = at(i, j) == 0;
    if (zero) out.push_back(j);
  }
  return out;
}

ParityCheckMatrix ParityCheckMatrix::without_column(std::uint32_t j) const {
  ParityCheckMatrix out(F_, r_);
  const std::uint32_t n = cols();
  for (std::uint32_t k = 0; k < n; ++k) {
    if (k != j) out.append_column(column(k));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Covering radius BFS
// ---------------------------------------------------------------------------

RadiusResult covering_radius(const ParityCheckMatrix& H,
                             std::uint64_t max_syndromes, unsigned workers) {
  const SyndromeEngine eng(H, max_syndromes);
  const std::uint64_t size = eng.size();
  const std::uint64_t lo_size = eng.lo_size();
  const std::size_t pairs = eng.pairs();

  RadiusResult res;
  res.syndromes = size;
  res.dist.assign(size, kUnset);
  res.dist[0] = 0;
  std::uint8_t* dist = res.dist.data();

  std::uint64_t covered = 1;
  std::uint32_t w = 0;
  while (covered < size) {
    // Expand layer w.  Writes race only on identical values; reads of the
    // current layer are stable because only w+1 is ever written.
    parallel_slices(eng.hi_size(), workers, [&](unsigned, std::uint64_t hb,
                                                std::uint64_t he) {
      const std::uint8_t next = static_cast<std::uint8_t>(w + 1);
      for (std::uint64_t hi = hb; hi < he; ++hi) {
        std::uint64_t s = hi * lo_size;
        for (std::uint64_t lo = 0; lo < lo_size; ++lo, ++s) {
          if (dist[s] != w) continue;
          for (std::size_t p = 0; p < pairs; ++p) {
            const std::uint64_t ns = eng.step(hi, lo, p);
            std::atomic_ref<std::uint8_t> cell(dist[ns]);
            if (cell.load(std::memory_order_relaxed) == kUnset) {
              cell.store(next, std::memory_order_relaxed);
            }
          }
        }
      }
    });
    // Count the new layer (deterministic; duplicate writes were identical).
    std::atomic<std::uint64_t> newly{0};
    parallel_slices(size, workers,
                    [&](unsigned, std::uint64_t b, std::uint64_t e) {
                      std::uint64_t local = 0;
                      for (std::uint64_t s = b; s < e; ++s) {
                        if (dist[s] == w + 1) ++local;
                      }
                      newly.fetch_add(local, std::memory_order_relaxed);
                    });
    if (newly.load() == 0) return res;  // radius infinite: rank below r
    covered += newly.load();
    ++w;
    if (w >= 250) throw error("internal: BFS failed to terminate");
  }
  res.radius = w;
  return res;
}

// ---------------------------------------------------------------------------
// Capsule spectrum DP
// ---------------------------------------------------------------------------

std::optional<std::uint32_t> CoverageProfile::radius() const {
  std::uint32_t best = 0;
  for (const std::uint16_t m : masks) {
    if (m == 0) return std::nullopt;
    best = std::max(best, static_cast<std::uint32_t>(std::countr_zero(m)));
  }
  return best;
}

std::optional<std::uint32_t> CoverageProfile::capsule_floor(
    std::uint32_t R) const {
  if (R > w_cap) throw invalid_argument_error("capsule_floor: R above w_cap");
  const std::uint32_t keep = (R == 15) ? 0xFFFFu : ((1u << (R + 1)) - 1u);
  std::uint32_t floor = R;
  for (const std::uint16_t m : masks) {
    const std::uint32_t usable = m & keep;
    if (usable == 0) return std::nullopt;
    const auto top = static_cast<std::uint32_t>(
        31 - std::countl_zero(usable));
    floor = std::min(floor, top);
    if (floor == 0) break;
  }
  return floor;
}

bool CoverageProfile::surface_covering(std::uint32_t R) const {
  const auto rad = radius();
  const auto fl = capsule_floor(R);
  return rad.has_value() && *rad == R && fl.has_value() && *fl == R;
}

CoverageProfile capsule_spectrum(const ParityCheckMatrix& H,
                                 std::uint32_t w_cap,
                                 std::uint64_t max_syndromes,
                                 unsigned workers) {
  if (w_cap < 1 || w_cap > 15) {
    throw invalid_argument_error("capsule w_cap must be in [1, 15]");
  }
  const SyndromeEngine eng(H, max_syndromes);
  const std::uint64_t size = eng.size();
  const std::uint64_t lo_size = eng.lo_size();
  const Field& F = eng.field();
  const std::uint64_t q = F.order();

  CoverageProfile prof;
  prof.w_cap = w_cap;
  prof.syndromes = size;
  prof.masks.assign(size, 0);
  prof.masks[0] = 1;  // the empty combination reaches the zero syndrome
  std::vector<std::uint16_t> prev(size);

  const std::uint16_t keep =
      (w_cap == 15) ? 0xFFFFu : static_cast<std::uint16_t>((1u << (w_cap + 1)) - 1u);
  std::uint16_t* cur = prof.masks.data();
  std::uint16_t* old = prev.data();

  // One column at a time: cur[s] |= (old[s - c*h_j] << 1) over all nonzero c,
  // where old is the profile before this column -- so each column
  // contributes at most once to any combination, which is exactly the
  // distinct-columns semantics.  Gathers are target-partitioned: no write
  // races and bit-identical results for every worker count.
  for (std::uint32_t j = 0; j < eng.n(); ++j) {
    std::copy(cur, cur + size, old);
    // Precompute this column's gather pairs: pred = s + (-c)*h_j.
    std::vector<std::size_t> gp;
    gp.reserve(q - 1);
    for (elem_t c = 1; c < q; ++c) gp.push_back(eng.pair_index(F.neg(c), j));
    parallel_slices(
        eng.hi_size(), workers,
        [&](unsigned, std::uint64_t hb, std::uint64_t he) {
          for (std::uint64_t hi = hb; hi < he; ++hi) {
            std::uint64_t s = hi * lo_size;
            for (std::uint64_t lo = 0; lo < lo_size; ++lo, ++s) {
              std::uint16_t acc = 0;
              for (const std::size_t p : gp) acc |= old[eng.step(hi, lo, p)];
              cur[s] |= static_cast<std::uint16_t>(acc << 1) & keep;
            }
          }
        });
  }
  return prof;
}

// ---------------------------------------------------------------------------
// Minimum distance small-weight scan
// ---------------------------------------------------------------------------

MinDistanceResult min_distance_small(const ParityCheckMatrix& H,
                                     std::uint32_t d_cap) {
  if (d_cap < 1 || d_cap > 4) {
    throw invalid_argument_error("min_distance_small scans weights 1..4");
  }
  const Field& F = H.field();
  const std::uint32_t n = H.cols();
  const std::uint32_t r = H.rows();
  const std::uint64_t q = F.order();
  MinDistanceResult res;
  res.zero_columns = H.zero_columns();
  if (!res.zero_columns.empty()) {
    res.d = 1;
    res.at_least = 1;
    return res;
  }
  res.at_least = 2;
  if (d_cap < 2) return res;

  // Weight 2: projectively equal columns.  Key = rank of the normalized
  // column as a point of PG(r-1, q).
  std::unordered_map<std::uint64_t, std::uint32_t> cls;
  cls.reserve(n * 2);
  for (std::uint32_t j = 0; j < n; ++j) {
    const std::uint64_t key = pg::point_rank(F, pg::normalize(F, H.column(j)));
    const auto [it, fresh] = cls.emplace(key, j);
    if (!fresh) {
      res.proportional_pair = {it->second, j};
      if (!res.d) res.d = 2;
    }
  }
  if (res.d) return res;
  res.at_least = 3;
  if (d_cap < 3) return res;

  // Weight 3: h_i + c h_j proportional to a third column.
  bool found3 = false;
  std::vector<elem_t> v(r);
  for (std::uint32_t i = 0; i < n && !found3; ++i) {
    for (std::uint32_t j = i + 1; j < n && !found3; ++j) {
      for (elem_t c = 1; c < q && !found3; ++c) {
        bool zero = true;
        for (std::uint32_t t = 0; t < r; ++t) {
          v[t] = F.add(H.at(t, i), F.mul(c, H.at(t, j)));
          zero = zero && v[t] == 0;
        }
        if (zero) continue;  // impossible once d > 2
        const auto it = cls.find(pg::point_rank(F, pg::normalize(F, v)));
        if (it != cls.end() && it->second != i && it->second != j) found3 = true;
      }
    }
  }
  if (found3) {
    res.d = 3;
    return res;
  }
  res.at_least = 4;
  if (d_cap < 4) return res;

  // Weight 4: two pairwise combinations (necessarily of disjoint pairs once
  // d > 3) hitting the same projective class.
  const std::uint64_t entries = std::uint64_t{n} * n / 2 * (q - 1);
  if (entries > 30'000'000) return res;  // keep the bound; scan too large
  std::unordered_map<std::uint64_t, std::pair<std::uint32_t, std::uint32_t>>
      sums;
  sums.reserve(entries + 1);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      for (elem_t c = 1; c < q; ++c) {
        for (std::uint32_t t = 0; t < r; ++t) {
          v[t] = F.add(H.at(t, i), F.mul(c, H.at(t, j)));
        }
        const std::uint64_t key = pg::point_rank(F, pg::normalize(F, v));
        const auto [it, fresh] = sums.emplace(key, std::make_pair(i, j));
        if (!fresh && it->second.first != i && it->second.second != j &&
            it->second.second != i && it->second.first != j) {
          res.d = 4;
          return res;
        }
      }
    }
  }
  res.at_least = 5;
  return res;
}

// ---------------------------------------------------------------------------
// Weight distribution via the dual transform
// ---------------------------------------------------------------------------

std::vector<std::int64_t> weight_distribution_via_dual(
    const ParityCheckMatrix& H, std::uint64_t cap) {
  const Field& F = H.field();
  const std::uint32_t r = H.rows();
  const std::uint32_t n = H.cols();
  const std::uint64_t q = F.order();
  if (n > 40) {
    throw cap_error("weight distribution limited to n <= 40 columns");
  }
  std::uint64_t words = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    if (words > cap / q) throw cap_error("dual enumeration exceeds the cap");
    words *= q;
  }
  if (H.rank() != r) {
    throw invalid_argument_error(
        "weight distribution requires a full-rank parity-check matrix");
  }

  // Dual (row-space) weight counts by depth-first enumeration of u * H.
  std::vector<std::int64_t> B(n + 1, 0);
  std::vector<elem_t> acc(std::size_t{r + 1} * n, 0);
  const auto count_leaf = [&](const elem_t* row) {
    std::uint32_t wgt = 0;
    for (std::uint32_t j = 0; j < n; ++j) wgt += row[j] != 0;
    ++B[wgt];
  };
  // Iterative digit counter over u with incremental partial sums.
  std::vector<elem_t> u(r, 0);
  std::uint32_t level = 0;
  // acc row i holds sum_{t < i} u_t * H_t ; row r is the full word.
  while (true) {
    if (level == r) {
      count_leaf(&acc[std::size_t{r} * n]);
      // Advance the counter.
      while (level > 0) {
        --level;
        if (++u[level] < q) break;
        u[level] = 0;
      }
      if (level == 0 && u[0] == 0) break;
      // Rows 0..level are still valid; rebuild from the changed digit.
    }
    // Build row level+1 from row level.
    const elem_t c = u[level];
    const elem_t* src = &acc[std::size_t{level} * n];
    elem_t* dst = &acc[(std::size_t{level} + 1) * n];
    if (c == 0) {
      std::copy(src, src + n, dst);
    } else {
      for (std::uint32_t j = 0; j < n; ++j) {
        dst[j] = F.add(src[j], F.mul(c, H.at(level, j)));
      }
    }
    ++level;
  }

  // MacWilliams transform with exact integer arithmetic.
  std::vector<std::vector<__int128>> binom(n + 1,
                                           std::vector<__int128>(n + 1, 0));
  for (std::uint32_t i = 0; i <= n; ++i) {
    binom[i][0] = 1;
    for (std::uint32_t j = 1; j <= i; ++j) {
      binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
    }
  }
  std::vector<std::int64_t> A(n + 1, 0);
  for (std::uint32_t k = 0; k <= n; ++k) {
    __int128 total = 0;
    for (std::uint32_t x = 0; x <= n; ++x) {
      if (B[x] == 0) continue;
      // Krawtchouk K_k(x) = sum_j (-1)^j (q-1)^{k-j} C(x, j) C(n-x, k-j).
      __int128 kraw = 0;
      for (std::uint32_t jj = 0; jj <= k; ++jj) {
        if (jj > x || k - jj > n - x) continue;
        __int128 term = binom[x][jj] * binom[n - x][k - jj];
        for (std::uint32_t t = 0; t < k - jj; ++t) term *= (q - 1);
        kraw += (jj % 2 == 0) ? term : -term;
      }
      total += static_cast<__int128>(B[x]) * kraw;
    }
    const __int128 div = total / static_cast<__int128>(words);
    if (div * static_cast<__int128>(words) != total) {
      throw error("internal: MacWilliams transform not integral");
    }
    if (div < 0 || div > INT64_MAX) {
      throw error("internal: weight distribution overflows 64 bits");
    }
    A[k] = static_cast<std::int64_t>(div);
  }
  return A;
}

// ---------------------------------------------------------------------------
// Local optimality
// ---------------------------------------------------------------------------

namespace {

LocalOptResult local_opt_per_column(const ParityCheckMatrix& H,
                                    std::uint32_t R,
                                    std::uint64_t max_syndromes,
                                    unsigned workers) {
  LocalOptResult out;
  const std::uint32_t n = H.cols();
  for (std::uint32_t j = 0; j < n; ++j) {
    const RadiusResult rr =
        covering_radius(H.without_column(j), max_syndromes, workers);
    if (rr.radius.has_value() && *rr.radius <= R) out.removable.push_back(j);
  }
  out.locally_optimal = out.removable.empty();
  return out;
}

LocalOptResult local_opt_mask_bfs(const ParityCheckMatrix& H,
                                  const RadiusResult& base,
                                  std::uint64_t max_syndromes,
                                  unsigned workers) {
  const std::uint32_t n = H.cols();
  const std::uint32_t R = *base.radius;
  const SyndromeEngine eng(H, max_syndromes);
  const std::uint64_t size = eng.size();
  const std::uint64_t lo_size = eng.lo_size();
  const std::size_t pairs = eng.pairs();
  const std::uint8_t* dist = base.dist.data();
  const std::uint64_t all =
      (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);

  // nr[s] = set of columns j such that s has no representation of weight
  // <= w avoiding column j.  Layer w uses layer w-1 through a snapshot.
  std::vector<std::uint64_t> nr(size, all);
  std::vector<std::uint64_t> snap(size);
  nr[0] = 0;

  std::vector<std::uint64_t> colbit(pairs);
  for (std::size_t p = 0; p < pairs; ++p) {
    colbit[p] = std::uint64_t{1} << eng.pair_column(p);
  }

  for (std::uint32_t w = 1; w <= R; ++w) {
    snap.swap(nr);
    const std::uint64_t* prev = snap.data();
    std::uint64_t* cur = nr.data();
    parallel_slices(
        eng.hi_size(), workers,
        [&](unsigned, std::uint64_t hb, std::uint64_t he) {
          for (std::uint64_t hi = hb; hi < he; ++hi) {
            std::uint64_t s = hi * lo_size;
            for (std::uint64_t lo = 0; lo < lo_size; ++lo, ++s) {
              // Syndromes deeper than w are unreachable with every column
              // still present, so their mask stays "all columns".
              if (dist[s] > w) {
                cur[s] = prev[s];
                continue;
              }
              std::uint64_t acc = prev[s];
              if (s == 0 || acc == 0) {
                cur[s] = s == 0 ? 0 : acc;
                continue;
              }
              // Pairs are laid out coefficient-major, so the first n of
              // them traverse n distinct columns: the accumulator usually
              // empties within a handful of steps.
              for (std::size_t p = 0; p < pairs; ++p) {
                acc &= prev[eng.step(hi, lo, p)] | colbit[p];
                if (acc == 0) break;
              }
              cur[s] = acc;
            }
          }
        });
  }

  // Column j is essential iff some syndrome still needs it at depth R.
  std::vector<std::uint64_t> partials(workers == 0 ? 1 : workers, 0);
  parallel_slices(size, workers == 0 ? 1 : workers,
                  [&](unsigned w, std::uint64_t b, std::uint64_t e) {
                    std::uint64_t acc = 0;
                    for (std::uint64_t s = b; s < e; ++s) acc |= nr[s];
                    partials[w] |= acc;
                  });
  std::uint64_t essential = 0;
  for (const std::uint64_t p : partials) essential |= p;

  LocalOptResult out;
  for (std::uint32_t j = 0; j < n; ++j) {
    if (!(essential & (std::uint64_t{1} << j))) out.removable.push_back(j);
  }
  out.locally_optimal = out.removable.empty();
  return out;
}

}  // namespace

LocalOptResult local_optimality(const ParityCheckMatrix& H,
                                const RadiusResult& base,
                                std::uint64_t max_syndromes, unsigned workers,
                                LocalOptStrategy strategy) {
  if (!base.radius.has_value()) {
    throw invalid_argument_error(
        "local optimality needs a finite covering radius");
  }
  if (base.dist.size() != 0 && base.dist[0] != 0) {
    throw invalid_argument_error("base distances look corrupted");
  }
  switch (strategy) {
    case LocalOptStrategy::kPerColumn:
      return local_opt_per_column(H, *base.radius, max_syndromes, workers);
    case LocalOptStrategy::kMaskBfs:
      if (H.cols() > 64) {
        throw invalid_argument_error("mask strategy requires n <= 64");
      }
      return local_opt_mask_bfs(H, base, max_syndromes, workers);
    case LocalOptStrategy::kAuto:
      break;
  }
  if (H.cols() <= 64) return local_opt_mask_bfs(H, base, max_syndromes, workers);
  return local_opt_per_column(H, *base.radius, max_syndromes, workers);
}

// ---------------------------------------------------------------------------
// Bridge
// ---------------------------------------------------------------------------

ParityCheckMatrix from_point_set(const pg::PointSet& S) {
  ParityCheckMatrix H(S.field(), S.dim() + 1);
  for (std::size_t i = 0; i < S.size(); ++i) H.append_column(S[i]);
  return H;
}

pg::PointSet to_point_set(const ParityCheckMatrix& H) {
  pg::PointSet S(H.field(), H.rows() - 1);
  for (std::uint32_t j = 0; j < H.cols(); ++j) {
    const std::vector<elem_t> col = H.column(j);
    bool zero = true;
    for (elem_t c : col) zero = zero && c == 0;
    if (zero) {
      throw invalid_argument_error(
          "matrix with a zero column has no point-set image");
    }
    S.append(pg::normalize(H.field(), col));  // throws on projective repeats
  }
  return S;
}

}  // namespace covsat::codes
