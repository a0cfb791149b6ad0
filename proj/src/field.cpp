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

#include "covsat/field.hpp"

#include <algorithm>
#include <sstream>

namespace covsat::gf {

namespace {

/// Largest order getting dense q x q add/mul tables (uint16 entries).
constexpr std::uint64_t kDenseTableMaxOrder = 4096;

[[nodiscard]] std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Decomposes q as p^k with p prime; returns false if q is not a prime power.
[[nodiscard]] bool prime_power_decompose(std::uint64_t q, std::uint32_t& p,
                                         std::uint32_t& k) {
  if (q < 2) return false;
  const std::vector<std::uint64_t> f = prime_factors(q);
  if (f.size() != 1) return false;
  p = static_cast<std::uint32_t>(f[0]);
  k = 0;
  while (q > 1) {
    if (q % f[0] != 0) return false;
    q /= f[0];
    ++k;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Field::Data and construction helpers
// ---------------------------------------------------------------------------

struct Field::Data {
  std::uint32_t p = 0;        // characteristic
  std::uint32_t k_abs = 0;    // absolute degree over GF(p)
  std::uint64_t q = 0;        // field order
  std::uint64_t q1 = 0;       // q - 1
  Field base;                 // immediate base context (invalid unless tower)
  std::uint64_t q0 = 0;       // order of the immediate base (p unless tower)
  std::uint32_t m_rel = 0;    // degree over the immediate base
  std::vector<elem_t> modulus;  // c_0..c_m over the immediate base, monic
  elem_t primitive = 0;
  elem_t neg_one = 0;

  std::vector<elem_t> exp;       // exp[i] = primitive^i, i in [0, q-1)
  std::vector<std::uint32_t> log;  // log[exp[i]] = i; log[0] unused
  std::vector<std::uint16_t> add_tab;  // q x q when q <= dense cap and p odd
  std::vector<std::uint16_t> mul_tab;  // q x q when q <= dense cap

  // -- digit helpers (index <-> digit vector over the immediate base) ------
  [[nodiscard]] std::vector<elem_t> index_digits(elem_t a) const {
    std::vector<elem_t> d(m_rel, 0);
    std::uint64_t v = a;
    for (std::uint32_t j = 0; j < m_rel; ++j) {
      d[j] = static_cast<elem_t>(v % q0);
      v /= q0;
    }
    return d;
  }
  [[nodiscard]] elem_t digits_index(const std::vector<elem_t>& d) const {
    std::uint64_t v = 0;
    for (std::uint32_t j = m_rel; j-- > 0;) v = v * q0 + d[j];
    return static_cast<elem_t>(v);
  }

  // -- base arithmetic (works for both prime and tower bases) --------------
  [[nodiscard]] elem_t badd(elem_t a, elem_t b) const {
    return base.valid() ? base.add(a, b)
                        : static_cast<elem_t>((a + b) % p);
  }
  [[nodiscard]] elem_t bmul(elem_t a, elem_t b) const {
    return base.valid()
               ? base.mul(a, b)
               : static_cast<elem_t>(std::uint64_t{a} * b % p);
  }
  [[nodiscard]] elem_t bneg(elem_t a) const {
    return base.valid() ? base.neg(a)
                        : static_cast<elem_t>(a == 0 ? 0 : p - a);
  }

  // -- construction-time polynomial arithmetic over the immediate base -----
  // Polynomials are digit vectors (ascending degree), not canonical indices.

  /// Remainder of u by the monic polynomial v (in place on u's copy).
  [[nodiscard]] std::vector<elem_t> poly_rem(std::vector<elem_t> u,
                                             const std::vector<elem_t>& v) const {
    const std::size_t dv = v.size() - 1;
    while (u.size() > dv) {
      const elem_t lead = u.back();
      const std::size_t shift = u.size() - 1 - dv;
      if (lead != 0) {
        for (std::size_t i = 0; i <= dv; ++i) {
          u[shift + i] = badd(u[shift + i], bneg(bmul(lead, v[i])));
        }
      }
      u.pop_back();
    }
    return u;
  }

  /// Product of two element digit vectors reduced by the field modulus.
  [[nodiscard]] elem_t poly_mul_mod(const std::vector<elem_t>& a,
                                    const std::vector<elem_t>& b) const {
    std::vector<elem_t> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j] == 0) continue;
        prod[i + j] = badd(prod[i + j], bmul(a[i], b[j]));
      }
    }
    std::vector<elem_t> rem = poly_rem(std::move(prod), modulus);
    rem.resize(m_rel, 0);
    return digits_index(rem);
  }

  /// Slow index multiplication used only while building the log tables.
  [[nodiscard]] elem_t mul_slow(elem_t a, elem_t b) const {
    if (a == 0 || b == 0) return 0;
    if (p == 2 && !base.valid()) {
      // Characteristic-2 prime-rooted fast path: indices are coefficient
      // bitmasks, so carry-less shift/xor multiplication applies.
      std::uint64_t acc = 0;
      std::uint64_t x = a;
      for (std::uint32_t bit = 0; bit < m_rel; ++bit) {
        if ((b >> bit) & 1u) acc ^= x << bit;
      }
      // Reduce by the modulus bitmask.
      std::uint64_t mod_mask = 0;
      for (std::uint32_t i = 0; i <= m_rel; ++i) {
        mod_mask |= std::uint64_t{modulus[i]} << i;
      }
      for (std::uint32_t d = 2 * m_rel - 2; d >= m_rel; --d) {
        if ((acc >> d) & 1u) acc ^= mod_mask << (d - m_rel);
      }
      return static_cast<elem_t>(acc);
    }
    return poly_mul_mod(index_digits(a), index_digits(b));
  }

  [[nodiscard]] elem_t pow_slow(elem_t a, std::uint64_t e) const {
    elem_t acc = 1;
    elem_t sq = a;
    while (e > 0) {
      if (e & 1u) acc = mul_slow(acc, sq);
      sq = mul_slow(sq, sq);
      e >>= 1;
    }
    return acc;
  }

  /// True iff the monic polynomial f (ascending coefficients over the base)
  /// has no monic divisor of degree in [1, deg(f)/2].
  [[nodiscard]] bool irreducible(const std::vector<elem_t>& f) const {
    const std::size_t deg = f.size() - 1;
    if (f[0] == 0) return false;  // divisible by x
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
      std::vector<elem_t> g(d + 1, 0);
      g[d] = 1;
      // Enumerate all q0^d monic candidates of degree d.
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < d; ++i) count *= q0;
      for (std::uint64_t enc = 0; enc < count; ++enc) {
        std::uint64_t v = enc;
        for (std::size_t i = 0; i < d; ++i) {
          g[i] = static_cast<elem_t>(v % q0);
          v /= q0;
        }
        const std::vector<elem_t> rem = poly_rem(f, g);
        if (std::all_of(rem.begin(), rem.end(),
                        [](elem_t c) { return c == 0; })) {
          return false;
        }
      }
    }
    return true;
  }

  /// Finds the monic irreducible of degree m_rel with the smallest base-q0
  /// integer encoding of (c_0, ..., c_{m-1}).
  void pick_modulus() {
    modulus.assign(m_rel + 1, 0);
    modulus[m_rel] = 1;
    if (m_rel == 1) return;  // modulus = x; never used for reduction
    std::uint64_t limit = 1;
    for (std::uint32_t i = 0; i < m_rel; ++i) limit *= q0;
    std::vector<elem_t> f(m_rel + 1, 0);
    f[m_rel] = 1;
    for (std::uint64_t enc = 0; enc < limit; ++enc) {
      std::uint64_t v = enc;
      for (std::uint32_t i = 0; i < m_rel; ++i) {
        f[i] = static_cast<elem_t>(v % q0);
        v /= q0;
      }
      if (irreducible(f)) {
        modulus = f;
        return;
      }
    }
    throw error("internal: no irreducible modulus found");  // unreachable
  }

  void pick_primitive_and_tables() {
    const std::vector<std::uint64_t> factors = prime_factors(q1);
    primitive = 0;
    for (elem_t cand = 1; cand < q; ++cand) {
      bool ok = true;
      for (std::uint64_t f : factors) {
        if (pow_slow(cand, q1 / f) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        primitive = cand;
        break;
      }
    }
    if (primitive == 0 && q > 2) throw error("internal: no primitive element");
    if (q == 2) primitive = 1;

    exp.assign(q1, 0);
    log.assign(q, 0);
    elem_t cur = 1;
    for (std::uint64_t i = 0; i < q1; ++i) {
      exp[i] = cur;
      log[cur] = static_cast<std::uint32_t>(i);
      cur = mul_slow(cur, primitive);
    }
    if (cur != 1) throw error("internal: primitive order mismatch");

    if (q <= kDenseTableMaxOrder) {
      mul_tab.assign(q * q, 0);
      for (std::uint64_t a = 1; a < q; ++a) {
        for (std::uint64_t b = a; b < q; ++b) {
          std::uint64_t s = std::uint64_t{log[a]} + log[b];
          if (s >= q1) s -= q1;
          const auto r = static_cast<std::uint16_t>(exp[s]);
          mul_tab[a * q + b] = r;
          mul_tab[b * q + a] = r;
        }
      }
      if (p != 2) {
        add_tab.assign(q * q, 0);
        for (std::uint64_t a = 0; a < q; ++a) {
          std::vector<elem_t> da = index_digits(static_cast<elem_t>(a));
          for (std::uint64_t b = a; b < q; ++b) {
            std::vector<elem_t> db = index_digits(static_cast<elem_t>(b));
            std::vector<elem_t> ds(m_rel);
            for (std::uint32_t j = 0; j < m_rel; ++j) ds[j] = badd(da[j], db[j]);
            const auto r = static_cast<std::uint16_t>(digits_index(ds));
            add_tab[a * q + b] = r;
            add_tab[b * q + a] = r;
          }
        }
      }
    }

    neg_one = static_cast<elem_t>(p - 1);
  }
};

// ---------------------------------------------------------------------------
// Field public API
// ---------------------------------------------------------------------------

const Field::Data& Field::data() const {
  if (!d_) throw invalid_argument_error("use of an invalid (empty) field context");
  return *d_;
}

Field Field::of_order(std::uint64_t q) {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  if (!prime_power_decompose(q, p, k)) {
    throw invalid_argument_error("field order must be a prime power, got " +
                                 std::to_string(q));
  }
  if (q > kMaxFieldOrder) {
    throw cap_error("field order " + std::to_string(q) +
                    " exceeds the supported cap " +
                    std::to_string(kMaxFieldOrder));
  }
  auto d = std::make_shared<Data>();
  d->p = p;
  d->k_abs = k;
  d->q = q;
  d->q1 = q - 1;
  d->q0 = p;
  d->m_rel = k;
  d->pick_modulus();
  d->pick_primitive_and_tables();
  return Field(std::move(d));
}

Field build_field(std::uint64_t q) { return Field::of_order(q); }

Field build_extension_field(const Field& base, std::uint32_t m) {
  if (!base.valid()) throw invalid_argument_error("extension of an empty field");
  if (m < 1) throw invalid_argument_error("extension degree must be >= 1");
  const std::uint64_t q0 = base.order();
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    if (q > kMaxFieldOrder / q0) {
      throw cap_error("extension order " + std::to_string(q0) + "^" +
                      std::to_string(m) + " exceeds the supported cap " +
                      std::to_string(kMaxFieldOrder));
    }
    q *= q0;
  }
  auto d = std::make_shared<Field::Data>();
  d->p = base.characteristic();
  d->k_abs = base.degree() * m;
  d->q = q;
  d->q1 = q - 1;
  d->base = base;
  d->q0 = q0;
  d->m_rel = m;
  d->pick_modulus();
  d->pick_primitive_and_tables();
  return Field(std::move(d));
}

ExtensionMap build_extension(const Field& base, std::uint32_t m) {
  return ExtensionMap{base, build_extension_field(base, m), m};
}

std::uint64_t Field::order() const noexcept { return d_ ? d_->q : 0; }
std::uint32_t Field::characteristic() const noexcept { return d_ ? d_->p : 0; }
std::uint32_t Field::degree() const noexcept { return d_ ? d_->k_abs : 0; }
bool Field::is_tower() const noexcept { return d_ && d_->base.valid(); }

const Field& Field::base() const {
  const Data& d = data();
  if (!d.base.valid()) {
    throw invalid_argument_error("base() called on a non-tower field context");
  }
  return d.base;
}

std::uint32_t Field::relative_degree() const noexcept {
  return d_ ? d_->m_rel : 0;
}
std::uint64_t Field::base_order() const noexcept { return d_ ? d_->q0 : 0; }

const std::vector<elem_t>& Field::modulus() const noexcept {
  static const std::vector<elem_t> kEmpty;
  return d_ ? d_->modulus : kEmpty;
}

elem_t Field::add(elem_t a, elem_t b) const {
  const Data& d = data();
  if (d.p == 2) return a ^ b;
  if (!d.add_tab.empty()) return d.add_tab[std::uint64_t{a} * d.q + b];
  if (d.base.valid()) {
    std::uint64_t va = a;
    std::uint64_t vb = b;
    std::uint64_t out = 0;
    std::uint64_t mult = 1;
    for (std::uint32_t j = 0; j < d.m_rel; ++j) {
      out += std::uint64_t{d.base.add(static_cast<elem_t>(va % d.q0),
                                      static_cast<elem_t>(vb % d.q0))} *
             mult;
      va /= d.q0;
      vb /= d.q0;
      mult *= d.q0;
    }
    return static_cast<elem_t>(out);
  }
  std::uint64_t va = a;
  std::uint64_t vb = b;
  std::uint64_t out = 0;
  std::uint64_t mult = 1;
  for (std::uint32_t j = 0; j < d.m_rel; ++j) {
    out += ((va % d.p) + (vb % d.p)) % d.p * mult;
    va /= d.p;
    vb /= d.p;
    mult *= d.p;
  }
  return static_cast<elem_t>(out);
}

elem_t Field::neg(elem_t a) const {
  const Data& d = data();
  if (d.p == 2) return a;
  return mul(d.neg_one, a);
}

elem_t Field::sub(elem_t a, elem_t b) const { return add(a, neg(b)); }

elem_t Field::mul(elem_t a, elem_t b) const {
  const Data& d = data();
  if (!d.mul_tab.empty()) return d.mul_tab[std::uint64_t{a} * d.q + b];
  if (a == 0 || b == 0) return 0;
  std::uint64_t s = std::uint64_t{d.log[a]} + d.log[b];
  if (s >= d.q1) s -= d.q1;
  return d.exp[s];
}

elem_t Field::inv(elem_t a) const {
  const Data& d = data();
  if (a == 0) throw invalid_argument_error("inverse of zero");
  if (a == 1) return 1;
  return d.exp[d.q1 - d.log[a]];
}

elem_t Field::div(elem_t a, elem_t b) const { return mul(a, inv(b)); }

elem_t Field::pow(elem_t a, std::uint64_t e) const {
  const Data& d = data();
  if (e == 0) return 1;  // includes pow(0, 0) == 1 by convention
  if (a == 0) return 0;
  const std::uint64_t er = e % d.q1;
  if (er == 0) return 1;
  return d.exp[std::uint64_t{d.log[a]} * er % d.q1];
}

elem_t Field::primitive_element() const noexcept {
  return d_ ? d_->primitive : 0;
}

std::vector<elem_t> Field::digits(elem_t a) const {
  return data().index_digits(a);
}

elem_t Field::from_digits(const std::vector<elem_t>& dg) const {
  const Data& d = data();
  if (dg.size() != d.m_rel) {
    throw invalid_argument_error("digit vector length mismatch");
  }
  for (elem_t c : dg) {
    if (c >= d.q0) throw invalid_argument_error("digit out of range");
  }
  return d.digits_index(dg);
}

bool Field::operator==(const Field& other) const noexcept {
  if (d_ == other.d_) return true;
  if (!d_ || !other.d_) return false;
  if (d_->p != other.d_->p || d_->q != other.d_->q ||
      d_->q0 != other.d_->q0 || d_->modulus != other.d_->modulus) {
    return false;
  }
  if (d_->base.valid() != other.d_->base.valid()) return false;
  return !d_->base.valid() || d_->base == other.d_->base;
}

std::string Field::describe() const {
  const Data& d = data();
  std::ostringstream os;
  os << "GF(" << d.q << ") = GF(" << d.p << "^" << d.k_abs << ")";
  if (d.base.valid()) os << " tower over GF(" << d.q0 << ")";
  os << ", modulus [";
  for (std::size_t i = 0; i < d.modulus.size(); ++i) {
    os << (i ? " " : "") << d.modulus[i];
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// Subfield embedding
// ---------------------------------------------------------------------------

std::vector<elem_t> subfield_embed(const Field& small, const Field& big) {
  if (!small.valid() || !big.valid()) {
    throw invalid_argument_error("subfield_embed on an empty field context");
  }
  if (small.characteristic() != big.characteristic()) {
    throw invalid_argument_error("subfield_embed: characteristic mismatch");
  }
  if (big.degree() % small.degree() != 0) {
    throw invalid_argument_error(
        "subfield_embed: small degree must divide big degree");
  }
  const auto q_small = small.order();
  std::vector<elem_t> table(q_small, 0);
  if (small.degree() == 1 && !small.is_tower()) {
    // Prime subfield: indices below p are the same integers everywhere.
    for (elem_t a = 0; a < q_small; ++a) table[a] = a;
    return table;
  }

  // Map small's immediate-base digits through a recursively built embedding,
  // then send small's canonical generator to the smallest root in `big` of
  // small's modulus (coefficients embedded into big).
  std::vector<elem_t> base_map;
  if (small.is_tower()) {
    base_map = subfield_embed(small.base(), big);
  } else {
    base_map.resize(small.characteristic());
    for (elem_t a = 0; a < small.characteristic(); ++a) base_map[a] = a;
  }

  const std::vector<elem_t>& mod = small.modulus();
  std::vector<elem_t> emb_mod(mod.size());
  for (std::size_t i = 0; i < mod.size(); ++i) emb_mod[i] = base_map[mod[i]];

  elem_t root = 0;
  bool found = false;
  for (std::uint64_t y = 0; y < big.order(); ++y) {
    // Horner evaluation of the embedded modulus at y.
    elem_t acc = 0;
    for (std::size_t i = emb_mod.size(); i-- > 0;) {
      acc = big.add(big.mul(acc, static_cast<elem_t>(y)), emb_mod[i]);
    }
    if (acc == 0) {
      root = static_cast<elem_t>(y);
      found = true;
      break;
    }
  }
  if (!found) {
    throw invalid_argument_error(
        "subfield_embed: modulus has no root in the big field");
  }

  const std::uint32_t m = small.relative_degree();
  for (std::uint64_t a = 0; a < q_small; ++a) {
    const std::vector<elem_t> dg = small.digits(static_cast<elem_t>(a));
    elem_t acc = 0;
    for (std::uint32_t j = m; j-- > 0;) {
      acc = big.add(big.mul(acc, root), base_map[dg[j]]);
    }
    table[a] = acc;
  }
  return table;
}

}  // namespace covsat::gf
