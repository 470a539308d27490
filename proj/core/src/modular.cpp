#include "modular.hpp"

#include <gmp.h>

#include <algorithm>
#include <cstdint>

#include "hcircle/error.hpp"

namespace hcircle::modular {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;   // flat element of one tower level
using Poly = std::vector<Vec>;  // ascending coefficients, no trailing zero chunks

// Primes just below 2^31, so products of residues fit in 64 bits.
const std::vector<u64>& prime_list() {
  static const std::vector<u64> primes = [] {
    std::vector<u64> ps;
    mpz_class c((1UL << 31) - 1);
    while (ps.size() < 6000) {
      if (mpz_probab_prime_p(c.get_mpz_t(), 12)) ps.push_back(c.get_ui());
      c -= 2;
    }
    return ps;
  }();
  return primes;
}

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

bool reduce_rational(const Rational& q, u64 p, u64& out) {
  const u64 d = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (d == 0) return false;
  const u64 n = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  out = n * inv_mod(d, p) % p;
  return true;
}

bool all_zero(const u64* a, std::size_t n) {
  return std::all_of(a, a + n, [](u64 x) { return x == 0; });
}

// The tower Q = F_0 < F_1 < ... < F_h reduced modulo p. Level L has dim[L]
// flat coordinates and a monic minimal polynomial of degree deg[L] over level L-1.
class Tower {
 public:
  static std::optional<Tower> make(const FieldRef& field, u64 p) {
    Tower t;
    t.p_ = p;
    std::vector<const NumberField*> chain;
    for (const NumberField* f = field.get(); f; f = f->base().get()) chain.push_back(f);
    std::reverse(chain.begin(), chain.end());
    t.dim_ = {1};
    t.deg_ = {1};
    t.minpoly_.emplace_back();
    for (const NumberField* f : chain) {
      const std::size_t below = t.dim_.back();
      std::vector<Vec> mp;
      for (int i = 0; i < f->degree(); ++i) {
        Vec v(below);
        const auto& c = f->minpoly_flat()[static_cast<std::size_t>(i)];
        for (std::size_t k = 0; k < below; ++k)
          if (!reduce_rational(c[k], p, v[k])) return std::nullopt;
        mp.push_back(std::move(v));
      }
      t.minpoly_.push_back(std::move(mp));
      t.deg_.push_back(static_cast<std::size_t>(f->degree()));
      t.dim_.push_back(below * static_cast<std::size_t>(f->degree()));
    }
    return t;
  }

  std::size_t top() const { return dim_.size() - 1; }
  std::size_t dim(std::size_t level) const { return dim_[level]; }
  u64 prime() const { return p_; }

  bool reduce(const NFElement& x, Vec& out) const {
    out.assign(dim_.back(), 0);
    auto flat = x.flat();
    for (std::size_t i = 0; i < flat.size(); ++i)
      if (!reduce_rational(flat[i], p_, out[i])) return false;
    return true;
  }

  void mul(std::size_t level, const u64* a, const u64* b, u64* out) const {
    if (level == 0) {
      out[0] = a[0] * b[0] % p_;
      return;
    }
    const std::size_t m = dim_[level - 1];
    const std::size_t n = deg_[level];
    Vec prod((2 * n - 1) * m, 0);
    Vec tmp(m);
    for (std::size_t i = 0; i < n; ++i) {
      if (all_zero(a + i * m, m)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (all_zero(b + j * m, m)) continue;
        mul(level - 1, a + i * m, b + j * m, tmp.data());
        u64* dst = prod.data() + (i + j) * m;
        for (std::size_t k = 0; k < m; ++k) dst[k] = (dst[k] + tmp[k]) % p_;
      }
    }
    for (std::size_t k = 2 * n - 2; k >= n; --k) {
      const u64* topc = prod.data() + k * m;
      if (all_zero(topc, m)) continue;
      for (std::size_t i = 0; i < n; ++i) {
        mul(level - 1, topc, minpoly_[level][i].data(), tmp.data());
        u64* dst = prod.data() + (k - n + i) * m;
        for (std::size_t r = 0; r < m; ++r) dst[r] = (dst[r] + p_ - tmp[r]) % p_;
      }
    }
    std::copy(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(n * m), out);
  }

  Vec mul(std::size_t level, const Vec& a, const Vec& b) const {
    Vec out(dim_[level]);
    mul(level, a.data(), b.data(), out.data());
    return out;
  }

  // False when a is zero or a zero divisor modulo p.
  bool inv(std::size_t level, const Vec& a, Vec& out) const {
    if (level == 0) {
      if (a[0] == 0) return false;
      out = {inv_mod(a[0], p_)};
      return true;
    }
    const std::size_t below = level - 1;
    const std::size_t m = dim_[below];
    const std::size_t n = deg_[level];
    Poly r0 = minpoly_[level];
    r0.push_back(one(below));
    Poly r1;
    for (std::size_t i = 0; i < n; ++i) r1.emplace_back(a.begin() + static_cast<long>(i * m), a.begin() + static_cast<long>((i + 1) * m));
    trim(r1);
    Poly s0, s1{one(below)};
    while (r1.size() > 1) {
      Poly q, r;
      if (!divrem(below, r0, r1, q, r)) return false;
      Poly s = sub(below, s0, poly_mul(below, q, s1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    if (r1.empty()) return false;
    Vec c;
    if (!inv(below, r1[0], c)) return false;
    out.assign(dim_[level], 0);
    for (std::size_t i = 0; i < s1.size(); ++i) {
      Vec v = mul(below, s1[i], c);
      std::copy(v.begin(), v.end(), out.begin() + static_cast<long>(i * m));
    }
    return true;
  }

  Vec one(std::size_t level) const {
    Vec v(dim_[level], 0);
    v[0] = 1;
    return v;
  }

  static void trim(Poly& a) {
    while (!a.empty() && all_zero(a.back().data(), a.back().size())) a.pop_back();
  }

  Poly sub(std::size_t level, Poly a, const Poly& b) const {
    if (a.size() < b.size()) a.resize(b.size(), Vec(dim_[level], 0));
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t k = 0; k < dim_[level]; ++k) a[i][k] = (a[i][k] + p_ - b[i][k]) % p_;
    trim(a);
    return a;
  }

  Poly poly_mul(std::size_t level, const Poly& a, const Poly& b) const {
    if (a.empty() || b.empty()) return {};
    const std::size_t m = dim_[level];
    Poly out(a.size() + b.size() - 1, Vec(m, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) {
        Vec t = mul(level, a[i], b[j]);
        for (std::size_t k = 0; k < m; ++k) out[i + j][k] = (out[i + j][k] + t[k]) % p_;
      }
    trim(out);
    return out;
  }

  bool divrem(std::size_t level, const Poly& a, const Poly& b, Poly& q, Poly& r) const {
    const std::size_t m = dim_[level];
    Vec inv_lc;
    if (!inv(level, b.back(), inv_lc)) return false;
    r = a;
    q.clear();
    if (a.size() < b.size()) return true;
    q.assign(a.size() - b.size() + 1, Vec(m, 0));
    Vec t(m);
    for (std::size_t k = a.size() - b.size() + 1; k-- > 0;) {
      const Vec& topc = r[k + b.size() - 1];
      if (all_zero(topc.data(), m)) continue;
      Vec c = mul(level, topc, inv_lc);
      for (std::size_t j = 0; j < b.size(); ++j) {
        mul(level, c.data(), b[j].data(), t.data());
        for (std::size_t x = 0; x < m; ++x) r[k + j][x] = (r[k + j][x] + p_ - t[x]) % p_;
      }
      q[k] = std::move(c);
    }
    r.resize(b.size() - 1);
    trim(r);
    trim(q);
    return true;
  }

  bool monic(std::size_t level, Poly& a) const {
    Vec c;
    if (!inv(level, a.back(), c)) return false;
    for (auto& x : a) x = mul(level, x, c);
    return true;
  }

  // Monic gcd, or nullopt when a zero divisor shows up.
  std::optional<Poly> gcd(std::size_t level, Poly a, Poly b) const {
    if (!monic(level, a) || !monic(level, b)) return std::nullopt;
    while (!b.empty()) {
      Poly q, r;
      if (!divrem(level, a, b, q, r)) return std::nullopt;
      if (!r.empty() && !monic(level, r)) return std::nullopt;
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }

 private:
  u64 p_ = 0;
  std::vector<std::size_t> dim_;
  std::vector<std::size_t> deg_;
  std::vector<std::vector<Vec>> minpoly_;
};

// Chinese remaindering of a vector of residues, then rational reconstruction.
class Accumulator {
 public:
  void reset(std::size_t n) {
    values_.assign(n, mpz_class(0));
    modulus_ = 1;
    count_ = 0;
  }
  std::size_t count() const { return count_; }

  void add(const Vec& residues, u64 p) {
    const u64 m_mod_p = mpz_fdiv_ui(modulus_.get_mpz_t(), p);
    const u64 m_inv = inv_mod(m_mod_p, p);
    for (std::size_t i = 0; i < values_.size(); ++i) {
      const u64 x = mpz_fdiv_ui(values_[i].get_mpz_t(), p);
      const u64 t = (residues[i] + p - x) % p * m_inv % p;
      if (t) values_[i] += modulus_ * t;
    }
    modulus_ *= p;
    ++count_;
  }

  std::optional<std::vector<Rational>> reconstruct() const {
    mpz_class bound;
    mpz_class half = modulus_ / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    std::vector<Rational> out;
    out.reserve(values_.size());
    for (const auto& v : values_) {
      auto q = reconstruct_one(v, bound);
      if (!q) return std::nullopt;
      out.push_back(std::move(*q));
    }
    return out;
  }

 private:
  std::optional<Rational> reconstruct_one(const mpz_class& v, const mpz_class& bound) const {
    mpz_class r0 = modulus_, r1 = v, t0 = 0, t1 = 1, q, tmp;
    while (r1 > bound) {
      mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
      tmp = r0 - q * r1;
      r0 = r1;
      r1 = tmp;
      tmp = t0 - q * t1;
      t0 = t1;
      t1 = tmp;
    }
    if (abs(t1) > bound || t1 == 0) return std::nullopt;
    Rational out(r1, t1);
    out.canonicalize();
    if (out.get_den() != abs(t1)) return std::nullopt;
    return out;
  }

  std::vector<mpz_class> values_;
  mpz_class modulus_ = 1;
  std::size_t count_ = 0;
};

bool attempt_due(std::size_t count) {
  std::size_t next = 1;
  while (next < count) next += std::max<std::size_t>(1, next / 4);
  return next == count;
}

}  // namespace

NFElement inverse(const NFElement& x) {
  if (x.is_zero()) throw ArithmeticError("division by zero element");
  const FieldRef& f = x.field();
  const std::size_t n = static_cast<std::size_t>(absolute_degree(f));
  Accumulator acc;
  acc.reset(n);
  Vec xr, yr;
  for (u64 p : prime_list()) {
    auto tower = Tower::make(f, p);
    if (!tower || !tower->reduce(x, xr) || !tower->inv(tower->top(), xr, yr)) continue;
    acc.add(yr, p);
    if (!attempt_due(acc.count())) continue;
    auto flat = acc.reconstruct();
    if (!flat) continue;
    NFElement y(f, std::move(*flat));
    if ((x * y).is_one()) return y;
  }
  throw ArithmeticError("modular inverse did not converge");
}

NFPoly gcd(const NFPoly& a, const NFPoly& b) {
  if (a.is_zero() && b.is_zero()) throw ArithmeticError("gcd(0, 0) is undefined");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const FieldRef f = is_subfield(a.zero().field(), b.zero().field()) ? b.zero().field() : a.zero().field();
  const NFElement one = field_one(f);
  if (a.degree() == 0 || b.degree() == 0) return NFPoly::constant(one);

  const std::size_t n = static_cast<std::size_t>(absolute_degree(f));
  auto reduce_poly = [&](const Tower& t, const NFPoly& p, Poly& out) {
    out.clear();
    Vec v;
    for (const auto& c : p.coeffs()) {
      if (!t.reduce(c, v)) return false;
      out.push_back(v);
    }
    return true;
  };

  Accumulator acc;
  std::size_t best = static_cast<std::size_t>(-1);
  Poly ar, br;
  for (u64 p : prime_list()) {
    auto tower = Tower::make(f, p);
    if (!tower || !reduce_poly(*tower, a, ar) || !reduce_poly(*tower, b, br)) continue;
    // Leading coefficients must survive so that degrees are preserved.
    if (all_zero(ar.back().data(), n) || all_zero(br.back().data(), n)) continue;
    auto g = tower->gcd(tower->top(), ar, br);
    if (!g) continue;
    const std::size_t deg = g->size() - 1;
    if (deg == 0) return NFPoly::constant(one);
    if (deg > best) continue;
    if (deg < best) {
      best = deg;
      acc.reset(deg * n);
    }
    Vec flat;
    for (std::size_t k = 0; k < deg; ++k) flat.insert(flat.end(), (*g)[k].begin(), (*g)[k].end());
    acc.add(flat, p);
    if (!attempt_due(acc.count())) continue;
    auto rec = acc.reconstruct();
    if (!rec) continue;
    std::vector<NFElement> coeffs;
    for (std::size_t k = 0; k < deg; ++k)
      coeffs.emplace_back(f, std::vector<Rational>(rec->begin() + static_cast<long>(k * n),
                                                   rec->begin() + static_cast<long>((k + 1) * n)));
    coeffs.push_back(one);
    NFPoly cand(std::move(coeffs), field_zero(f));
    if ((a % cand).is_zero() && (b % cand).is_zero()) return cand;
  }
  throw ArithmeticError("modular gcd did not converge");
}

}  // namespace hcircle::modular
