#include "modpoly.hpp"

#include <utility>

#include "hcircle/error.hpp"

namespace hcircle::modp {

u64 mul_mod(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) {
  if (a % p == 0) throw ArithmeticError("inverse of zero modulo p");
  return pow_mod(a, p - 2, p);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Poly reduce(const std::vector<Integer>& f, u64 p) {
  Poly r;
  r.c.resize(f.size());
  const Integer pm(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < f.size(); ++i) {
    Integer v = f[i] % pm;
    if (sgn(v) < 0) v += pm;
    r.c[i] = v.get_ui();
  }
  r.trim();
  return r;
}

Poly add(const Poly& a, const Poly& b, u64 p) {
  Poly r;
  r.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = (r.c[i] + b.c[i]) % p;
  r.trim();
  return r;
}

Poly sub(const Poly& a, const Poly& b, u64 p) {
  Poly r;
  r.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = (r.c[i] + p - b.c[i]) % p;
  r.trim();
  return r;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % p;
  }
  r.trim();
  return r;
}

void divrem(const Poly& a, const Poly& b, u64 p, Poly& q, Poly& r) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero modulo p");
  r = a;
  q.c.clear();
  if (a.degree() < b.degree()) return;
  const int db = b.degree();
  const u64 inv = inv_mod(b.c.back(), p);
  q.c.assign(static_cast<std::size_t>(a.degree() - db + 1), 0);
  for (int k = a.degree() - db; k >= 0; --k) {
    const u64 top = r.c[static_cast<std::size_t>(k + db)];
    if (top == 0) continue;
    const u64 coef = mul_mod(top, inv, p);
    q.c[static_cast<std::size_t>(k)] = coef;
    for (int j = 0; j <= db; ++j) {
      auto& slot = r.c[static_cast<std::size_t>(k + j)];
      slot = (slot + p - mul_mod(coef, b.c[static_cast<std::size_t>(j)], p)) % p;
    }
  }
  r.c.resize(static_cast<std::size_t>(db));
  r.trim();
  q.trim();
}

Poly rem(const Poly& a, const Poly& b, u64 p) {
  Poly q, r;
  divrem(a, b, p, q, r);
  return r;
}

Poly monic(const Poly& a, u64 p) {
  if (a.is_zero() || a.c.back() == 1) return a;
  const u64 inv = inv_mod(a.c.back(), p);
  Poly r = a;
  for (auto& x : r.c) x = mul_mod(x, inv, p);
  return r;
}

Poly derivative(const Poly& a, u64 p) {
  Poly r;
  if (a.c.size() <= 1) return r;
  r.c.resize(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = mul_mod(a.c[i], i % p, p);
  r.trim();
  return r;
}

Poly gcd(Poly a, Poly b, u64 p) {
  while (!b.is_zero()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

void xgcd(const Poly& a, const Poly& b, u64 p, Poly& g, Poly& s, Poly& t) {
  Poly r0 = a, r1 = b;
  Poly s0{{1}}, s1;
  Poly t0, t1{{1}};
  while (!r1.is_zero()) {
    Poly q, r;
    divrem(r0, r1, p, q, r);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const u64 inv = inv_mod(r0.c.back(), p);
  auto scale = [&](Poly x) {
    for (auto& v : x.c) v = mul_mod(v, inv, p);
    x.trim();
    return x;
  };
  g = scale(r0);
  s = scale(s0);
  t = scale(t0);
}

Poly powmod(const Poly& base, const Integer& e, const Poly& f, u64 p) {
  Poly result{{1}};
  result = rem(result, f, p);
  Poly b = rem(base, f, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), f, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, p), f, p);
  }
  return result;
}

namespace {

void equal_degree(const Poly& g, int d, u64 p, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  Integer pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), p, static_cast<unsigned long>(d));
  const Integer e = (pd - 1) / 2;
  while (true) {
    Poly a;
    a.c.resize(static_cast<std::size_t>(g.degree()));
    for (auto& v : a.c) v = rng() % p;
    a.trim();
    if (a.degree() < 1) continue;
    Poly b = sub(powmod(a, e, g, p), Poly{{1}}, p);
    Poly c = gcd(g, b, p);
    if (c.degree() > 0 && c.degree() < g.degree()) {
      Poly q, r;
      divrem(g, c, p, q, r);
      equal_degree(c, d, p, rng, out);
      equal_degree(monic(q, p), d, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Poly> factor_squarefree(const Poly& f, u64 p, std::mt19937_64& rng) {
  std::vector<Poly> out;
  Poly rest = monic(f, p);
  const Poly x{{0, 1}};
  Poly h = rem(x, rest, p);
  const Integer pe(static_cast<unsigned long>(p));
  for (int i = 1; 2 * i <= rest.degree(); ++i) {
    h = powmod(h, pe, rest, p);
    Poly g = gcd(rest, sub(h, x, p), p);
    if (g.degree() > 0) {
      equal_degree(g, i, p, rng, out);
      Poly q, r;
      divrem(rest, g, p, q, r);
      rest = monic(q, p);
      h = rem(h, rest, p);
    }
  }
  if (rest.degree() > 0) out.push_back(rest);
  return out;
}

// ---------------------------------------------------------------------------

void zp_trim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

ZPoly zp_reduce(const ZPoly& a, const Integer& m) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] % m;
    if (sgn(r[i]) < 0) r[i] += m;
  }
  zp_trim(r);
  return r;
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return zp_reduce(r, m);
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return zp_reduce(r, m);
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return zp_reduce(r, m);
}

void zp_divrem(const ZPoly& a, const ZPoly& b, const Integer& m, ZPoly& q, ZPoly& r) {
  r = a;
  q.clear();
  const int db = static_cast<int>(b.size()) - 1;
  const int da = static_cast<int>(a.size()) - 1;
  if (da < db) return;
  q.assign(static_cast<std::size_t>(da - db + 1), Integer(0));
  for (int k = da - db; k >= 0; --k) {
    Integer coef = r[static_cast<std::size_t>(k + db)] % m;
    if (sgn(coef) < 0) coef += m;
    if (sgn(coef) == 0) continue;
    q[static_cast<std::size_t>(k)] = coef;
    for (int j = 0; j <= db; ++j) {
      auto& slot = r[static_cast<std::size_t>(k + j)];
      slot -= coef * b[static_cast<std::size_t>(j)];
      slot %= m;
    }
  }
  r.resize(static_cast<std::size_t>(db));
  r = zp_reduce(r, m);
  zp_trim(q);
}

ZPoly to_zpoly(const Poly& a) {
  ZPoly r(a.c.size());
  for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = Integer(static_cast<unsigned long>(a.c[i]));
  return r;
}

namespace {

// One quadratic Hensel step: f = g*h mod m with s*g + t*h = 1 mod m becomes the
// same relations modulo m2 = m^2; h stays monic.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& m2) {
  ZPoly q, r;
  const ZPoly e = zp_sub(zp_reduce(f, m2), zp_mul(g, h, m2), m2);
  zp_divrem(zp_mul(s, e, m2), h, m2, q, r);
  ZPoly g2 = zp_add(zp_add(g, zp_mul(t, e, m2), m2), zp_mul(q, g, m2), m2);
  ZPoly h2 = zp_add(h, r, m2);
  ZPoly b = zp_sub(zp_add(zp_mul(s, g2, m2), zp_mul(t, h2, m2), m2), ZPoly{Integer(1)}, m2);
  ZPoly c, d;
  zp_divrem(zp_mul(s, b, m2), h2, m2, c, d);
  s = zp_sub(s, d, m2);
  t = zp_sub(zp_sub(t, zp_mul(t, b, m2), m2), zp_mul(c, g2, m2), m2);
  g = std::move(g2);
  h = std::move(h2);
}

}  // namespace

std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<Poly>& factors, u64 p, int steps) {
  const Integer pz(static_cast<unsigned long>(p));
  Integer modulus = pz;
  for (int i = 0; i < steps; ++i) modulus *= modulus;

  std::vector<ZPoly> lifted;
  ZPoly cur = zp_reduce(f, modulus);
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    Poly rest = reduce({cur.back()}, p);
    for (std::size_t j = i + 1; j < factors.size(); ++j) rest = mul(rest, factors[j], p);
    Poly gg, s0, t0;
    xgcd(rest, factors[i], p, gg, s0, t0);
    if (gg.degree() != 0) throw ArithmeticError("modular factors are not coprime");
    ZPoly g = to_zpoly(rest), h = to_zpoly(factors[i]), s = to_zpoly(s0), t = to_zpoly(t0);
    Integer m = pz;
    for (int k = 0; k < steps; ++k) {
      m *= m;
      hensel_step(cur, g, h, s, t, m);
    }
    lifted.push_back(std::move(h));
    cur = std::move(g);
  }
  // cur = lc * u_r; normalise to monic.
  Integer inv;
  mpz_invert(inv.get_mpz_t(), cur.back().get_mpz_t(), modulus.get_mpz_t());
  ZPoly last(cur.size());
  for (std::size_t i = 0; i < cur.size(); ++i) last[i] = cur[i] * inv;
  lifted.push_back(zp_reduce(last, modulus));
  return lifted;
}

}  // namespace hcircle::modp
