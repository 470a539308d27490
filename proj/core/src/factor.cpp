#include "hcircle/factor.hpp"

#include <algorithm>
#include <random>

#include "hcircle/error.hpp"
#include "modpoly.hpp"

namespace hcircle {

namespace {

using modp::u64;
using modp::ZPoly;

// --- integer polynomials ----------------------------------------------------

Integer content(const ZPoly& f) {
  Integer g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive_part(ZPoly f) {
  modp::zp_trim(f);
  if (f.empty()) return f;
  Integer g = content(f);
  if (sgn(f.back()) < 0) g = -g;
  for (auto& c : f) c /= g;
  return f;
}

// Clears denominators of a rational polynomial and returns the primitive part.
ZPoly to_primitive_integer(const UniPoly<Rational>& f) {
  Integer l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly out;
  for (const auto& c : f.coeffs()) out.push_back(Integer(c.get_num() * (l / c.get_den())));
  return primitive_part(std::move(out));
}

UniPoly<Rational> to_monic_rational(const ZPoly& f) {
  std::vector<Rational> cs;
  for (const auto& c : f) cs.emplace_back(c);
  return UniPoly<Rational>(std::move(cs), Rational(0)).monic();
}

// Exact division over Z; returns false if g does not divide f.
bool z_divides(const ZPoly& g, ZPoly f, ZPoly& quotient) {
  const int dg = static_cast<int>(g.size()) - 1;
  int df = static_cast<int>(f.size()) - 1;
  if (df < dg) return false;
  // Constant terms give a cheap necessary condition.
  if (sgn(f[0]) != 0 && sgn(g[0]) != 0 && !mpz_divisible_p(f[0].get_mpz_t(), g[0].get_mpz_t())) return false;
  quotient.assign(static_cast<std::size_t>(df - dg + 1), Integer(0));
  for (int k = df - dg; k >= 0; --k) {
    const Integer& top = f[static_cast<std::size_t>(k + dg)];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), g.back().get_mpz_t())) return false;
    Integer q = top / g.back();
    for (int j = 0; j <= dg; ++j) f[static_cast<std::size_t>(k + j)] -= q * g[static_cast<std::size_t>(j)];
    quotient[static_cast<std::size_t>(k)] = q;
  }
  for (int i = 0; i < dg; ++i)
    if (sgn(f[static_cast<std::size_t>(i)]) != 0) return false;
  return true;
}

ZPoly symmetric(const ZPoly& a, const Integer& m) {
  const Integer half = m / 2;
  ZPoly r = a;
  for (auto& c : r) {
    c %= m;
    if (sgn(c) < 0) c += m;
    if (c > half) c -= m;
  }
  modp::zp_trim(r);
  return r;
}

// Mignotte-type bound on the coefficients of any factor of lc(f) * f.
Integer factor_coefficient_bound(const ZPoly& f) {
  Integer sumsq = 0;
  for (const auto& c : f) sumsq += c * c;
  Integer norm2;
  mpz_sqrt(norm2.get_mpz_t(), sumsq.get_mpz_t());
  norm2 += 1;
  Integer b = norm2 * abs(f.back());
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(f.size() - 1));
  return b;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Factors a primitive squarefree integer polynomial of degree >= 2 with positive
// leading coefficient into primitive irreducible factors.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};

  // Among the first few admissible primes keep the one with fewest modular factors.
  constexpr int kCandidatePrimes = 5;
  std::mt19937_64 rng(0x5eed1234ULL);
  std::vector<modp::Poly> best_factors;
  u64 best_p = 0;
  int seen = 0;
  for (u64 p = 3; seen < kCandidatePrimes; p += 2) {
    if (!modp::is_prime(p)) continue;
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), static_cast<unsigned long>(p))) continue;
    modp::Poly fp = modp::reduce(f, p);
    if (modp::gcd(fp, modp::derivative(fp, p), p).degree() != 0) continue;
    ++seen;
    auto fs = modp::factor_squarefree(fp, p, rng);
    if (best_p == 0 || fs.size() < best_factors.size()) {
      best_factors = std::move(fs);
      best_p = p;
    }
    if (best_factors.size() == 1) return {f};
  }

  const Integer bound = 2 * factor_coefficient_bound(f) + 1;
  int steps = 0;
  Integer modulus(static_cast<unsigned long>(best_p));
  while (modulus <= bound) {
    modulus *= modulus;
    ++steps;
  }
  std::vector<ZPoly> lifted = modp::hensel_lift(f, best_factors, best_p, steps);

  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::size_t k = 1;
  while (2 * k <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    do {
      ZPoly g{rest.back()};
      for (std::size_t i : idx) g = modp::zp_mul(g, lifted[i], modulus);
      g = primitive_part(symmetric(g, modulus));
      ZPoly quotient;
      if (g.size() > 1 && z_divides(g, rest, quotient)) {
        result.push_back(g);
        rest = primitive_part(quotient);
        for (std::size_t i = k; i-- > 0;) lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(idx[i]));
        found = true;
        break;
      }
    } while (next_combination(idx, lifted.size()));
    if (!found) ++k;
  }
  if (rest.size() > 1) result.push_back(rest);
  return result;
}

bool poly_less(const UniPoly<Rational>& a, const UniPoly<Rational>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

// --- Trager -------------------------------------------------------------------

std::vector<NFPoly> factor_squarefree_nf(const NFPoly& a, const FieldRef& field);

Factorization<NFElement> factor_any(const NFPoly& f, const FieldRef& field) {
  if (!field) {
    Factorization<NFElement> out;
    for (auto& [g, m] : factor_rational(to_rational_poly(f))) out.emplace_back(lift_poly(g, nullptr), m);
    return out;
  }
  Factorization<NFElement> out;
  for (auto& [part, mult] : squarefree_decomposition(f))
    for (auto& g : factor_squarefree_nf(part, field)) out.emplace_back(std::move(g), mult);
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& x, const auto& y) { return x.first.degree() < y.first.degree(); });
  return out;
}

std::vector<NFPoly> factor_squarefree_nf(const NFPoly& a, const FieldRef& field) {
  if (a.degree() <= 1) return {a.monic()};
  const FieldRef base = field->base();
  const NFElement g = field->generator();
  const int norm_degree = a.degree() * field->degree();

  std::vector<Rational> nodes;
  for (int j = 0; j <= norm_degree; ++j) nodes.emplace_back(j);

  // Shifts 0, 1, -1, 2, -2, ...
  for (int step = 0; step < 4 * norm_degree + 8; ++step) {
    const long k = step == 0 ? 0 : (step % 2 == 1 ? (step + 1) / 2 : -(step / 2));
    // a_k(x) = a(x - k g)
    const NFPoly ak = k == 0 ? a : a.shift(g * Rational(-k));
    std::vector<NFElement> values;
    values.reserve(nodes.size());
    for (const auto& x : nodes) values.push_back(norm(ak(field->from_rational(x))));
    NFPoly nrm = interpolate(nodes, values, base);
    if (gcd(nrm, nrm.derivative()).degree() != 0) continue;

    auto norm_factors = factor_any(nrm, base);
    if (norm_factors.size() == 1) return {a.monic()};
    std::vector<NFPoly> out;
    for (const auto& [nf, mult] : norm_factors) {
      NFPoly h = gcd(embed_poly(nf, field), ak);
      if (h.degree() < 1) continue;
      out.push_back(k == 0 ? h : h.shift(g * Rational(k)).monic());
    }
    return out;
  }
  throw ArithmeticError("no squarefree norm found for the Trager shift sequence");
}

}  // namespace

Factorization<Rational> factor_rational(const UniPoly<Rational>& f) {
  if (f.is_zero()) throw ArithmeticError("cannot factor the zero polynomial");
  Factorization<Rational> out;
  for (auto& [part, mult] : squarefree_decomposition(f)) {
    ZPoly z = to_primitive_integer(part);
    for (const auto& g : zassenhaus(z)) out.emplace_back(to_monic_rational(g), mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first == y.first) return x.second < y.second;
    return poly_less(x.first, y.first);
  });
  return out;
}

bool is_irreducible(const UniPoly<Rational>& f) {
  if (f.degree() < 1) return false;
  auto fs = factor_rational(f);
  return fs.size() == 1 && fs[0].second == 1;
}

Factorization<NFElement> factor_over_nf(const NFPoly& f, const FieldRef& field) {
  if (f.is_zero()) throw ArithmeticError("cannot factor the zero polynomial");
  return factor_any(embed_poly(f, field), field);
}

FieldRef make_number_field(const UniPoly<Rational>& minpoly, std::string generator_name) {
  if (minpoly.degree() < 1) throw InputError("minimal polynomial must have degree >= 1");
  if (!is_irreducible(minpoly)) throw InputError("reducible minimal polynomial");
  return NumberField::make_over_rationals(minpoly, std::move(generator_name));
}

FieldRef make_relative_field(const FieldRef& base, const NFPoly& minpoly, std::string generator_name) {
  if (minpoly.degree() < 1) throw InputError("minimal polynomial must have degree >= 1");
  auto fs = factor_over_nf(minpoly, base);
  if (fs.size() != 1 || fs[0].second != 1) throw InputError("reducible minimal polynomial");
  return NumberField::make(base, embed_poly(minpoly, base), std::move(generator_name));
}

NFPoly interpolate(const std::vector<Rational>& xs, const std::vector<NFElement>& ys, const FieldRef& field) {
  if (xs.size() != ys.size()) throw ArithmeticError("interpolation needs as many values as nodes");
  const std::size_t n = xs.size();
  std::vector<NFElement> dd;
  dd.reserve(n);
  for (const auto& y : ys) dd.push_back(y.embed_into(field));
  // Newton divided differences in place.
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      const Rational denom = xs[i] - xs[i - j];
      if (sgn(denom) == 0) throw ArithmeticError("interpolation nodes must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) * Rational(1 / denom);
    }
  NFPoly acc = zero_poly(field);
  for (std::size_t i = n; i-- > 0;) {
    acc = acc * NFPoly({field_zero(field) - field_one(field) * xs[i], field_one(field)}, field_zero(field));
    acc += NFPoly::constant(dd[i]);
  }
  return acc;
}

}  // namespace hcircle
