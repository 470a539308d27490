#pragma once

// Polynomial arithmetic over Z/p and Z/p^k used by the Zassenhaus factorizer.

#include <cstdint>
#include <random>
#include <vector>

#include "hcircle/rational.hpp"

namespace hcircle::modp {

using u64 = std::uint64_t;

/// Dense polynomial over Z/p, ascending coefficients, no trailing zeros. p < 2^31.
struct Poly {
  std::vector<u64> c;
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
};

u64 mul_mod(u64 a, u64 b, u64 p);
u64 pow_mod(u64 a, u64 e, u64 p);
u64 inv_mod(u64 a, u64 p);
bool is_prime(u64 n);

Poly reduce(const std::vector<Integer>& f, u64 p);
Poly add(const Poly& a, const Poly& b, u64 p);
Poly sub(const Poly& a, const Poly& b, u64 p);
Poly mul(const Poly& a, const Poly& b, u64 p);
void divrem(const Poly& a, const Poly& b, u64 p, Poly& q, Poly& r);
Poly rem(const Poly& a, const Poly& b, u64 p);
Poly monic(const Poly& a, u64 p);
Poly derivative(const Poly& a, u64 p);
Poly gcd(Poly a, Poly b, u64 p);
/// Monic gcd with Bezout coefficients: g = s*a + t*b.
void xgcd(const Poly& a, const Poly& b, u64 p, Poly& g, Poly& s, Poly& t);
/// base^e mod f.
Poly powmod(const Poly& base, const Integer& e, const Poly& f, u64 p);

/// Distinct-degree then equal-degree factorization of a monic squarefree f.
std::vector<Poly> factor_squarefree(const Poly& f, u64 p, std::mt19937_64& rng);

// ---------------------------------------------------------------------------
// Polynomials over Z/m for Hensel lifting (m a prime power), coefficients in [0, m).

using ZPoly = std::vector<Integer>;

void zp_trim(ZPoly& a);
ZPoly zp_reduce(const ZPoly& a, const Integer& m);
ZPoly zp_add(const ZPoly& a, const ZPoly& b, const Integer& m);
ZPoly zp_sub(const ZPoly& a, const ZPoly& b, const Integer& m);
ZPoly zp_mul(const ZPoly& a, const ZPoly& b, const Integer& m);
/// Division by a monic b modulo m.
void zp_divrem(const ZPoly& a, const ZPoly& b, const Integer& m, ZPoly& q, ZPoly& r);
ZPoly to_zpoly(const Poly& a);

/// Lifts f = lc * u_1 * ... * u_r (mod p, u_i monic, pairwise coprime) to the
/// same factorization modulo p^(2^steps). Returns the lifted monic u_i.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<Poly>& factors, u64 p, int steps);

}  // namespace hcircle::modp
