#pragma once

#include <algorithm>
#include <concepts>
#include <span>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "hcircle/error.hpp"
#include "hcircle/rational.hpp"

namespace hcircle {

/// Element of a computable field. `zero_of`/`one_of` return the identities of
/// the field the argument lives in; scaling by a Rational must be supported.
template <class K>
concept FieldElement = std::copyable<K> && requires(const K& a, const K& b, const Rational& q) {
  { K(a + b) };
  { K(a - b) };
  { K(a * b) };
  { K(a / b) };
  { K(-a) };
  { K(a * q) };
  { a == b } -> std::convertible_to<bool>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { zero_of(a) } -> std::convertible_to<K>;
  { one_of(a) } -> std::convertible_to<K>;
};

namespace detail {
// Member functions named is_zero() would hide the free function inside UniPoly.
template <class K>
bool coeff_is_zero(const K& c) {
  return is_zero(c);
}
}  // namespace detail

/// Dense univariate polynomial with coefficients in ascending degree.
///
/// Every polynomial carries a zero of its coefficient field so that constants
/// and the zero polynomial know which field they belong to. The coefficient
/// vector never has trailing zeros.
template <class K>
class UniPoly {
 public:
  using coeff_type = K;

  UniPoly() = default;
  explicit UniPoly(K zero) : zero_(std::move(zero)) {}

  UniPoly(std::vector<K> coeffs, K zero) : coeffs_(std::move(coeffs)), zero_(std::move(zero)) {
    trim();
  }

  static UniPoly constant(const K& c) {
    UniPoly p(zero_of(c));
    if (!detail::coeff_is_zero(c)) p.coeffs_.push_back(c);
    return p;
  }

  /// c * x^degree
  static UniPoly monomial(const K& c, int degree) {
    UniPoly p(zero_of(c));
    if (!detail::coeff_is_zero(c)) {
      p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, p.zero_);
      p.coeffs_.back() = c;
    }
    return p;
  }

  /// x - root
  static UniPoly linear_root(const K& root) {
    return UniPoly({-root, one_of(root)}, zero_of(root));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == one_of(zero_); }

  const K& operator[](int i) const {
    return (i < 0 || i > degree()) ? zero_ : coeffs_[static_cast<std::size_t>(i)];
  }
  const K& lc() const { return coeffs_.empty() ? zero_ : coeffs_.back(); }
  std::span<const K> coeffs() const { return coeffs_; }
  const K& zero() const { return zero_; }
  K one() const { return one_of(zero_); }

  void set_coeff(int i, K c) {
    if (i > degree()) coeffs_.resize(static_cast<std::size_t>(i) + 1, zero_);
    coeffs_[static_cast<std::size_t>(i)] = std::move(c);
    trim();
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), zero_);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), zero_);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    trim();
    return *this;
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r(a.zero_);
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (detail::coeff_is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (detail::coeff_is_zero(b.coeffs_[j])) continue;
        r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    r.trim();
    return r;
  }

  friend UniPoly operator*(UniPoly a, const K& c) {
    if (detail::coeff_is_zero(c)) return UniPoly(a.zero_);
    for (auto& x : a.coeffs_) x = x * c;
    a.trim();
    return a;
  }
  friend UniPoly operator*(const K& c, UniPoly a) { return std::move(a) * c; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Scales so that the leading coefficient is one. The zero polynomial is returned as is.
  UniPoly monic() const {
    if (is_zero() || lc() == one_of(zero_)) return *this;
    K inv = one_of(zero_) / lc();
    UniPoly r = *this * inv;
    return r;
  }

  UniPoly derivative() const {
    UniPoly r(zero_);
    if (coeffs_.size() <= 1) return r;
    r.coeffs_.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      r.coeffs_.push_back(K(coeffs_[i] * Rational(static_cast<long>(i))));
    r.trim();
    return r;
  }

  /// Horner evaluation at a point of the coefficient field.
  K operator()(const K& x) const {
    K acc = zero_;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Composition p(q(x)).
  UniPoly compose(const UniPoly& q) const {
    UniPoly acc(zero_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + constant(*it);
    return acc;
  }

  /// p(x + c) by Horner with the linear polynomial x + c.
  UniPoly shift(const K& c) const { return compose(UniPoly({c, one_of(zero_)}, zero_)); }

  UniPoly pow(int e) const {
    UniPoly result = constant(one_of(zero_));
    UniPoly base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  /// Applies `f` to every coefficient; `new_zero` is the zero of the target field.
  template <class F, class K2 = std::invoke_result_t<F, const K&>>
  UniPoly<K2> map(F&& f, K2 new_zero) const {
    std::vector<K2> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return UniPoly<K2>(std::move(out), std::move(new_zero));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<K> coeffs_;
  K zero_;
};

/// Euclidean division a = q*b + r with deg r < deg b.
template <FieldElement K>
std::pair<UniPoly<K>, UniPoly<K>> divrem(const UniPoly<K>& a, const UniPoly<K>& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  UniPoly<K> q(a.zero());
  if (a.degree() < b.degree()) return {q, a};
  std::vector<K> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<K> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), a.zero());
  const K inv_lc = one_of(a.zero()) / b.lc();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    const K& top = rem[static_cast<std::size_t>(k + db)];
    if (is_zero(top)) continue;
    K c = top * inv_lc;
    for (int j = 0; j <= db; ++j) {
      if (is_zero(b[j])) continue;
      auto& slot = rem[static_cast<std::size_t>(k + j)];
      slot = slot - c * b[j];
    }
    quo[static_cast<std::size_t>(k)] = std::move(c);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly<K>(std::move(quo), a.zero()), UniPoly<K>(std::move(rem), a.zero())};
}

template <FieldElement K>
UniPoly<K> operator%(const UniPoly<K>& a, const UniPoly<K>& b) {
  return divrem(a, b).second;
}

/// Exact quotient; throws ArithmeticError if b does not divide a.
template <FieldElement K>
UniPoly<K> exact_div(const UniPoly<K>& a, const UniPoly<K>& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw ArithmeticError("polynomial division is not exact");
  return q;
}

template <FieldElement K>
bool divides(const UniPoly<K>& d, const UniPoly<K>& a) {
  return divrem(a, d).second.is_zero();
}

/// Monic greatest common divisor by the monic Euclidean algorithm.
template <FieldElement K>
UniPoly<K> gcd(UniPoly<K> a, UniPoly<K> b) {
  if (a.is_zero() && b.is_zero()) throw ArithmeticError("gcd(0, 0) is undefined");
  a = a.monic();
  b = b.monic();
  while (!b.is_zero()) {
    UniPoly<K> r = (a % b).monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

template <FieldElement K>
struct ExtendedGcd {
  UniPoly<K> gcd;  // monic
  UniPoly<K> s;
  UniPoly<K> t;    // gcd = s*f + t*g
};

template <FieldElement K>
ExtendedGcd<K> extended_gcd(const UniPoly<K>& f, const UniPoly<K>& g) {
  if (f.is_zero() && g.is_zero()) throw ArithmeticError("gcd(0, 0) is undefined");
  const K zero = f.zero();
  const K one = one_of(zero);
  UniPoly<K> r0 = f, r1 = g;
  UniPoly<K> s0 = UniPoly<K>::constant(one), s1(zero);
  UniPoly<K> t0(zero), t1 = UniPoly<K>::constant(one);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    UniPoly<K> s2 = s0 - q * s1;
    UniPoly<K> t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const K inv = one / r0.lc();
  return {r0 * inv, s0 * inv, t0 * inv};
}

template <FieldElement K>
K power(K base, long e) {
  K result = one_of(base);
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

/// Resultant via the Euclidean remainder sequence:
/// Res(f, g) = (-1)^(deg f * deg g) * lc(g)^(deg f - deg r) * Res(g, r), r = f mod g.
template <FieldElement K>
K resultant(UniPoly<K> f, UniPoly<K> g) {
  const K zero = f.zero();
  const K one = one_of(zero);
  if (f.is_zero() || g.is_zero()) return zero;
  K acc = one;
  while (true) {
    const int df = f.degree();
    const int dg = g.degree();
    if (dg == 0) return acc * power(g.lc(), df);
    if (df == 0) return acc * power(f.lc(), dg);
    UniPoly<K> r = f % g;
    if (r.is_zero()) return zero;
    if ((df * dg) % 2 == 1) acc = -acc;
    acc = acc * power(g.lc(), df - r.degree());
    f = std::move(g);
    g = std::move(r);
  }
}

/// Squarefree decomposition (Yun): f = lc * prod a_i^i, returned as (a_i, i) with
/// each a_i monic, squarefree and pairwise coprime. Characteristic zero only.
template <FieldElement K>
std::vector<std::pair<UniPoly<K>, int>> squarefree_decomposition(const UniPoly<K>& f) {
  std::vector<std::pair<UniPoly<K>, int>> out;
  if (f.degree() < 1) return out;
  UniPoly<K> fm = f.monic();
  UniPoly<K> fp = fm.derivative();
  UniPoly<K> a = gcd(fm, fp);
  UniPoly<K> b = exact_div(fm, a);
  UniPoly<K> c = exact_div(fp, a);
  UniPoly<K> d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly<K> ai = d.is_zero() ? b : gcd(b, d);
    b = exact_div(b, ai);
    c = exact_div(d, ai);
    d = c - b.derivative();
    if (ai.degree() > 0) out.emplace_back(ai.monic(), i);
    ++i;
  }
  return out;
}

/// Squarefree part: f / gcd(f, f'), monic.
template <FieldElement K>
UniPoly<K> squarefree_part(const UniPoly<K>& f) {
  if (f.degree() < 1) return f.monic();
  return exact_div(f.monic(), gcd(f, f.derivative()));
}

/// Newton's identities: power sums s_0..s_count of the roots of a monic p.
template <FieldElement K>
std::vector<K> newton_sums(const UniPoly<K>& p, int count) {
  if (p.degree() < 1) throw ArithmeticError("newton_sums needs a polynomial of degree >= 1");
  if (!(p.lc() == one_of(p.zero()))) throw ArithmeticError("newton_sums needs a monic polynomial");
  const int n = p.degree();
  // e[i] is the coefficient of x^(n-i).
  auto e = [&](int i) -> const K& { return p[n - i]; };
  std::vector<K> s;
  s.reserve(static_cast<std::size_t>(count) + 1);
  s.push_back(K(p.one() * Rational(n)));
  for (int k = 1; k <= count; ++k) {
    K acc = p.zero();
    for (int i = 1; i < k && i <= n; ++i) acc = acc + e(i) * s[static_cast<std::size_t>(k - i)];
    if (k <= n) acc = acc + e(k) * Rational(k);
    s.push_back(-acc);
  }
  return s;
}

}  // namespace hcircle
