#include "hcircle/witness.hpp"

#include <algorithm>
#include <sstream>

#include "hcircle/error.hpp"

namespace hcircle {

MPoly MPoly::constant(std::size_t nvars, const Rational& c) {
  MPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t i) {
  MPoly p(nvars);
  Exponents e(nvars, 0);
  e[i] = 1;
  p.add_term(e, Rational(1));
  return p;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  r.nvars_ = std::max(a.nvars_, b.nvars_);
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + b * Rational(-1); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r(std::max(a.nvars_, b.nvars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MPoly::Exponents e(ea);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MPoly operator*(const MPoly& a, const Rational& c) {
  MPoly r(a.nvars_);
  if (sgn(c) == 0) return r;
  for (const auto& [e, x] : a.terms_) r.terms_.emplace(e, x * c);
  return r;
}

std::string to_string(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    os << (first ? "" : " + ") << to_string(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) os << "*t" << i << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    first = false;
  }
  return os.str();
}

namespace {

// Element of Q(a)[t_0..t_{n-1}] as coordinates over the power basis of a.
struct AlgMPoly {
  std::vector<MPoly> c;
};

AlgMPoly alg_constant(const NFElement& x, std::size_t n) {
  AlgMPoly r;
  for (std::size_t i = 0; i < n; ++i) r.c.push_back(MPoly::constant(n, x.flat()[i]));
  return r;
}

AlgMPoly alg_add(const AlgMPoly& a, const AlgMPoly& b) {
  AlgMPoly r;
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c.push_back(a.c[i] + b.c[i]);
  return r;
}

AlgMPoly alg_mul(const AlgMPoly& a, const AlgMPoly& b, const UniPoly<Rational>& m) {
  const std::size_t n = a.c.size();
  std::vector<MPoly> prod(2 * n - 1, MPoly(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!b.c[j].is_zero()) prod[i + j] = prod[i + j] + a.c[i] * b.c[j];
  }
  // a^k = -sum m_i a^(k-n+i) for k >= n
  for (std::size_t k = 2 * n - 2; k >= n; --k) {
    if (prod[k].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Rational& mi = m[static_cast<int>(i)];
      if (sgn(mi) != 0) prod[k - n + i] = prod[k - n + i] - prod[k] * mi;
    }
  }
  prod.resize(n);
  return {prod};
}

AlgMPoly horner(const NFPoly& p, const AlgMPoly& t, const UniPoly<Rational>& m, std::size_t n) {
  AlgMPoly acc = alg_constant(field_zero(p.zero().field()).embed_into(p.zero().field()), n);
  for (int k = p.degree(); k >= 0; --k) acc = alg_add(alg_mul(acc, t, m), alg_constant(p[k], n));
  return acc;
}

// det of the multiplication matrix of x and the cofactor c with x * c = det.
std::pair<MPoly, AlgMPoly> norm_and_cofactor(const AlgMPoly& x, const UniPoly<Rational>& m) {
  const std::size_t n = x.c.size();
  // column j = coordinates of x * a^j
  std::vector<std::vector<MPoly>> mat(n, std::vector<MPoly>(n, MPoly(n)));
  AlgMPoly col = x;
  AlgMPoly gen;
  for (std::size_t i = 0; i < n; ++i) gen.c.push_back(MPoly::constant(n, Rational(i == 1 ? 1 : 0)));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) mat[i][j] = col.c[i];
    if (j + 1 < n) col = alg_mul(col, gen, m);
  }
  AlgMPoly cof;
  if (n == 1) {
    cof.c = {MPoly::constant(1, Rational(1))};
  } else if (n == 2) {
    cof.c = {mat[1][1], mat[1][0] * Rational(-1)};
  } else if (n == 3) {
    cof.c = {mat[1][1] * mat[2][2] - mat[1][2] * mat[2][1],
             (mat[1][0] * mat[2][2] - mat[1][2] * mat[2][0]) * Rational(-1),
             mat[1][0] * mat[2][1] - mat[1][1] * mat[2][0]};
  } else {
    throw InputError("witness oracle supports extensions of degree at most 3");
  }
  MPoly det(n);
  for (std::size_t j = 0; j < n; ++j) det = det + mat[0][j] * cof.c[j];
  return {det, cof};
}

}  // namespace

std::vector<MPoly> WeilSystem::F_polys() const {
  std::vector<MPoly> out;
  for (const auto& comp : lambda_num)
    for (std::size_t i = 1; i < comp.size(); ++i) out.push_back(comp[i]);
  return out;
}

WeilSystem weil_substitution(const Parametrization& psi, const UniPoly<Rational>& M) {
  const FieldRef e = psi.field();
  const UniPoly<Rational> m = M.monic();
  const std::size_t n = static_cast<std::size_t>(m.degree());
  if (n < 1 || n > 3) throw InputError("witness oracle budget exceeded: extension degree must be at most 3");
  if (psi.degree() > 6) throw InputError("witness oracle budget exceeded: degree must be at most 6");
  if (n > 1 && (!e || e->base() || !(to_rational_poly(e->minpoly()) == m)))
    throw InputError("parametrization field does not match the minimal polynomial");

  AlgMPoly t;
  for (std::size_t i = 0; i < n; ++i) t.c.push_back(MPoly::variable(n, i));

  // Distinct denominators are rationalized once each.
  std::vector<NFPoly> dens;
  std::vector<std::pair<MPoly, AlgMPoly>> rationalized;
  std::vector<std::size_t> den_index;
  for (const auto& comp : psi.components()) {
    std::size_t k = 0;
    while (k < dens.size() && !(dens[k] == comp.den())) ++k;
    if (k == dens.size()) {
      dens.push_back(comp.den());
      rationalized.push_back(norm_and_cofactor(horner(comp.den(), t, m, n), m));
    }
    den_index.push_back(k);
  }

  WeilSystem sys;
  sys.n = n;
  sys.denominator = MPoly::constant(n, Rational(1));
  for (const auto& r : rationalized) sys.denominator = sys.denominator * r.first;

  for (std::size_t j = 0; j < psi.ambient_dim(); ++j) {
    const auto& [nrm, cof] = rationalized[den_index[j]];
    AlgMPoly num = alg_mul(horner(psi[j].num(), t, m, n), cof, m);
    MPoly others = MPoly::constant(n, Rational(1));
    for (std::size_t k = 0; k < rationalized.size(); ++k)
      if (k != den_index[j]) others = others * rationalized[k].first;
    std::vector<MPoly> lam;
    for (auto& c : num.c) lam.push_back(c * others);
    sys.lambda_num.push_back(std::move(lam));
  }
  return sys;
}

namespace {

// phi over a common denominator: phi_i = num[i] / q.
struct Homogenized {
  NFPoly q;
  std::vector<NFPoly> num;
};

Homogenized homogenize(const Parametrization& phi) {
  const FieldRef f = phi.field();
  Homogenized h{NFPoly::constant(field_one(f)), {}};
  for (const auto& c : phi.components()) h.q = exact_div(h.q * c.den(), gcd(h.q, c.den()));
  for (const auto& c : phi.components()) h.num.push_back(c.num() * exact_div(h.q, c.den()));
  return h;
}

// p(num) * q^(deg p - |e|) is a polynomial in t of degree at most deg p * max deg, so it
// vanishes identically iff it vanishes at that many plus one points.
template <class K>
bool vanishes_at_points(const MPoly& p, const std::vector<UniPoly<K>>& num, const UniPoly<K>& q) {
  if (p.is_zero()) return true;
  const int deg = p.total_degree();
  int width = q.degree();
  for (const auto& x : num) width = std::max(width, x.degree());
  const long points = static_cast<long>(deg) * width + 1;
  const K one = q.one();
  const std::size_t n = num.size();
  std::vector<std::vector<K>> pw(n);
  std::vector<K> qpw;
  for (long t = 0; t < points; ++t) {
    const K t0 = K(one * Rational(t));
    for (std::size_t i = 0; i < n; ++i) {
      const K v = num[i](t0);
      pw[i].assign(1, one);
      for (int k = 1; k <= deg; ++k) pw[i].push_back(K(pw[i].back() * v));
    }
    const K qv = q(t0);
    qpw.assign(1, one);
    for (int k = 1; k <= deg; ++k) qpw.push_back(K(qpw.back() * qv));
    K acc = q.zero();
    for (const auto& [e, c] : p.terms()) {
      K term = K(qpw[0] * c);
      int used = 0;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        term = K(term * pw[i][static_cast<std::size_t>(e[i])]);
        used += e[i];
      }
      acc = K(acc + term * qpw[static_cast<std::size_t>(deg - used)]);
    }
    if (!is_zero(acc)) return false;
  }
  return true;
}

bool all_rational(const NFPoly& p) {
  for (const auto& c : p.coeffs())
    if (!c.is_rational()) return false;
  return true;
}

// Works over Q when phi happens to have rational coefficients, which is the usual case.
bool vanishes_identically(const MPoly& p, const Homogenized& h) {
  bool rational = all_rational(h.q);
  for (const auto& x : h.num) rational = rational && all_rational(x);
  if (!rational) return vanishes_at_points(p, h.num, h.q);
  std::vector<UniPoly<Rational>> num;
  for (const auto& x : h.num) num.push_back(to_rational_poly(x));
  return vanishes_at_points(p, num, to_rational_poly(h.q));
}

}  // namespace

NFPoly substitute(const MPoly& p, const Parametrization& phi) {
  const FieldRef f = phi.field();
  const std::size_t n = phi.ambient_dim();
  if (p.nvars() > n) throw InputError("parametrization has fewer components than the polynomial has variables");
  if (p.is_zero()) return zero_poly(f);
  const Homogenized h = homogenize(phi);

  const int deg = p.total_degree();
  std::vector<std::vector<NFPoly>> pw(n);
  for (std::size_t i = 0; i < n; ++i) {
    pw[i].push_back(NFPoly::constant(field_one(f)));
    for (int k = 1; k <= deg; ++k) pw[i].push_back(pw[i].back() * h.num[i]);
  }
  std::vector<NFPoly> qpw{NFPoly::constant(field_one(f))};
  for (int k = 1; k <= deg; ++k) qpw.push_back(qpw.back() * h.q);

  NFPoly acc = zero_poly(f);
  for (const auto& [e, c] : p.terms()) {
    NFPoly term = NFPoly::constant(field_one(f) * c);
    int used = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      term = term * pw[i][static_cast<std::size_t>(e[i])];
      used += e[i];
    }
    acc += term * qpw[static_cast<std::size_t>(deg - used)];
  }
  return acc;
}

bool denominator_nonvanishing(const WeilSystem& system, const Parametrization& phi) {
  if (system.denominator.nvars() > phi.ambient_dim())
    throw InputError("parametrization has fewer components than the polynomial has variables");
  return !vanishes_identically(system.denominator, homogenize(phi));
}

bool check_on_witness(const WeilSystem& system, const Parametrization& phi) {
  if (phi.ambient_dim() != system.n) return false;
  const Homogenized h = homogenize(phi);
  for (const auto& f : system.F_polys())
    if (!vanishes_identically(f, h)) return false;
  return !vanishes_identically(system.denominator, h);
}

}  // namespace hcircle
