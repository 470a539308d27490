#include "hcircle/hypercircle.hpp"

#include <algorithm>
#include <sstream>

#include "hcircle/factor.hpp"

namespace hcircle {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Good: return "good";
    case Outcome::BadDenominator: return "bad-denominator";
    case Outcome::NotAttained: return "not-attained";
    case Outcome::Singular: return "singular";
  }
  return "?";
}

std::string to_string(ClassStatus s) {
  switch (s) {
    case ClassStatus::Fixing: return "fixing";
    case ClassStatus::NotAttainedTwice: return "not-attained-twice";
    case ClassStatus::IdentityFailed: return "identity-failed";
  }
  return "?";
}

int parameter_budget(int degree, int extension_degree) {
  return degree * degree - 2 * degree + extension_degree + 4;
}

ParameterVerdict classify_parameter(const Parametrization& psi, const Parametrization& psi_sigma,
                                    const Rational& t_k) {
  ParameterVerdict verdict{t_k, Outcome::Singular, std::nullopt};
  const FieldRef ef = psi_sigma.field();
  const NFElement t = field_one(psi.field()) * t_k;

  std::vector<NFElement> point;
  for (const auto& comp : psi.components()) {
    auto value = rf_eval(comp, t);
    if (!value) {
      verdict.outcome = Outcome::BadDenominator;
      return verdict;
    }
    point.push_back(*value);
  }

  // gcd over the class field of psi_j(t_k) * d_j^sigma(s) - n_j^sigma(s).
  std::optional<NFPoly> g;
  for (std::size_t j = 0; j < point.size(); ++j) {
    const RatFunc& cs = psi_sigma[j];
    NFPoly pj = cs.den() * point[j].embed_into(ef) - cs.num();
    if (pj.is_zero()) continue;
    g = g ? gcd(*g, pj) : pj.monic();
    if (g->degree() == 0) break;
  }
  if (!g) return verdict;  // every component is constant along the conjugate: degenerate
  if (g->degree() == 0) {
    verdict.outcome = Outcome::NotAttained;
    return verdict;
  }
  if (g->degree() > 1) return verdict;

  // psi(t_k) = psi^sigma(infinity) means the point is also reached at infinity.
  bool at_infinity = true;
  for (std::size_t j = 0; j < point.size() && at_infinity; ++j) {
    auto inf = rf_value_at_infinity(psi_sigma[j]);
    at_infinity = inf && *inf == point[j];
  }
  if (at_infinity) return verdict;

  verdict.outcome = Outcome::Good;
  verdict.s = -(*g)[0];
  return verdict;
}

UComputation compute_u(const Parametrization& psi, const Parametrization& psi_sigma, int budget) {
  UComputation out;
  std::vector<std::pair<NFElement, NFElement>> good;
  for (long k = 0; k < budget; ++k) {
    const Rational t_k(k);
    ParameterVerdict v = classify_parameter(psi, psi_sigma, t_k);
    out.verdicts.push_back(v);
    if (v.outcome == Outcome::NotAttained) {
      out.not_attained.push_back(t_k);
      if (out.not_attained.size() == 2) return out;
    } else if (v.outcome == Outcome::Good) {
      const NFElement& s = *v.s;
      const bool repeated = std::any_of(good.begin(), good.end(), [&](const auto& p) { return p.second == s; });
      if (repeated) continue;
      good.emplace_back(field_one(psi_sigma.field()) * t_k, s);
      if (good.size() == 3) {
        out.u = moebius_from_three_points({good[0], good[1], good[2]});
        return out;
      }
    }
  }
  throw BudgetExhausted("parametrization appears non-proper: no decision after " + std::to_string(budget) +
                        " parameters");
}

UComputation compute_u_for_class(const Parametrization& psi, const ConjugacyClass& cls) {
  const int n = psi.field() ? psi.field()->degree() : 1;
  return compute_u(psi, conjugate(psi, cls), parameter_budget(psi.degree(), n));
}

bool verify_identity(const Parametrization& psi, const Parametrization& psi_sigma, const MoebiusTransform& u) {
  if (psi.ambient_dim() != psi_sigma.ambient_dim()) return false;
  for (std::size_t j = 0; j < psi.ambient_dim(); ++j)
    if (!(rf_compose_moebius(psi_sigma[j], u) == psi[j])) return false;
  return true;
}

// ---------------------------------------------------------------------------

XRatPoly operator+(const XRatPoly& a, const XRatPoly& b) {
  XRatPoly r;
  const std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
  for (std::size_t j = 0; j < n; ++j) {
    if (j >= a.coeffs.size()) r.coeffs.push_back(b.coeffs[j]);
    else if (j >= b.coeffs.size()) r.coeffs.push_back(a.coeffs[j]);
    else r.coeffs.push_back(a.coeffs[j] + b.coeffs[j]);
  }
  return r;
}

bool operator==(const XRatPoly& a, const XRatPoly& b) {
  const std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
  const RatFunc zero;
  for (std::size_t j = 0; j < n; ++j) {
    const RatFunc& x = j < a.coeffs.size() ? a.coeffs[j] : zero;
    const RatFunc& y = j < b.coeffs.size() ? b.coeffs[j] : zero;
    if (!(x == y)) return false;
  }
  return true;
}

std::string to_string(const XRatPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = p.coeffs.size(); j-- > 0;) {
    if (p.coeffs[j].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << to_string(p.coeffs[j]) << ")";
    if (j > 0) os << "*x" << (j > 1 ? "^" + std::to_string(j) : "");
    first = false;
  }
  return first ? "0" : os.str();
}

LagrangeTerm lagrange_term(const ConjugacyClass& cls, const MoebiusTransform& u, const NFPoly& m_alpha_x) {
  const FieldRef ei = cls.relative_field;
  const FieldRef e = ei->base();
  const NFElement root = cls.root();
  const NFPoly full = embed_poly(m_alpha_x, e) * NFPoly::linear_root(e->generator());
  const NFPoly q = exact_div(embed_poly(full, ei), NFPoly::linear_root(root));
  const NFElement scale = q(root).inverse();
  const NFElement zero = field_zero(ei);
  const NFPoly at_b({u.b.embed_into(ei), u.a.embed_into(ei)}, zero);
  LagrangeTerm v{{}, NFPoly({u.d.embed_into(ei), u.c.embed_into(ei)}, zero)};
  for (int j = 0; j <= q.degree(); ++j) v.num.push_back(at_b * (q[j] * scale));
  return v;
}

XRatPoly trace_term(const LagrangeTerm& v) {
  const FieldRef ei = v.den.zero().field();
  const FieldRef e = ei ? ei->base() : nullptr;
  const NFElement base_zero = field_zero(e);
  auto trace_poly = [&](const NFPoly& p) {
    return p.map([](const NFElement& c) { return trace(c); }, base_zero);
  };
  XRatPoly w;
  if (v.den.degree() == 0) {
    const NFElement inv = v.den[0].inverse();
    for (const auto& nj : v.num) w.coeffs.emplace_back(trace_poly(nj * inv));
    return w;
  }
  // v = N / (t + b)
  const NFElement inv_c = v.den[1].inverse();
  const NFElement b = v.den[0] * inv_c;
  if (!ei || b.in_base()) {
    const NFPoly lin = NFPoly::linear_root(-b.restrict_to(e));
    for (const auto& nj : v.num) w.coeffs.emplace_back(trace_poly(nj * inv_c), lin);
    return w;
  }
  // g = charpoly(-b) over the base, g1 = g / (t + b): v = N g1 / g.
  const NFPoly g = charpoly(-b);
  const NFPoly g1 = exact_div(embed_poly(g, ei), NFPoly::linear_root(-b));
  for (const auto& nj : v.num) w.coeffs.emplace_back(trace_poly(nj * inv_c * g1), g);
  return w;
}

void LagrangeAccumulator::add(const XRatPoly& w) { f_ = f_ + w; }

// ---------------------------------------------------------------------------

std::vector<ConjugacyClass> HypercircleResult::fixing_classes() const {
  std::vector<ConjugacyClass> out;
  for (const auto& c : classes)
    if (c.status == ClassStatus::Fixing) out.push_back(c.cls);
  return out;
}

const ClassReport* HypercircleResult::certificate() const {
  for (const auto& c : classes)
    if (c.status != ClassStatus::Fixing) return &c;
  return nullptr;
}

int HypercircleResult::max_params_tried() const {
  int m = 0;
  for (const auto& c : classes) m = std::max(m, static_cast<int>(c.verdicts.size()));
  return m;
}

int HypercircleResult::total_params_tried() const {
  int m = 0;
  for (const auto& c : classes) m += static_cast<int>(c.verdicts.size());
  return m;
}

ConjugacyClass identity_class(const FieldRef& field) {
  return make_conjugacy_class(NFPoly::linear_root(field->generator()), field->generator_name());
}

std::vector<ConjugacyClass> conjugacy_classes(const FieldRef& field, NFPoly* m_alpha_x) {
  const NFPoly big_m = embed_poly(field->minpoly(), field);
  const NFPoly m = exact_div(big_m, NFPoly::linear_root(field->generator()));
  if (m_alpha_x) *m_alpha_x = m;
  std::vector<ConjugacyClass> out;
  if (m.degree() < 1) return out;
  int index = 1;
  for (const auto& [f, mult] : factor_over_nf(m, field)) {
    if (mult != 1) throw InvariantViolation("minimal polynomial is not separable over its own field");
    out.push_back(make_conjugacy_class(f, field->generator_name() + std::to_string(index++)));
  }
  return out;
}

HypercircleResult standard_parametrization(const Parametrization& psi) {
  const FieldRef e = psi.field();
  if (!e || e->degree() < 2) throw InputError("the extension must have degree at least 2");
  const int n = e->degree();

  HypercircleResult result;
  const auto classes = conjugacy_classes(e, &result.m_alpha_x);
  const int budget = parameter_budget(psi.degree(), n);
  LagrangeAccumulator acc(n);

  ClassReport seed;
  seed.cls = identity_class(e);
  seed.identity = true;
  seed.u = MoebiusTransform::identity(e);
  seed.term = trace_term(lagrange_term(seed.cls, *seed.u, result.m_alpha_x));
  acc.add(*seed.term);
  result.classes.push_back(std::move(seed));

  bool defined = true;
  for (const auto& cls : classes) {
    ClassReport rep;
    rep.cls = cls;
    const Parametrization psi_sigma = conjugate(psi, cls);
    UComputation uc = compute_u(psi, psi_sigma, budget);
    rep.verdicts = std::move(uc.verdicts);
    rep.not_attained = std::move(uc.not_attained);
    rep.u = uc.u;
    if (!uc.u) {
      rep.status = ClassStatus::NotAttainedTwice;
    } else if (!verify_identity(psi, psi_sigma, *uc.u)) {
      rep.status = ClassStatus::IdentityFailed;
    } else {
      rep.term = trace_term(lagrange_term(cls, *uc.u, result.m_alpha_x));
      acc.add(*rep.term);
    }
    defined = defined && rep.status == ClassStatus::Fixing;
    result.classes.push_back(std::move(rep));
  }

  result.defined = defined;
  if (!defined) return result;

  std::vector<RatFunc> phi;
  for (const auto& c : acc.value().coeffs) phi.push_back(c.embed_into(e));
  result.phi = Parametrization(e, phi);
  // sum phi_i a^i must be t
  RatFunc sum;
  NFElement power = e->one();
  for (const auto& c : phi) {
    sum = sum + c * power;
    power = power * e->generator();
  }
  if (!(sum == RatFunc(x_poly(e)))) throw InvariantViolation("standard parametrization does not sum to t");
  return result;
}

HypercircleResult standard_parametrization(const Parametrization& psi, const UniPoly<Rational>& M) {
  const FieldRef e = psi.field();
  if (!e || e->base() || !(to_rational_poly(e->minpoly()) == M.monic()))
    throw InputError("parametrization field does not match the given minimal polynomial");
  return standard_parametrization(psi);
}

}  // namespace hcircle
