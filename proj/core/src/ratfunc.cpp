#include "hcircle/ratfunc.hpp"

#include <sstream>

#include "hcircle/error.hpp"
#include "hcircle/linalg.hpp"

namespace hcircle {

namespace {

FieldRef larger_field(const FieldRef& a, const FieldRef& b) {
  if (is_subfield(a, b)) return b;
  if (is_subfield(b, a)) return a;
  throw ArithmeticError("rational functions over unrelated fields");
}

}  // namespace

RatFunc::RatFunc(const NFPoly& num, const NFPoly& den) : num_(num.zero()), den_(den.zero()) {
  if (den.is_zero()) throw ArithmeticError("rational function with zero denominator");
  const FieldRef f = larger_field(num.zero().field(), den.zero().field());
  NFPoly n = embed_poly(num, f);
  NFPoly d = embed_poly(den, f);
  if (n.is_zero()) {
    num_ = zero_poly(f);
    den_ = NFPoly::constant(field_one(f));
    return;
  }
  if (d.degree() > 0) {
    NFPoly g = gcd(n, d);
    if (g.degree() > 0) {
      n = exact_div(n, g);
      d = exact_div(d, g);
    }
  }
  const NFElement inv = d.lc().inverse();
  num_ = n * inv;
  den_ = d * inv;
}

RatFunc::RatFunc(const NFPoly& poly)
    : num_(poly), den_(NFPoly::constant(field_one(poly.zero().field()))) {}

RatFunc RatFunc::from_canonical(NFPoly num, NFPoly den) {
  RatFunc r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

int RatFunc::degree() const { return std::max(num_.degree(), den_.degree()); }

RatFunc RatFunc::embed_into(const FieldRef& field) const {
  if (field == this->field()) return *this;
  return from_canonical(embed_poly(num_, field), embed_poly(den_, field));
}

RatFunc operator+(const RatFunc& a0, const RatFunc& b0) {
  const FieldRef f = larger_field(a0.field(), b0.field());
  const RatFunc a = a0.embed_into(f);
  const RatFunc b = b0.embed_into(f);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return a + RatFunc::from_canonical(-b.num_, b.den_);
}

RatFunc operator*(const RatFunc& a0, const RatFunc& b0) {
  const FieldRef f = larger_field(a0.field(), b0.field());
  const RatFunc a = a0.embed_into(f);
  const RatFunc b = b0.embed_into(f);
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const NFElement& c) {
  if (c.is_zero()) return RatFunc(zero_poly(larger_field(a.field(), c.field())));
  const FieldRef f = larger_field(a.field(), c.field());
  return RatFunc::from_canonical(embed_poly(a.num_, f) * c.embed_into(f), embed_poly(a.den_, f));
}

bool operator==(const RatFunc& a0, const RatFunc& b0) {
  const FieldRef f = larger_field(a0.field(), b0.field());
  const RatFunc a = a0.embed_into(f);
  const RatFunc b = b0.embed_into(f);
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RatFunc rf_normalize(const NFPoly& num, const NFPoly& den) { return RatFunc(num, den); }

std::optional<NFElement> rf_eval(const RatFunc& f, const NFElement& t0) {
  const FieldRef field = larger_field(f.field(), t0.field());
  const NFElement t = t0.embed_into(field);
  const NFElement d = embed_poly(f.den(), field)(t);
  if (d.is_zero()) return std::nullopt;
  return embed_poly(f.num(), field)(t) / d;
}

std::optional<NFElement> rf_value_at_infinity(const RatFunc& f) {
  if (f.num().degree() > f.den().degree()) return std::nullopt;
  if (f.num().degree() < f.den().degree()) return field_zero(f.field());
  return f.num().lc() / f.den().lc();
}

// ---------------------------------------------------------------------------

MoebiusTransform MoebiusTransform::identity(const FieldRef& field) {
  return {field_one(field), field_zero(field), field_zero(field), field_one(field)};
}

FieldRef MoebiusTransform::field() const {
  FieldRef f = a.field();
  for (const auto* x : {&b, &c, &d}) f = larger_field(f, x->field());
  return f;
}

std::optional<NFElement> MoebiusTransform::operator()(const NFElement& t) const {
  const NFElement den = c * t + d;
  if (den.is_zero()) return std::nullopt;
  return (a * t + b) / den;
}

RatFunc MoebiusTransform::as_ratfunc() const {
  const FieldRef f = field();
  NFPoly num({b.embed_into(f), a.embed_into(f)}, field_zero(f));
  NFPoly den({d.embed_into(f), c.embed_into(f)}, field_zero(f));
  return RatFunc(num, den);
}

bool MoebiusTransform::projectively_equal(const MoebiusTransform& other) const {
  const std::array<const NFElement*, 4> v{&a, &b, &c, &d};
  const std::array<const NFElement*, 4> w{&other.a, &other.b, &other.c, &other.d};
  std::size_t pivot = 0;
  while (pivot < 4 && v[pivot]->is_zero()) ++pivot;
  if (pivot == 4 || w[pivot]->is_zero()) return false;
  for (std::size_t j = 0; j < 4; ++j)
    if (!(*v[j] * *w[pivot] == *w[j] * *v[pivot])) return false;
  return true;
}

RatFunc rf_compose_moebius(const RatFunc& f, const MoebiusTransform& u) {
  const FieldRef field = larger_field(f.field(), u.field());
  const int deg = f.degree();
  const NFElement zero = field_zero(field);
  const NFPoly lin_a({u.b.embed_into(field), u.a.embed_into(field)}, zero);
  const NFPoly lin_c({u.d.embed_into(field), u.c.embed_into(field)}, zero);
  // Homogenized substitution: p(u(t)) * (ct + d)^deg = sum p_i (at+b)^i (ct+d)^(deg-i).
  std::vector<NFPoly> cpow{NFPoly::constant(field_one(field))};
  for (int i = 1; i <= deg; ++i) cpow.push_back(cpow.back() * lin_c);
  auto homogenize = [&](const NFPoly& p) {
    NFPoly acc(zero);
    for (int i = deg; i >= 0; --i) {
      acc = acc * lin_a;
      if (!p[i].is_zero()) acc += cpow[static_cast<std::size_t>(deg - i)] * p[i].embed_into(field);
    }
    return acc;
  };
  NFPoly num = homogenize(f.num());
  NFPoly den = homogenize(f.den());
  if (den.is_zero()) throw ArithmeticError("degenerate Moebius transform in composition");
  // Coprime forms stay coprime under an invertible substitution; only rescale.
  const NFElement inv = den.lc().inverse();
  return RatFunc::from_canonical(num * inv, den * inv);
}

MoebiusTransform moebius_from_three_points(const std::array<std::pair<NFElement, NFElement>, 3>& pairs) {
  FieldRef field;
  for (const auto& [t, s] : pairs) field = larger_field(larger_field(field, t.field()), s.field());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (pairs[i].first == pairs[j].first) throw ArithmeticError("Moebius interpolation needs distinct parameters");
      if (pairs[i].second == pairs[j].second) throw ArithmeticError("Moebius interpolation needs distinct images");
    }
  // s_k (c t_k + d) - (a t_k + b) = 0 in the unknowns (a, b, c, d).
  Matrix<NFElement> rows;
  for (const auto& [t0, s0] : pairs) {
    const NFElement t = t0.embed_into(field);
    const NFElement s = s0.embed_into(field);
    rows.push_back({-t, -field_one(field), s * t, s});
  }
  auto kernel = nullspace(rows, 4, field_zero(field));
  if (kernel.size() != 1) throw ArithmeticError("degenerate Moebius interpolation system");
  MoebiusTransform u{kernel[0][0], kernel[0][1], kernel[0][2], kernel[0][3]};
  if (u.determinant().is_zero()) throw ArithmeticError("interpolated Moebius transform is singular");
  return u;
}

// ---------------------------------------------------------------------------

Parametrization::Parametrization(FieldRef field, std::vector<RatFunc> components) : field_(std::move(field)) {
  if (components.empty()) throw InputError("a parametrization needs at least one component");
  for (auto& c : components) {
    if (!is_subfield(c.field(), field_)) throw ArithmeticError("component does not lie in the parametrization field");
    components_.push_back(c.embed_into(field_));
  }
}

int Parametrization::degree() const {
  NFPoly l = NFPoly::constant(field_one(field_));
  for (const auto& c : components_) l = exact_div(l * c.den(), gcd(l, c.den()));
  int deg = l.degree();
  for (const auto& c : components_) {
    if (c.is_zero()) continue;
    deg = std::max(deg, c.num().degree() + l.degree() - c.den().degree());
  }
  return deg;
}

int Parametrization::max_component_degree() const {
  int deg = 0;
  for (const auto& c : components_) deg = std::max(deg, c.degree());
  return deg;
}

RatFunc conjugate(const RatFunc& f, const FieldRef& field, const NFElement& root) {
  return RatFunc::from_canonical(conjugate(f.num(), field, root), conjugate(f.den(), field, root));
}

Parametrization conjugate(const Parametrization& psi, const ConjugacyClass& cls) {
  const FieldRef base = cls.relative_field->base();
  const NFElement root = cls.root();
  std::vector<RatFunc> comps;
  for (const auto& c : psi.components()) comps.push_back(conjugate(c, base, root));
  return Parametrization(cls.relative_field, std::move(comps));
}

bool same_parametrization(const Parametrization& a, const Parametrization& b) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  for (std::size_t i = 0; i < a.ambient_dim(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

std::string to_string(const NFPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const NFElement& c = p[i];
    if (c.is_zero()) continue;
    const std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (c.is_rational()) {
      Rational q = c.to_rational();
      const bool neg = sgn(q) < 0;
      if (neg) q = -q;
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      if (i == 0) {
        os << to_string(q);
      } else {
        if (q != 1) os << to_string(q) << "*";
        os << mono;
      }
    } else {
      os << (first ? "" : " + ") << "(" << to_string(c) << ")";
      if (i > 0) os << "*" << mono;
    }
    first = false;
  }
  return os.str();
}

std::string to_string(const RatFunc& f, const std::string& var) {
  if (f.is_polynomial() && f.den().lc().is_one()) return to_string(f.num(), var);
  return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

std::string to_string(const MoebiusTransform& u, const std::string& var) { return to_string(u.as_ratfunc(), var); }

}  // namespace hcircle
