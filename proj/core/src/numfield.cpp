#include "hcircle/numfield.hpp"

#include <algorithm>
#include <sstream>

#include "hcircle/error.hpp"
#include "modular.hpp"

namespace hcircle {

int absolute_degree(const FieldRef& field) { return field ? field->absolute_degree() : 1; }

bool is_subfield(const FieldRef& sub, const FieldRef& field) {
  if (!sub) return true;
  for (FieldRef f = field; f; f = f->base())
    if (f == sub) return true;
  return false;
}

namespace {

FieldRef common_field(const FieldRef& a, const FieldRef& b) {
  if (a == b) return a;
  if (is_subfield(a, b)) return b;
  if (is_subfield(b, a)) return a;
  throw ArithmeticError("elements belong to unrelated fields");
}

bool all_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

// Flat coordinates of x inside `target`, which must contain x's field.
std::vector<Rational> flat_in(const NFElement& x, const FieldRef& target) {
  std::vector<Rational> out(x.flat().begin(), x.flat().end());
  out.resize(static_cast<std::size_t>(absolute_degree(target)));
  return out;
}

}  // namespace

// Multiplication of flattened elements of F (or of Q when F is null).
void mul_flat(const NumberField* F, std::span<const Rational> a, std::span<const Rational> b,
              std::span<Rational> out) {
  if (F == nullptr) {
    out[0] = a[0] * b[0];
    return;
  }
  const NumberField* B = F->base_.get();
  const std::size_t m = static_cast<std::size_t>(F->base_abs_degree_);
  const std::size_t n = static_cast<std::size_t>(F->degree_);
  std::vector<Rational> prod((2 * n - 1) * m);
  std::vector<Rational> tmp(m);
  std::vector<bool> b_zero(n);
  for (std::size_t j = 0; j < n; ++j) b_zero[j] = all_zero(b.subspan(j * m, m));

  for (std::size_t i = 0; i < n; ++i) {
    auto ai = a.subspan(i * m, m);
    if (all_zero(ai)) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b_zero[j]) continue;
      auto bj = b.subspan(j * m, m);
      Rational* dst = prod.data() + (i + j) * m;
      if (m == 1) {
        dst[0] += ai[0] * bj[0];
        continue;
      }
      mul_flat(B, ai, bj, tmp);
      for (std::size_t k = 0; k < m; ++k) dst[k] += tmp[k];
    }
  }
  // Reduce g^k for k >= n with g^n = -sum c_i g^i.
  for (std::size_t k = 2 * n - 2; k >= n; --k) {
    std::span<Rational> top(prod.data() + k * m, m);
    if (all_zero(top)) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& c = F->minpoly_flat_[i];
      if (F->minpoly_rational_[i]) {
        if (sgn(c[0]) == 0) continue;
        Rational* dst = prod.data() + (k - n + i) * m;
        for (std::size_t r = 0; r < m; ++r)
          if (sgn(top[r]) != 0) dst[r] -= top[r] * c[0];
        continue;
      }
      mul_flat(B, top, c, tmp);
      Rational* dst = prod.data() + (k - n + i) * m;
      for (std::size_t r = 0; r < m; ++r) dst[r] -= tmp[r];
    }
  }
  std::copy(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(n * m), out.begin());
}

// ---------------------------------------------------------------------------
// NFElement

NFElement::NFElement(FieldRef field, std::vector<Rational> flat)
    : field_(std::move(field)), flat_(std::move(flat)) {
  if (static_cast<int>(flat_.size()) != absolute_degree(field_))
    throw ArithmeticError("coordinate vector length does not match the field degree");
}

NFElement NFElement::from_base_coords(const FieldRef& field, std::span<const NFElement> coeffs) {
  if (!field) {
    if (coeffs.size() > 1) throw ArithmeticError("too many coordinates for the rationals");
    return coeffs.empty() ? NFElement() : coeffs[0];
  }
  const int n = field->degree();
  if (static_cast<int>(coeffs.size()) > n) {
    NFElement acc = field->zero();
    const NFElement g = field->generator();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * g + *it;
    return acc;
  }
  const std::size_t m = static_cast<std::size_t>(field->base_absolute_degree());
  std::vector<Rational> flat(static_cast<std::size_t>(field->absolute_degree()));
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (!is_subfield(coeffs[j].field(), field->base()))
      throw ArithmeticError("coordinate does not lie in the base field");
    auto src = coeffs[j].flat();
    std::copy(src.begin(), src.end(), flat.begin() + static_cast<std::ptrdiff_t>(j * m));
  }
  return NFElement(field, std::move(flat));
}

NFElement NFElement::coord(int j) const {
  if (!field_) return j == 0 ? *this : NFElement();
  const std::size_t m = static_cast<std::size_t>(field_->base_absolute_degree());
  if (j < 0 || j >= field_->degree()) return field_zero(field_->base());
  auto begin = flat_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(j) * m);
  return NFElement(field_->base(), std::vector<Rational>(begin, begin + static_cast<std::ptrdiff_t>(m)));
}

int NFElement::coord_count() const { return field_ ? field_->degree() : 1; }

bool NFElement::is_zero() const { return all_zero(flat_); }

bool NFElement::is_one() const {
  return flat_[0] == 1 && all_zero(std::span<const Rational>(flat_).subspan(1));
}

bool NFElement::is_rational() const { return all_zero(std::span<const Rational>(flat_).subspan(1)); }

Rational NFElement::to_rational() const {
  if (!is_rational()) throw ArithmeticError("element is not rational");
  return flat_[0];
}

bool NFElement::in_base() const {
  if (!field_) return true;
  const std::size_t m = static_cast<std::size_t>(field_->base_absolute_degree());
  return all_zero(std::span<const Rational>(flat_).subspan(m));
}

NFElement NFElement::restrict_to(const FieldRef& sub) const {
  if (!is_subfield(sub, field_)) throw ArithmeticError("restriction target is not a subfield");
  const std::size_t m = static_cast<std::size_t>(absolute_degree(sub));
  if (!all_zero(std::span<const Rational>(flat_).subspan(m)))
    throw ArithmeticError("element does not lie in the requested subfield");
  return NFElement(sub, std::vector<Rational>(flat_.begin(), flat_.begin() + static_cast<std::ptrdiff_t>(m)));
}

NFElement NFElement::embed_into(const FieldRef& super) const {
  if (super == field_) return *this;
  if (!is_subfield(field_, super)) throw ArithmeticError("embedding target does not contain the element");
  return NFElement(super, flat_in(*this, super));
}

NFElement NFElement::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero element");
  if (!field_) return NFElement(Rational(1) / flat_[0]);
  if (field_->degree() == 1) return NFElement::from_base_coords(field_, std::vector{coord(0).inverse()});
  if (field_->absolute_degree() >= 3) return modular::inverse(*this);
  std::vector<NFElement> cs;
  cs.reserve(static_cast<std::size_t>(field_->degree()));
  for (int j = 0; j < field_->degree(); ++j) cs.push_back(coord(j));
  NFPoly rep(std::move(cs), field_zero(field_->base()));
  auto eg = extended_gcd(rep, field_->minpoly());
  if (eg.gcd.degree() != 0) throw ArithmeticError("element is not invertible (minimal polynomial is reducible)");
  return NFElement::from_base_coords(field_, eg.s.coeffs());
}

NFElement operator+(const NFElement& a, const NFElement& b) {
  if (a.field_ == b.field_) {
    NFElement r = a;
    for (std::size_t i = 0; i < r.flat_.size(); ++i) r.flat_[i] += b.flat_[i];
    return r;
  }
  FieldRef f = common_field(a.field_, b.field_);
  NFElement r(f, flat_in(a, f));
  for (std::size_t i = 0; i < b.flat_.size(); ++i) r.flat_[i] += b.flat_[i];
  return r;
}

NFElement operator-(const NFElement& a, const NFElement& b) {
  if (a.field_ == b.field_) {
    NFElement r = a;
    for (std::size_t i = 0; i < r.flat_.size(); ++i) r.flat_[i] -= b.flat_[i];
    return r;
  }
  FieldRef f = common_field(a.field_, b.field_);
  NFElement r(f, flat_in(a, f));
  for (std::size_t i = 0; i < b.flat_.size(); ++i) r.flat_[i] -= b.flat_[i];
  return r;
}

NFElement operator-(const NFElement& a) {
  NFElement r = a;
  for (auto& q : r.flat_) q = -q;
  return r;
}

NFElement operator*(const NFElement& a, const Rational& q) {
  NFElement r = a;
  for (auto& c : r.flat_) c *= q;
  return r;
}

NFElement operator*(const NFElement& a, const NFElement& b) {
  if (a.field_ != b.field_) {
    // Scaling by an element of a subfield is cheaper when it is rational.
    if (b.is_rational() && is_subfield(b.field_, a.field_)) return a * b.flat_[0];
    if (a.is_rational() && is_subfield(a.field_, b.field_)) return b * a.flat_[0];
    FieldRef f = common_field(a.field_, b.field_);
    return a.embed_into(f) * b.embed_into(f);
  }
  if (!a.field_) return NFElement(Rational(a.flat_[0] * b.flat_[0]));
  std::vector<Rational> out(a.flat_.size());
  mul_flat(a.field_.get(), a.flat_, b.flat_, out);
  return NFElement(a.field_, std::move(out));
}

NFElement operator/(const NFElement& a, const NFElement& b) {
  if (b.is_rational() && is_subfield(b.field_, a.field_)) {
    if (sgn(b.flat_[0]) == 0) throw ArithmeticError("division by zero element");
    return a * Rational(1 / b.flat_[0]);
  }
  return a * b.inverse();
}

bool operator==(const NFElement& a, const NFElement& b) {
  if (a.field_ == b.field_) return a.flat_ == b.flat_;
  FieldRef f = common_field(a.field_, b.field_);
  return flat_in(a, f) == flat_in(b, f);
}

template <>
NFPoly gcd<NFElement>(NFPoly a, NFPoly b) {
  return modular::gcd(a, b);
}

NFElement zero_of(const NFElement& x) { return field_zero(x.field()); }
NFElement one_of(const NFElement& x) { return field_one(x.field()); }

std::string to_string(const NFElement& x) {
  if (!x.field()) return to_string(x.flat()[0]);
  const FieldRef& f = x.field();
  std::ostringstream os;
  bool first = true;
  for (int j = f->degree() - 1; j >= 0; --j) {
    NFElement c = x.coord(j);
    if (c.is_zero()) continue;
    std::string power = j == 0 ? "" : (j == 1 ? f->generator_name() : f->generator_name() + "^" + std::to_string(j));
    if (c.is_rational()) {
      Rational q = c.to_rational();
      const bool neg = sgn(q) < 0;
      if (neg) q = -q;
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      if (j == 0) {
        os << to_string(q);
      } else {
        if (q != 1) os << to_string(q) << "*";
        os << power;
      }
    } else {
      os << (first ? "" : " + ") << "(" << to_string(c) << ")";
      if (j > 0) os << "*" << power;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------
// NumberField

FieldRef NumberField::make(FieldRef base, const NFPoly& minpoly, std::string generator_name) {
  if (minpoly.degree() < 1) throw InputError("minimal polynomial must have degree >= 1");
  std::shared_ptr<NumberField> f(new NumberField());
  f->base_ = std::move(base);
  f->name_ = std::move(generator_name);
  f->degree_ = minpoly.degree();
  f->base_abs_degree_ = hcircle::absolute_degree(f->base_);
  f->abs_degree_ = f->degree_ * f->base_abs_degree_;
  const NFPoly monic = minpoly.monic();
  std::vector<NFElement> coeffs;
  for (int i = 0; i <= monic.degree(); ++i) {
    if (!is_subfield(monic[i].field(), f->base_))
      throw ArithmeticError("minimal polynomial coefficients must lie in the base field");
    coeffs.push_back(monic[i].embed_into(f->base_));
  }
  f->minpoly_ = NFPoly(coeffs, field_zero(f->base_));
  for (const auto& c : coeffs) {
    f->minpoly_flat_.emplace_back(c.flat().begin(), c.flat().end());
    f->minpoly_rational_.push_back(c.is_rational());
  }
  f->newton_ = hcircle::newton_sums(f->minpoly_, f->degree_ - 1);
  return f;
}

FieldRef NumberField::make_over_rationals(const UniPoly<Rational>& minpoly, std::string generator_name) {
  return make(nullptr, lift_poly(minpoly, nullptr), std::move(generator_name));
}

int NumberField::height() const { return base_ ? base_->height() + 1 : 1; }

NFElement NumberField::zero() const {
  return NFElement(self(), std::vector<Rational>(static_cast<std::size_t>(abs_degree_)));
}

NFElement NumberField::one() const { return from_rational(1); }

NFElement NumberField::from_rational(const Rational& q) const {
  std::vector<Rational> flat(static_cast<std::size_t>(abs_degree_));
  flat[0] = q;
  return NFElement(self(), std::move(flat));
}

NFElement NumberField::generator() const {
  if (degree_ == 1) return NFElement::from_base_coords(self(), std::vector{-minpoly_[0]});
  std::vector<Rational> flat(static_cast<std::size_t>(abs_degree_));
  flat[static_cast<std::size_t>(base_abs_degree_)] = 1;
  return NFElement(self(), std::move(flat));
}

NFElement field_zero(const FieldRef& field) { return field ? field->zero() : NFElement(); }
NFElement field_one(const FieldRef& field) { return field ? field->one() : NFElement(1L); }
NFPoly zero_poly(const FieldRef& field) { return NFPoly(field_zero(field)); }
NFPoly x_poly(const FieldRef& field) { return NFPoly({field_zero(field), field_one(field)}, field_zero(field)); }

NFPoly lift_poly(const UniPoly<Rational>& p, const FieldRef& field) {
  const NFElement one = field_one(field);
  return p.map([&](const Rational& q) { return one * q; }, field_zero(field));
}

NFPoly embed_poly(const NFPoly& p, const FieldRef& field) {
  return p.map([&](const NFElement& c) { return c.embed_into(field); }, field_zero(field));
}

UniPoly<Rational> to_rational_poly(const NFPoly& p) {
  return p.map([](const NFElement& c) { return c.to_rational(); }, Rational(0));
}

// ---------------------------------------------------------------------------
// Trace, norm, characteristic polynomial

NFElement trace(const NFElement& x) {
  const FieldRef& f = x.field();
  if (!f) return x;
  auto s = f->newton_sums();
  NFElement acc = field_zero(f->base());
  for (int j = 0; j < f->degree(); ++j) {
    NFElement c = x.coord(j);
    if (!c.is_zero()) acc = acc + c * s[static_cast<std::size_t>(j)];
  }
  return acc;
}

NFElement norm(const NFElement& x) {
  const FieldRef& f = x.field();
  if (!f) return x;
  std::vector<NFElement> cs;
  for (int j = 0; j < f->degree(); ++j) cs.push_back(x.coord(j));
  NFPoly rep(std::move(cs), field_zero(f->base()));
  if (rep.is_zero()) return field_zero(f->base());
  return resultant(f->minpoly(), rep);
}

std::vector<std::vector<NFElement>> multiplication_matrix(const NFElement& x) {
  const FieldRef& f = x.field();
  const int n = x.coord_count();
  std::vector<std::vector<NFElement>> mat(static_cast<std::size_t>(n),
                                          std::vector<NFElement>(static_cast<std::size_t>(n)));
  if (!f) {
    mat[0][0] = x;
    return mat;
  }
  NFElement col = x;
  const NFElement g = f->generator();
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col.coord(i);
    col = col * g;
  }
  return mat;
}

NFPoly charpoly(const NFElement& x) {
  const FieldRef base = x.field() ? x.field()->base() : nullptr;
  auto mat = multiplication_matrix(x);
  const std::size_t n = mat.size();
  // Fraction-free (Bareiss) elimination on tI - M over base[t]. Each leading
  // principal minor of tI - M is monic, so no pivoting is needed.
  std::vector<std::vector<NFPoly>> a(n, std::vector<NFPoly>(n, zero_poly(base)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      NFPoly e = NFPoly::constant(-mat[i][j].embed_into(base));
      if (i == j) e += x_poly(base);
      a[i][j] = std::move(e);
    }
  NFPoly prev = NFPoly::constant(field_one(base));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
    prev = a[k][k];
  }
  return a[n - 1][n - 1];
}

NFElement substitute_generator(const NFElement& x, const FieldRef& field, const NFElement& image) {
  if (!field) return x.embed_into(image.field());
  if (!is_subfield(field->base(), image.field()))
    throw ArithmeticError("substitution image does not contain the base field");
  const NFElement xe = x.embed_into(field);
  NFElement acc = field_zero(image.field());
  for (int j = field->degree() - 1; j >= 0; --j) acc = acc * image + xe.coord(j);
  return acc;
}

ConjugacyClass make_conjugacy_class(const NFPoly& factor, const std::string& root_name) {
  const FieldRef base = factor.zero().field();
  ConjugacyClass cls;
  cls.factor = factor.monic();
  cls.relative_field = NumberField::make(base, cls.factor, root_name);
  cls.class_size = factor.degree();
  return cls;
}

NFElement conjugate(const NFElement& x, const ConjugacyClass& cls) {
  return substitute_generator(x, cls.relative_field->base(), cls.root());
}

NFPoly conjugate(const NFPoly& p, const FieldRef& field, const NFElement& root) {
  return p.map([&](const NFElement& c) { return substitute_generator(c, field, root); },
               field_zero(root.field()));
}

}  // namespace hcircle
