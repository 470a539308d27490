#include "hcircle/minfield.hpp"

#include "hcircle/error.hpp"
#include "hcircle/factor.hpp"

namespace hcircle {

namespace {

NFElement unit_element(const FieldRef& field, std::size_t k) {
  std::vector<Rational> flat(static_cast<std::size_t>(absolute_degree(field)));
  flat[k] = 1;
  return NFElement(field, std::move(flat));
}

// Degree of the minimal polynomial of x over Q together with that polynomial.
UniPoly<Rational> absolute_minpoly(const NFElement& x) {
  if (x.field() && x.field()->base()) throw InputError("minimum field needs K(a) to be a simple extension of Q");
  return squarefree_part(to_rational_poly(charpoly(x)));
}

// Coefficient vectors with entries >= 0 summing to `weight`, in lexicographic order.
void compositions(std::size_t len, int weight, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (cur.size() + 1 == len) {
    cur.push_back(weight);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int c = weight; c >= 0; --c) {
    cur.push_back(c);
    compositions(len, weight - c, cur, out);
    cur.pop_back();
  }
}

}  // namespace

bool FixedField::contains(const NFElement& x) const {
  const std::size_t n = static_cast<std::size_t>(absolute_degree(field));
  Matrix<Rational> a(n, std::vector<Rational>(basis.size() + 1));
  const NFElement xe = x.embed_into(field);
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) a[i][j] = basis[j].flat()[i];
  for (std::size_t i = 0; i < n; ++i) a[i][basis.size()] = xe.flat()[i];
  return rref(a, basis.size() + 1).size() == basis.size();
}

Matrix<Rational> invariance_system(const ConjugacyClass& cls) {
  const FieldRef e = cls.relative_field->base();
  const FieldRef ei = cls.relative_field;
  const std::size_t n = static_cast<std::size_t>(absolute_degree(e));
  const std::size_t rows = static_cast<std::size_t>(absolute_degree(ei));
  Matrix<Rational> sys(rows, std::vector<Rational>(n));
  for (std::size_t k = 0; k < n; ++k) {
    const NFElement ek = unit_element(e, k);
    const NFElement diff = conjugate(ek, cls) - ek.embed_into(ei);
    for (std::size_t r = 0; r < rows; ++r) sys[r][k] = diff.flat()[r];
  }
  return sys;
}

FixedField minimum_field(const std::vector<ConjugacyClass>& fixing_classes) {
  if (fixing_classes.empty()) throw InputError("minimum field needs at least the identity class");
  FixedField out;
  out.field = fixing_classes.front().relative_field->base();
  const std::size_t n = static_cast<std::size_t>(absolute_degree(out.field));

  Matrix<Rational> stacked;
  for (const auto& cls : fixing_classes) {
    if (cls.relative_field->base() != out.field) throw InputError("classes belong to different fields");
    for (auto& row : invariance_system(cls)) stacked.push_back(std::move(row));
  }
  for (auto& v : nullspace(stacked, n, Rational(0))) out.basis.emplace_back(out.field, std::move(v));

  const std::size_t dim = out.basis.size();
  if (dim == 0 || n % dim != 0) throw InvariantViolation("fixed space dimension does not divide the degree");
  out.relative_degree = static_cast<int>(n / dim);

  auto try_candidate = [&](const NFElement& gamma) {
    UniPoly<Rational> mp = absolute_minpoly(gamma);
    if (static_cast<std::size_t>(mp.degree()) != dim) return false;
    out.primitive = gamma;
    out.primitive_minpoly = mp;
    return true;
  };

  bool found = false;
  for (const auto& b : out.basis)
    if ((found = try_candidate(b))) break;
  for (int weight = 2; !found; ++weight) {
    std::vector<std::vector<int>> combos;
    std::vector<int> cur;
    compositions(dim, weight, cur, combos);
    for (const auto& c : combos) {
      NFElement gamma = field_zero(out.field);
      for (std::size_t j = 0; j < dim; ++j)
        if (c[j] != 0) gamma = gamma + out.basis[j] * Rational(c[j]);
      if ((found = try_candidate(gamma))) break;
    }
  }
  if (!is_irreducible(out.primitive_minpoly)) throw InvariantViolation("primitive minimal polynomial is reducible");
  return out;
}

FixedField minimum_field(const HypercircleResult& result) { return minimum_field(result.fixing_classes()); }

RelativeView view_over_subfield(const Parametrization& psi, const FixedField& l) {
  const FieldRef e = l.field;
  if (!e || e->base()) throw InputError("relative view needs K(a) over Q");
  RelativeView view;
  view.subfield = NumberField::make_over_rationals(l.primitive_minpoly, "g");
  const NFElement alpha = e->generator();

  // mu: the factor of M over L vanishing at a once L is placed inside K(a) by g -> gamma.
  const NFPoly big_m = lift_poly(to_rational_poly(e->minpoly()), view.subfield);
  std::optional<NFPoly> mu;
  for (const auto& [f, mult] : factor_over_nf(big_m, view.subfield)) {
    NFElement value = field_zero(e);
    for (int j = f.degree(); j >= 0; --j)
      value = value * alpha + substitute_generator(f[j], view.subfield, l.primitive);
    if (value.is_zero()) {
      mu = f;
      break;
    }
  }
  if (!mu) throw InvariantViolation("no factor of the minimal polynomial vanishes at the generator");
  view.extension = NumberField::make(view.subfield, *mu, e->generator_name());

  const NFElement y = view.extension->generator();
  auto transport = [&](const NFPoly& p) {
    return p.map([&](const NFElement& c) { return substitute_generator(c, e, y); }, view.extension->zero());
  };
  std::vector<RatFunc> comps;
  for (const auto& c : psi.components()) comps.emplace_back(transport(c.num()), transport(c.den()));
  view.psi = Parametrization(view.extension, std::move(comps));
  return view;
}

}  // namespace hcircle
