#include "hcircle/instance.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "hcircle/error.hpp"
#include "hcircle/factor.hpp"
#include "hcircle/hypercircle.hpp"
#include "hcircle/linalg.hpp"

namespace hcircle {

using json = nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw InputError(where + ": missing field '" + key + "'");
  return obj.at(key);
}

Rational rational_at(const json& v, const std::string& where) {
  if (!v.is_string()) throw InputError(where + ": rationals must be strings");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

FieldSpec field_from_json(const json& f) {
  FieldSpec spec;
  const json& gen = member(f, "generator", "field");
  if (!gen.is_string() || gen.get<std::string>().empty()) throw InputError("field.generator: expected a name");
  spec.generator = gen.get<std::string>();
  const json& mp = member(f, "minpoly", "field");
  if (!mp.is_array()) throw InputError("field.minpoly: expected an array");
  std::vector<Rational> c;
  for (std::size_t i = 0; i < mp.size(); ++i) c.push_back(rational_at(mp[i], "field.minpoly[" + std::to_string(i) + "]"));
  UniPoly<Rational> m(c, Rational(0));
  if (m.degree() < 1) throw InputError("field.minpoly: degree must be at least 1");
  spec.minpoly = m.monic();
  return spec;
}

NFPoly poly_from_json(const json& v, const FieldRef& field, const std::string& where) {
  if (!v.is_array()) throw InputError(where + ": expected an array of coefficient vectors");
  const std::size_t n = static_cast<std::size_t>(absolute_degree(field));
  std::vector<NFElement> coeffs;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const std::string at = where + "[" + std::to_string(k) + "]";
    if (!v[k].is_array()) throw InputError(at + ": expected a coefficient vector");
    if (v[k].size() != n)
      throw InputError(at + ": coefficient vector has length " + std::to_string(v[k].size()) + ", expected " +
                       std::to_string(n));
    std::vector<Rational> flat;
    for (std::size_t i = 0; i < n; ++i) flat.push_back(rational_at(v[k][i], at + "[" + std::to_string(i) + "]"));
    coeffs.emplace_back(field, std::move(flat));
  }
  return NFPoly(coeffs, field->zero());
}

json field_to_json(const std::string& generator, const UniPoly<Rational>& minpoly) {
  json mp = json::array();
  for (const auto& c : minpoly.coeffs()) mp.push_back(to_string(c));
  return {{"generator", generator}, {"minpoly", mp}};
}

json poly_to_json(const NFPoly& p, std::size_t n) {
  json out = json::array();
  for (int k = 0; k <= p.degree(); ++k) {
    json vec = json::array();
    for (std::size_t i = 0; i < n; ++i) vec.push_back(to_string(p[k].flat()[i]));
    out.push_back(vec);
  }
  return out;
}

int small_int(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

UniPoly<Rational> random_rational_poly(int degree, std::mt19937_64& rng) {
  std::vector<Rational> c(static_cast<std::size_t>(degree + 1));
  for (auto& x : c) x = small_int(rng, -9, 9);
  while (sgn(c.back()) == 0) c.back() = small_int(rng, -9, 9);
  return UniPoly<Rational>(c, Rational(0));
}

NFElement random_element(const FieldRef& field, std::mt19937_64& rng) {
  std::vector<Rational> flat(static_cast<std::size_t>(absolute_degree(field)));
  for (auto& x : flat) x = small_int(rng, -3, 3);
  return NFElement(field, std::move(flat));
}

NFPoly eval_fiber(const NFPoly& p, const NFPoly& q, const NFElement& s) {
  return p * q(s) - q * p(s);
}

// t -> (p_j / q) is generically injective when the fibre polynomial through a
// random point has degree 1.
bool looks_proper(const std::vector<NFPoly>& nums, const NFPoly& q) {
  for (int s = 2; s < 8; ++s) {
    const NFElement s0 = field_one(q.zero().field()) * Rational(s);
    if (q(s0).is_zero()) continue;
    NFPoly g = zero_poly(q.zero().field());
    for (const auto& p : nums) g = gcd(g, eval_fiber(p, q, s0));
    if (g.degree() == 1) return true;
  }
  return false;
}

MoebiusTransform random_moebius(const FieldRef& field, std::mt19937_64& rng) {
  for (;;) {
    MoebiusTransform u{random_element(field, rng), random_element(field, rng), random_element(field, rng),
                       random_element(field, rng)};
    if (!u.c.is_zero() && !u.determinant().is_zero()) return u;
  }
}

GeneratedInstance gen_random(const GenOptions& opts, const FieldSpec& spec, std::mt19937_64& rng) {
  const FieldRef e = make_number_field(spec.minpoly, spec.generator);
  const int d = opts.degree;
  GeneratedInstance out;
  for (out.attempts = 1; out.attempts <= opts.max_attempts; ++out.attempts) {
    const UniPoly<Rational> q = random_rational_poly(d, rng);
    std::vector<NFPoly> nums;
    for (int j = 0; j < 2; ++j) nums.push_back(lift_poly(random_rational_poly(small_int(rng, 1, d), rng), e));
    if (opts.kind == InstanceKind::Twisted) {
      const int k = small_int(rng, 0, d);
      nums[0] = nums[0] + NFPoly::monomial(e->generator(), k);
    }
    const NFPoly qe = lift_poly(q, e);
    bool coprime = true;
    for (const auto& p : nums) coprime = coprime && gcd(p, qe).degree() == 0;
    if (!coprime || !looks_proper(nums, qe)) continue;

    const MoebiusTransform u = random_moebius(e, rng);
    std::vector<RatFunc> comps;
    for (const auto& p : nums) comps.push_back(rf_compose_moebius(RatFunc(p, qe), u));
    Instance inst = make_instance(spec, comps);
    if (opts.kind == InstanceKind::Twisted) {
      try {
        if (standard_parametrization(inst.psi).defined) continue;
      } catch (const BudgetExhausted&) {
        continue;
      }
    }
    out.instance = std::move(inst);
    return out;
  }
  throw InputError("generator retry budget exceeded");
}

// Roots of M in K(a) other than a, ordered by the least k >= 2 with a^k equal to the root.
std::vector<NFElement> ordered_conjugates(const FieldRef& e) {
  const NFElement alpha = e->generator();
  std::vector<NFElement> roots;
  for (const auto& [f, mult] : factor_over_nf(lift_poly(to_rational_poly(e->minpoly()), e), e)) {
    if (f.degree() != 1) continue;
    NFElement r = -f[0] / f[1];
    if (!(r == alpha)) roots.push_back(r);
  }
  const int n = absolute_degree(e);
  if (static_cast<int>(roots.size()) != n - 1)
    throw InputError("adversarial instances need a normal extension");
  std::vector<std::pair<int, NFElement>> keyed;
  for (const auto& r : roots) {
    int key = 1 << 20;
    NFElement p = alpha;
    for (int k = 2; k <= 4 * n; ++k) {
      p = p * alpha;
      if (p == r) {
        key = k;
        break;
      }
    }
    keyed.emplace_back(key, r);
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<NFElement> out;
  for (auto& [k, r] : keyed) out.push_back(r);
  return out;
}

GeneratedInstance gen_adversarial(const GenOptions& opts, const FieldSpec& spec) {
  const FieldRef e = make_number_field(spec.minpoly, spec.generator);
  const int n = absolute_degree(e);
  const int d = opts.degree;
  if (d <= n - 1) throw InputError("adversarial instances need degree > n - 1");
  const std::vector<NFElement> conj = ordered_conjugates(e);
  const NFElement alpha = e->generator();

  // g = (t + 1) ... (t + d)
  UniPoly<Rational> g = UniPoly<Rational>::constant(Rational(1));
  for (int i = 1; i <= d; ++i) g = g * UniPoly<Rational>::linear_root(Rational(-i));

  // Conditions f(i) = sigma_i(a), i = 1..n-1, as sum_k a_k i^k = sigma_i(a) g(i) - a i^d.
  // Unknowns a_0..a_{n-2} are solved for; a_{n-1}..a_{d-1} stay free.
  const std::size_t piv = static_cast<std::size_t>(n - 1);
  const std::size_t nfree = static_cast<std::size_t>(d - n + 1);
  const std::size_t n_abs = static_cast<std::size_t>(n);
  Matrix<Rational> a(piv, std::vector<Rational>(piv + nfree + n_abs));
  for (std::size_t r = 0; r < piv; ++r) {
    const Rational i(static_cast<long>(r + 1));
    Rational pw = 1;
    std::vector<Rational> powers;
    for (int k = 0; k <= d; ++k) {
      powers.push_back(pw);
      pw *= i;
    }
    for (std::size_t k = 0; k < piv; ++k) a[r][k] = powers[k];
    for (std::size_t f = 0; f < nfree; ++f) a[r][piv + f] = -powers[piv + f];
    const NFElement rhs = conj[r] * g(i) - alpha * powers[static_cast<std::size_t>(d)];
    for (std::size_t c = 0; c < n_abs; ++c) a[r][piv + nfree + c] = rhs.flat()[c];
  }
  const auto pivots = rref(a, a.front().size());
  if (pivots.size() != piv || (piv > 0 && pivots.back() != piv - 1))
    throw InvariantViolation("interpolation conditions are singular");

  GeneratedInstance out;
  out.attempts = 1;
  for (std::size_t k = 0; k < piv; ++k) {
    LinearRelation rel;
    rel.index = static_cast<int>(k);
    for (std::size_t f = 0; f < nfree; ++f) {
      rel.free.push_back(static_cast<int>(piv + f));
      rel.coeffs.push_back(a[k][piv + f]);
    }
    std::vector<Rational> flat(a[k].begin() + static_cast<long>(piv + nfree), a[k].end());
    rel.constant = NFElement(e, std::move(flat));
    out.relations.push_back(std::move(rel));
  }

  // Two solutions: every free unknown set to 0, then to 1.
  const NFPoly ge = lift_poly(g, e);
  std::vector<RatFunc> comps;
  for (int value = 0; value <= 1; ++value) {
    std::vector<NFElement> c(static_cast<std::size_t>(d + 1), field_zero(e));
    c[static_cast<std::size_t>(d)] = alpha;
    for (std::size_t f = 0; f < nfree; ++f) c[piv + f] = field_one(e) * Rational(value);
    for (const auto& rel : out.relations) {
      NFElement v = rel.constant;
      for (std::size_t f = 0; f < nfree; ++f) v = v + field_one(e) * (rel.coeffs[f] * value);
      c[static_cast<std::size_t>(rel.index)] = v;
    }
    comps.emplace_back(NFPoly(c, e->zero()), ge);
  }
  out.instance = make_instance(spec, comps);
  return out;
}

}  // namespace

Instance make_instance(const FieldSpec& spec, const std::vector<RatFunc>& components) {
  Instance inst;
  inst.generator = spec.generator;
  inst.minpoly = spec.minpoly.monic();
  inst.field = components.empty() ? make_number_field(inst.minpoly, inst.generator) : components.front().field();
  if (!inst.field || to_rational_poly(inst.field->minpoly()) != inst.minpoly)
    inst.field = make_number_field(inst.minpoly, inst.generator);
  inst.psi = Parametrization(inst.field, components);
  return inst;
}

Instance parse_instance(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw InputError("instance: expected a JSON object");
  Instance inst;
  FieldSpec spec = field_from_json(member(doc, "field", "instance"));
  inst.generator = spec.generator;
  inst.minpoly = spec.minpoly;
  inst.field = make_number_field(inst.minpoly, inst.generator);

  const json& par = member(doc, "parametrization", "instance");
  if (!par.is_array() || par.empty()) throw InputError("parametrization: expected a non-empty array");
  std::vector<RatFunc> comps;
  for (std::size_t j = 0; j < par.size(); ++j) {
    const std::string where = "parametrization[" + std::to_string(j) + "]";
    NFPoly num = poly_from_json(member(par[j], "num", where), inst.field, where + ".num");
    NFPoly den = poly_from_json(member(par[j], "den", where), inst.field, where + ".den");
    if (den.is_zero()) throw InputError(where + ".den: zero denominator polynomial");
    comps.emplace_back(num, den);
  }
  inst.psi = Parametrization(inst.field, std::move(comps));
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  const std::size_t n = static_cast<std::size_t>(inst.extension_degree());
  json par = json::array();
  for (const auto& c : inst.psi.components())
    par.push_back({{"num", poly_to_json(c.num(), n)}, {"den", poly_to_json(c.den(), n)}});
  json doc = {{"field", field_to_json(inst.generator, inst.minpoly)}, {"parametrization", par}};
  return doc.dump(2) + "\n";
}

Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << serialize_instance(inst);
}

FieldSpec parse_field_spec(const std::string& text) {
  const json doc = parse_json(text);
  FieldSpec spec = field_from_json(doc.is_object() && doc.contains("field") ? doc.at("field") : doc);
  if (!is_irreducible(spec.minpoly)) throw InputError("reducible minimal polynomial");
  return spec;
}

FieldSpec load_field_spec(const std::string& path) { return parse_field_spec(read_file(path)); }

std::string to_string(InstanceKind k) {
  switch (k) {
    case InstanceKind::Defined: return "defined";
    case InstanceKind::Twisted: return "twisted";
    case InstanceKind::Adversarial: return "adversarial";
  }
  return "?";
}

InstanceKind parse_instance_kind(const std::string& s) {
  if (s == "defined") return InstanceKind::Defined;
  if (s == "twisted") return InstanceKind::Twisted;
  if (s == "adversarial") return InstanceKind::Adversarial;
  throw InputError("unknown instance kind '" + s + "'");
}

std::string to_string(const LinearRelation& r) {
  std::ostringstream os;
  os << "a" << r.index << " =";
  bool first = true;
  for (std::size_t f = 0; f < r.free.size(); ++f) {
    if (sgn(r.coeffs[f]) == 0) continue;
    os << (first ? " " : " + ") << to_string(r.coeffs[f]) << "*a" << r.free[f];
    first = false;
  }
  os << (first ? " " : " + ") << "(" << to_string(r.constant) << ")";
  return os.str();
}

UniPoly<Rational> random_minpoly(int n, std::mt19937_64& rng) {
  if (n < 1) throw InputError("extension degree must be at least 1");
  for (;;) {
    std::vector<Rational> c(static_cast<std::size_t>(n + 1));
    for (auto& x : c) x = small_int(rng, -5, 5);
    c.back() = 1;
    if (sgn(c.front()) == 0) continue;
    UniPoly<Rational> m(c, Rational(0));
    if (is_irreducible(m)) return m;
  }
}

GeneratedInstance gen_instance(const GenOptions& opts) {
  if (opts.degree < 2) throw InputError("degree must be at least 2");
  std::mt19937_64 rng(opts.seed);
  FieldSpec spec;
  if (opts.field) {
    spec = *opts.field;
  } else {
    if (opts.ext_degree < 2) throw InputError("extension degree must be at least 2");
    spec.minpoly = random_minpoly(opts.ext_degree, rng);
  }
  if (spec.minpoly.degree() < 2) throw InputError("extension degree must be at least 2");
  if (opts.kind == InstanceKind::Adversarial) return gen_adversarial(opts, spec);
  return gen_random(opts, spec, rng);
}

}  // namespace hcircle
