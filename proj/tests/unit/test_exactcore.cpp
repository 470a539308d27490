#include <gtest/gtest.h>

#include "hcircle/error.hpp"
#include "hcircle/linalg.hpp"
#include "hcircle/unipoly.hpp"
#include "support.hpp"

using namespace hcircle;
using namespace hcircle::testing;

namespace {

// Determinant by fraction-free row reduction over Q; independent of the Euclidean code.
Rational det(Matrix<Rational> a) {
  const std::size_t n = a.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

Rational sylvester_resultant(const QPoly& f, const QPoly& g) {
  const int m = f.degree(), n = g.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  Matrix<Rational> s(size, std::vector<Rational>(size, Rational(0)));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = f[m - i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] = g[n - i];
  return det(s);
}

// Power sums as traces of powers of the companion matrix.
std::vector<Rational> companion_power_sums(const QPoly& p, int count) {
  const std::size_t n = static_cast<std::size_t>(p.degree());
  Matrix<Rational> c(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 1; i < n; ++i) c[i][i - 1] = 1;
  for (std::size_t i = 0; i < n; ++i) c[i][n - 1] = -p[static_cast<int>(i)];
  Matrix<Rational> pw(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) pw[i][i] = 1;
  std::vector<Rational> out;
  for (int k = 0; k <= count; ++k) {
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += pw[i][i];
    out.push_back(tr);
    Matrix<Rational> next(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) next[i][j] += pw[i][l] * c[l][j];
    pw = std::move(next);
  }
  return out;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/4"), q(3, 4));
  EXPECT_EQ(parse_rational("-6/8"), q(-3, 4));
  EXPECT_EQ(parse_rational("7"), q(7));
  EXPECT_EQ(to_string(q(-3, 4)), "-3/4");
  EXPECT_EQ(to_string(q(10, 5)), "2");
  EXPECT_EQ(parse_rational(" 5/10 "), q(1, 2));
  EXPECT_EQ(to_string(parse_rational("123456789012345678901234567890/3")), "41152263004115226300411522630");
}

TEST(Rational, ParseRejectsGarbage) {
  for (const char* s : {"", "1/0", "a", "1/", "/2", "1.5", "1/2/3", "1/-2"}) EXPECT_THROW(parse_rational(s), InputError) << s;
}

TEST(Rational, RoundTripProperty) {
  Gen g(11);
  for (int i = 0; i < 200; ++i) {
    Rational x = g.rational(1000000);
    EXPECT_EQ(parse_rational(to_string(x)), x);
  }
}

TEST(UniPoly, ArithmeticBasics) {
  QPoly a = qpoly({1, 1});
  QPoly b = qpoly({-1, 1});
  EXPECT_EQ(a * b, qpoly({-1, 0, 1}));
  EXPECT_EQ(a + b, qpoly({0, 2}));
  EXPECT_EQ((a - a).degree(), -1);
  EXPECT_EQ(a.pow(3), qpoly({1, 3, 3, 1}));
  EXPECT_EQ(qpoly({0, 0, 1}).compose(a), qpoly({1, 2, 1}));
  EXPECT_EQ(qpoly({1, 2, 3}).derivative(), qpoly({2, 6}));
  EXPECT_EQ(qpoly({1, 2, 3})(q(2)), q(17));
}

TEST(UniPoly, DivremProperty) {
  Gen g(1);
  for (int i = 0; i < 200; ++i) {
    QPoly a = g.qpoly(static_cast<int>(g.integer(0, 9)));
    QPoly b = g.qpoly(static_cast<int>(g.integer(0, 5)));
    auto [qq, r] = divrem(a, b);
    EXPECT_EQ(qq * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
}

TEST(UniPoly, DivisionByZeroThrows) {
  EXPECT_THROW(divrem(qpoly({1, 1}), QPoly(Rational(0))), ArithmeticError);
}

TEST(UniPoly, GcdProperty) {
  Gen g(2);
  for (int i = 0; i < 100; ++i) {
    QPoly c = g.qpoly(static_cast<int>(g.integer(1, 3)));
    QPoly a = g.qpoly(static_cast<int>(g.integer(0, 4))) * c;
    QPoly b = g.qpoly(static_cast<int>(g.integer(0, 4))) * c;
    QPoly h = gcd(a, b);
    EXPECT_EQ(h.lc(), q(1));
    EXPECT_TRUE(divides(h, a));
    EXPECT_TRUE(divides(h, b));
    EXPECT_TRUE(divides(c.monic(), h));
  }
}

TEST(UniPoly, ExtendedGcdBezout) {
  Gen g(3);
  for (int i = 0; i < 100; ++i) {
    QPoly a = g.qpoly(static_cast<int>(g.integer(1, 6)));
    QPoly b = g.qpoly(static_cast<int>(g.integer(1, 6)));
    auto e = extended_gcd(a, b);
    EXPECT_EQ(e.s * a + e.t * b, e.gcd);
    EXPECT_EQ(e.gcd, gcd(a, b));
  }
}

TEST(UniPoly, ResultantMatchesSylvester) {
  Gen g(4);
  for (int i = 0; i < 60; ++i) {
    QPoly a = g.qpoly(static_cast<int>(g.integer(1, 5)));
    QPoly b = g.qpoly(static_cast<int>(g.integer(1, 5)));
    EXPECT_EQ(resultant(a, b), sylvester_resultant(a, b));
  }
  EXPECT_EQ(resultant(qpoly({-2, 0, 1}), qpoly({-3, 0, 1})), q(1));
  EXPECT_EQ(resultant(qpoly({-1, 1}), qpoly({-1, 0, 1})), q(0));
}

TEST(UniPoly, NewtonSumsMatchCompanionTraces) {
  Gen g(5);
  for (int i = 0; i < 40; ++i) {
    QPoly p = g.qpoly(static_cast<int>(g.integer(1, 6))).monic();
    EXPECT_EQ(newton_sums(p, 10), companion_power_sums(p, 10));
  }
  auto s = newton_sums(qpoly({-2, 0, 0, 0, 1}), 4);
  EXPECT_EQ(s, (std::vector<Rational>{4, 0, 0, 0, 8}));
}

TEST(UniPoly, SquarefreeDecomposition) {
  QPoly a = qpoly({1, 1});
  QPoly b = qpoly({-2, 0, 1});
  QPoly c = qpoly({3, 0, 0, 1});
  QPoly f = a * b.pow(2) * c.pow(3) * q(5);
  auto dec = squarefree_decomposition(f);
  ASSERT_EQ(dec.size(), 3u);
  EXPECT_EQ(dec[0], std::make_pair(a, 1));
  EXPECT_EQ(dec[1], std::make_pair(b, 2));
  EXPECT_EQ(dec[2], std::make_pair(c, 3));
  EXPECT_EQ(squarefree_part(f), a * b * c);
}

TEST(UniPoly, SquarefreeProductProperty) {
  Gen g(6);
  for (int i = 0; i < 40; ++i) {
    QPoly f = g.qpoly(2) * g.qpoly(1).pow(2) * g.qpoly(1);
    QPoly prod = QPoly::constant(f.lc());
    for (const auto& [p, m] : squarefree_decomposition(f)) prod = prod * p.pow(m);
    EXPECT_EQ(prod, f);
  }
}

TEST(Linalg, NullspaceAnnihilates) {
  Gen g(7);
  for (int i = 0; i < 30; ++i) {
    const std::size_t rows = static_cast<std::size_t>(g.integer(1, 4));
    const std::size_t cols = static_cast<std::size_t>(g.integer(rows, 6));
    Matrix<Rational> a(rows, std::vector<Rational>(cols));
    for (auto& r : a)
      for (auto& x : r) x = g.rational(3);
    for (const auto& v : nullspace(a, cols, Rational(0))) {
      for (const auto& r : a) {
        Rational s = 0;
        for (std::size_t j = 0; j < cols; ++j) s += r[j] * v[j];
        EXPECT_EQ(s, 0);
      }
    }
  }
}
