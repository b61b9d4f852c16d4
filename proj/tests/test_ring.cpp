#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "nsmac/error.hpp"
#include "nsmac/laurent.hpp"
#include "nsmac/qt.hpp"

using namespace nsmac;

namespace {

// Small random Laurent polynomials for the algebra property checks.
XL random_xl(std::mt19937& rng, int n, int nterms) {
  std::uniform_int_distribution<int> expd(-2, 2), coeffd(-3, 3), pd(0, 2);
  XL f(n);
  for (int k = 0; k < nterms; k++) {
    Exp e(n);
    for (auto& v : e) v = expd(rng);
    ZPoly num;
    num.set(pd(rng), pd(rng), Int(coeffd(rng)));
    num.set(pd(rng), pd(rng), Int(coeffd(rng)));
    if (num.is_zero()) continue;
    f.add_term(e, QT(num));
  }
  return f;
}

}  // namespace

TEST_CASE("scalar canonical form") {
  QT a(ZPoly(1) - ZPoly::t(2), ZPoly(1) - ZPoly::t());  // (1-t^2)/(1-t)
  CHECK(a == QT(ZPoly(1) + ZPoly::t()));
  CHECK(a.is_polynomial());

  // denominator sign normalization: 1/(t-1) == -1/(1-t) with positive lead
  QT b(ZPoly(1), ZPoly::t() - ZPoly(1));
  QT c(ZPoly(-1), ZPoly(1) - ZPoly::t());
  CHECK(b == c);

  // canonicalization is idempotent
  QT d(b.num, b.den);
  CHECK(d == b);

  QT e(ZPoly(0), ZPoly::t(3));
  CHECK(e.is_zero());
  CHECK(e.den.is_one());
}

TEST_CASE("scalar arithmetic and powers") {
  QT t = QT::t(), q = QT::q();
  QT x = (QT(1) - t * t) / (QT(1) - t);
  CHECK(x == QT(1) + t);
  CHECK((t.pow(-2) * t.pow(2)) == QT(1));
  CHECK((q - q) == QT(0));
  CHECK_THROWS_AS(QT(1) / QT(0), CalcError);
  QT frac = QT(1) / (QT(1) - q * t);
  CHECK(frac * (QT(1) - q * t) == QT(1));
  CHECK(!frac.is_polynomial());
}

TEST_CASE("gcd reduction across both variables") {
  ZPoly one(1);
  ZPoly f = (one - ZPoly::t(2)) * (one + ZPoly::q());
  ZPoly g = (one - ZPoly::t()) * (one + ZPoly::q()) * (one + ZPoly::q());
  QT r(f, g);
  QT expect(one + ZPoly::t(), one + ZPoly::q());
  CHECK(r == expect);
}

TEST_CASE("t-adic congruence") {
  QT t = QT::t();
  QT a = QT(1) / (QT(1) - t);  // 1 + t + t^2 + ...
  QT b = QT(1) + t + t * t;
  CHECK(a.congruent_mod_t(b, 3));
  CHECK(!a.congruent_mod_t(b, 4));
  QT pole = QT(1) / t;
  CHECK_THROWS_AS(pole.congruent_mod_t(QT(0), 1), CalcError);
}

TEST_CASE("bar on scalars") {
  QT t = QT::t();
  CHECK(t.bar_t() == t.pow(-1));
  QT a = QT(1) - t;
  CHECK(a.bar_t() == (t - QT(1)) / t);
  CHECK(a.bar_t().bar_t() == a);
}

TEST_CASE("exact division basics") {
  XL x1 = XL::var(2, 0), x2 = XL::var(2, 1);
  XL f = x1 * x1 - x2 * x2;
  XL g = x1 - x2;
  CHECK(f.exact_div(g) == x1 + x2);

  XL one = XL::constant(2, QT(1));
  CHECK(f.exact_div(one) == f);

  // ((1-t) x1 x2^-1 - (1-t)) / (x1 x2^-1 - 1) = (1-t), verified by re-multiplication
  QT omt = QT(1) - QT::t();
  XL m = XL::monomial(2, {1, -1});
  XL num = omt * m - XL::constant(2, omt);
  XL den = m - one;
  XL quo = num.exact_div(den);
  CHECK(quo * den == num);
  CHECK(quo == XL::constant(2, omt));

  XL bad = x1 * x1 + x2;
  CHECK_THROWS_AS(bad.exact_div(g), CalcError);
}

TEST_CASE("coefficient extraction") {
  XL f = XL::constant(2, QT(3)) + QT::t() * XL::monomial(2, {1, -1});
  CHECK(f.coeff({0, 0}) == QT(3));
  CHECK(f.coeff({1, -1}) == QT::t());
  CHECK(f.coeff({5, 5}).is_zero());
}

TEST_CASE("substitute variable to zero") {
  XL x1 = XL::var(2, 0), x2 = XL::var(2, 1);
  XL f = x1 + x2;
  XL r = f.substitute_zero(0);
  CHECK(r == XL::var(1, 0));

  XL g = XL::monomial(2, {-1, 0});
  CHECK_THROWS_AS(g.substitute_zero(0), CalcError);

  XL h = x1 * x2 + x2;  // terms with positive x1 exponent drop
  CHECK(h.substitute_zero(0) == XL::var(1, 0));
}

TEST_CASE("bar involution") {
  XL f = QT::t() * XL::var(2, 0);
  XL b = f.bar();
  CHECK(b == QT::t(-1) * XL::monomial(2, {-1, 0}));
  CHECK(b.bar() == f);

  std::mt19937 rng(12345);
  for (int rep = 0; rep < 20; rep++) {
    XL g = random_xl(rng, 3, 4), h = random_xl(rng, 3, 4);
    CHECK((g * h).bar() == g.bar() * h.bar());
    CHECK((g + h).bar() == g.bar() + h.bar());
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(98765);
  for (int rep = 0; rep < 15; rep++) {
    XL f = random_xl(rng, 3, 4), g = random_xl(rng, 3, 4), h = random_xl(rng, 3, 4);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
  }
}

TEST_CASE("exact_div recovers factors") {
  std::mt19937 rng(424242);
  for (int rep = 0; rep < 25; rep++) {
    XL f = random_xl(rng, 3, 3), g = random_xl(rng, 3, 3);
    if (g.is_zero()) continue;
    CHECK((f * g).exact_div(g) == f);
  }
}
