#include "nsmac/qt.hpp"

#include <sstream>

#include "nsmac/error.hpp"

namespace nsmac {

namespace {
void reduce(ZPoly& n, ZPoly& d) {
  check(!d.is_zero(), "ZeroDenominator", "fraction with zero denominator");
  if (n.is_zero()) {
    d = ZPoly(1);
    return;
  }
  ZPoly g = ZPoly::gcd(n, d);
  if (!g.is_one()) {
    n = n.divexact(g);
    d = d.divexact(g);
  }
  if (d.lead_graded().second < 0) {
    n = -n;
    d = -d;
  }
}
}  // namespace

QT::QT(ZPoly n, ZPoly d) : num(std::move(n)), den(std::move(d)) { reduce(num, den); }

QT QT::q(int e) {
  if (e >= 0) return QT(ZPoly::q(e));
  return QT(ZPoly(1), ZPoly::q(-e));
}

QT QT::t(int e) {
  if (e >= 0) return QT(ZPoly::t(e));
  return QT(ZPoly(1), ZPoly::t(-e));
}

QT QT::mono(int dq, int dt, Int coeff) {
  check(dq >= 0 && dt >= 0, "InternalError", "QT::mono wants nonnegative degrees");
  return QT(ZPoly::mono(dq, dt, std::move(coeff)));
}

bool QT::is_nonneg_polynomial() const {
  if (!den.is_one()) return false;
  for (auto& [k, v] : num.c)
    if (v < 0) return false;
  return true;
}

QT QT::operator-() const {
  QT r;
  r.num = -num;
  r.den = den;
  return r;
}

QT QT::operator+(const QT& o) const { return QT(num * o.den + o.num * den, den * o.den); }
QT QT::operator-(const QT& o) const { return QT(num * o.den - o.num * den, den * o.den); }
QT QT::operator*(const QT& o) const { return QT(num * o.num, den * o.den); }

QT QT::operator/(const QT& o) const {
  check(!o.is_zero(), "DivisionByZero", "QT division by zero");
  return QT(num * o.den, den * o.num);
}

QT QT::inv() const {
  check(!is_zero(), "DivisionByZero", "inverse of zero");
  return QT(den, num);
}

QT QT::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  QT r(1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

int QT::t_vanish_order() const {
  check(!is_zero(), "InternalError", "t_vanish_order of zero");
  check(den.ord_t() == 0, "DenominatorVanishesAtT0",
        "t-adic order undefined: denominator vanishes at t=0");
  return num.ord_t();
}

bool QT::congruent_mod_t(const QT& o, int e) const {
  QT d = *this - o;
  if (d.is_zero()) return true;
  return d.t_vanish_order() >= e;
}

QT QT::bar_t() const {
  int a = num.deg_t(), b = den.deg_t();
  // num(q,1/t)/den(q,1/t) = t^b rev_t(num) / t^a rev_t(den)
  ZPoly n = num.reverse_t(a) * ZPoly::t(b);
  ZPoly d = den.reverse_t(b) * ZPoly::t(a);
  return QT(std::move(n), std::move(d));
}

QT QT::bar_q() const {
  int a = num.deg_q(), b = den.deg_q();
  auto rev_q = [](const ZPoly& p, int D) {
    ZPoly r;
    for (auto& [k, v] : p.c) r.c[{D - k.first, k.second}] = v;
    return r;
  };
  ZPoly n = rev_q(num, a) * ZPoly::q(b);
  ZPoly d = rev_q(den, b) * ZPoly::q(a);
  return QT(std::move(n), std::move(d));
}

QT QT::eval_t0() const {
  ZPoly d0 = den.eval_t0();
  check(!d0.is_zero(), "DenominatorVanishesAtT0", "evaluation at t=0 hits a pole");
  return QT(num.eval_t0(), d0);
}

QT QT::subs_powers(int a, int b) const { return QT(num.subs_powers(a, b), den.subs_powers(a, b)); }

std::string QT::str() const {
  if (den.is_one()) return num.str();
  std::ostringstream os;
  bool nparen = num.c.size() > 1;
  bool dparen = den.c.size() > 1;
  os << (nparen ? "(" : "") << num.str() << (nparen ? ")" : "") << "/" << (dparen ? "(" : "")
     << den.str() << (dparen ? ")" : "");
  return os.str();
}

QT operator*(long a, const QT& b) { return QT(a) * b; }

}  // namespace nsmac
