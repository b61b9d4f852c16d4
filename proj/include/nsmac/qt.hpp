#pragma once
#include <string>

#include "nsmac/bivar.hpp"

namespace nsmac {

// Element of Q(q,t) as a reduced fraction of ZPoly.
// Canonical form: den != 0, gcd(num,den) = 1, den's graded-lex leading
// coefficient positive, zero stored as 0/1.  Equality is then structural.
class QT {
 public:
  ZPoly num, den;

  QT() : num(), den(1) {}
  QT(long v) : num(v), den(1) {}
  explicit QT(const Int& v) : num(v), den(1) {}
  explicit QT(ZPoly n) : num(std::move(n)), den(1) {}
  QT(ZPoly n, ZPoly d);  // reduces

  static QT q(int e = 1);
  static QT t(int e = 1);
  static QT mono(int dq, int dt, Int coeff = Int(1));  // e may not be negative here

  bool is_zero() const { return num.is_zero(); }
  bool is_one() const { return num.is_one() && den.is_one(); }
  bool is_polynomial() const { return den.is_one(); }
  bool is_nonneg_polynomial() const;
  bool operator==(const QT& o) const { return num == o.num && den == o.den; }
  bool operator!=(const QT& o) const { return !(*this == o); }

  QT operator-() const;
  QT operator+(const QT& o) const;
  QT operator-(const QT& o) const;
  QT operator*(const QT& o) const;
  QT operator/(const QT& o) const;  // errors on zero divisor
  QT& operator+=(const QT& o) { return *this = *this + o; }
  QT& operator-=(const QT& o) { return *this = *this - o; }
  QT& operator*=(const QT& o) { return *this = *this * o; }
  QT& operator/=(const QT& o) { return *this = *this / o; }

  QT inv() const;
  QT pow(int e) const;  // negative e inverts

  // Order of vanishing at t = 0.  Requires den(q,0) != 0 (true after reduction
  // unless t divides den); errors with DenominatorVanishesAtT0 otherwise.
  int t_vanish_order() const;  // pre: nonzero
  bool congruent_mod_t(const QT& o, int e) const;

  QT bar_t() const;    // t -> 1/t
  QT bar_q() const;    // q -> 1/q
  QT eval_t0() const;  // t -> 0; errors if den vanishes there
  QT subs_powers(int a, int b) const;  // q -> q^a, t -> t^b

  std::string str() const;
};

QT operator*(long a, const QT& b);

}  // namespace nsmac
