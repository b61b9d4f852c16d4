#pragma once
#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace nsmac {

using Int = mpz_class;

// Sparse polynomial in Z[q,t].  Invariant: no zero coefficients stored.
// Monomial keys are (deg_q, deg_t); map order is plain lexicographic and is
// only used for deterministic iteration.
class ZPoly {
 public:
  using Key = std::pair<int, int>;
  std::map<Key, Int> c;

  ZPoly() = default;
  explicit ZPoly(long v) { set(0, 0, Int(v)); }
  explicit ZPoly(const Int& v) { set(0, 0, v); }

  static ZPoly mono(int dq, int dt, Int coeff = Int(1));
  static ZPoly q(int e = 1) { return mono(e, 0); }
  static ZPoly t(int e = 1) { return mono(0, e); }

  void set(int dq, int dt, const Int& v);  // overwrite one coefficient
  Int coeff(int dq, int dt) const;

  bool is_zero() const { return c.empty(); }
  bool is_one() const;
  bool is_constant() const { return c.empty() || (c.size() == 1 && c.begin()->first == Key{0, 0}); }
  bool operator==(const ZPoly& o) const { return c == o.c; }
  bool operator!=(const ZPoly& o) const { return !(c == o.c); }

  int deg_q() const;  // -1 on zero
  int deg_t() const;
  int ord_t() const;  // min t-degree; large sentinel on zero
  int ord_q() const;

  ZPoly operator-() const;
  ZPoly operator+(const ZPoly& o) const;
  ZPoly operator-(const ZPoly& o) const;
  ZPoly operator*(const ZPoly& o) const;
  ZPoly& operator+=(const ZPoly& o) { return *this = *this + o; }
  ZPoly& operator-=(const ZPoly& o) { return *this = *this - o; }
  ZPoly& operator*=(const ZPoly& o) { return *this = *this * o; }

  // Leading term under graded-lex on (q,t): larger total degree wins, then
  // larger q-degree.  Used for sign normalization of fractions.
  std::pair<Key, Int> lead_graded() const;  // pre: nonzero

  Int content() const;            // gcd of coefficients, >= 0
  ZPoly div_int(const Int& d) const;  // pre: d divides every coefficient
  ZPoly divexact(const ZPoly& g) const;  // pre: exact; throws CalcError otherwise
  bool try_divexact(const ZPoly& g, ZPoly& quo) const;

  static ZPoly gcd(const ZPoly& a, const ZPoly& b);

  ZPoly eval_t0() const;               // slice dt = 0
  ZPoly eval_q0() const;               // slice dq = 0
  ZPoly reverse_t(int D) const;        // dt -> D - dt; pre: D >= deg_t
  ZPoly subs_powers(int a, int b) const;  // q -> q^a, t -> t^b (a,b >= 1)
  Int eval_int(long qv, long tv) const;   // numeric probe, exact

  std::string str() const;  // human readable, t-degree-major ordering
};

}  // namespace nsmac
