#include "nsmac/bivar.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "nsmac/error.hpp"

namespace nsmac {

ZPoly ZPoly::mono(int dq, int dt, Int coeff) {
  ZPoly p;
  if (coeff != 0) p.c[{dq, dt}] = std::move(coeff);
  return p;
}

void ZPoly::set(int dq, int dt, const Int& v) {
  if (v == 0)
    c.erase({dq, dt});
  else
    c[{dq, dt}] = v;
}

Int ZPoly::coeff(int dq, int dt) const {
  auto it = c.find({dq, dt});
  return it == c.end() ? Int(0) : it->second;
}

bool ZPoly::is_one() const {
  return c.size() == 1 && c.begin()->first == Key{0, 0} && c.begin()->second == 1;
}

int ZPoly::deg_q() const {
  int d = -1;
  for (auto& [k, v] : c) d = std::max(d, k.first);
  return d;
}

int ZPoly::deg_t() const {
  int d = -1;
  for (auto& [k, v] : c) d = std::max(d, k.second);
  return d;
}

int ZPoly::ord_t() const {
  int d = std::numeric_limits<int>::max();
  for (auto& [k, v] : c) d = std::min(d, k.second);
  return d;
}

int ZPoly::ord_q() const {
  int d = std::numeric_limits<int>::max();
  for (auto& [k, v] : c) d = std::min(d, k.first);
  return d;
}

ZPoly ZPoly::operator-() const {
  ZPoly r;
  for (auto& [k, v] : c) r.c[k] = -v;
  return r;
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
  ZPoly r = *this;
  for (auto& [k, v] : o.c) {
    auto it = r.c.find(k);
    if (it == r.c.end()) {
      r.c[k] = v;
    } else {
      it->second += v;
      if (it->second == 0) r.c.erase(it);
    }
  }
  return r;
}

ZPoly ZPoly::operator-(const ZPoly& o) const { return *this + (-o); }

ZPoly ZPoly::operator*(const ZPoly& o) const {
  ZPoly r;
  for (auto& [k1, v1] : c)
    for (auto& [k2, v2] : o.c) {
      Key k{k1.first + k2.first, k1.second + k2.second};
      auto it = r.c.find(k);
      if (it == r.c.end()) {
        Int prod = v1 * v2;
        if (prod != 0) r.c[k] = std::move(prod);
      } else {
        it->second += v1 * v2;
        if (it->second == 0) r.c.erase(it);
      }
    }
  return r;
}

std::pair<ZPoly::Key, Int> ZPoly::lead_graded() const {
  check(!is_zero(), "InternalError", "lead_graded on zero polynomial");
  auto best = c.begin();
  for (auto it = std::next(c.begin()); it != c.end(); ++it) {
    int dbest = best->first.first + best->first.second;
    int dit = it->first.first + it->first.second;
    if (dit > dbest || (dit == dbest && it->first.first > best->first.first)) best = it;
  }
  return {best->first, best->second};
}

Int ZPoly::content() const {
  Int g = 0;
  for (auto& [k, v] : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly ZPoly::div_int(const Int& d) const {
  check(d != 0, "InternalError", "division by zero content");
  ZPoly r;
  for (auto& [k, v] : c) {
    Int quo, rem;
    mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
    check(rem == 0, "InternalError", "non-exact integer content division");
    r.c[k] = quo;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Dense univariate layer over Z (variable q), used as the coefficient ring for
// the t-major view in gcd and exact division.

namespace {

using ZQ = std::vector<Int>;  // ZQ[i] = coefficient of q^i; trailing zeros trimmed

void zq_trim(ZQ& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
bool zq_zero(const ZQ& a) { return a.empty(); }
int zq_deg(const ZQ& a) { return (int)a.size() - 1; }

ZQ zq_add(const ZQ& a, const ZQ& b) {
  ZQ r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); i++) r[i] += a[i];
  for (size_t i = 0; i < b.size(); i++) r[i] += b[i];
  zq_trim(r);
  return r;
}

ZQ zq_neg(const ZQ& a) {
  ZQ r(a);
  for (auto& v : r) v = -v;
  return r;
}

ZQ zq_mul(const ZQ& a, const ZQ& b) {
  if (zq_zero(a) || zq_zero(b)) return {};
  ZQ r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); i++)
    for (size_t j = 0; j < b.size(); j++) r[i + j] += a[i] * b[j];
  zq_trim(r);
  return r;
}

ZQ zq_mul_int(const ZQ& a, const Int& m) {
  if (m == 0) return {};
  ZQ r(a);
  for (auto& v : r) v *= m;
  return r;
}

Int zq_content(const ZQ& a) {
  Int g = 0;
  for (auto& v : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZQ zq_div_int(const ZQ& a, const Int& d) {
  ZQ r(a);
  for (auto& v : r) {
    Int quo, rem;
    mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
    check(rem == 0, "InternalError", "zq content division not exact");
    v = quo;
  }
  return r;
}

// Exact division a / b in Z[q]; returns false if not exact.
bool zq_try_divexact(const ZQ& a, const ZQ& b, ZQ& quo) {
  check(!zq_zero(b), "InternalError", "zq division by zero");
  ZQ rem(a);
  quo.assign(a.size(), Int(0));
  const Int& lb = b.back();
  while (!zq_zero(rem) && zq_deg(rem) >= zq_deg(b)) {
    Int qc, rr;
    mpz_tdiv_qr(qc.get_mpz_t(), rr.get_mpz_t(), rem.back().get_mpz_t(), lb.get_mpz_t());
    if (rr != 0) return false;
    int shift = zq_deg(rem) - zq_deg(b);
    quo[shift] = qc;
    for (size_t i = 0; i < b.size(); i++) rem[i + shift] -= qc * b[i];
    zq_trim(rem);
  }
  if (!zq_zero(rem)) return false;
  zq_trim(quo);
  return true;
}

// Pseudo-remainder in Z[q]: an associate of (lc(b)^k * a mod b).
ZQ zq_pseudo_rem(ZQ a, const ZQ& b) {
  const Int& lb = b.back();
  while (!zq_zero(a) && zq_deg(a) >= zq_deg(b)) {
    Int lc = a.back();
    int shift = zq_deg(a) - zq_deg(b);
    a = zq_mul_int(a, lb);
    for (size_t i = 0; i < b.size(); i++) a[i + shift] -= lc * b[i];
    zq_trim(a);
  }
  return a;
}

// Primitive PRS gcd in Z[q].
ZQ zq_gcd(ZQ a, ZQ b) {
  if (zq_zero(a)) return b;
  if (zq_zero(b)) return a;
  Int ca = zq_content(a), cb = zq_content(b);
  Int cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = zq_div_int(a, ca);
  b = zq_div_int(b, cb);
  if (zq_deg(a) < zq_deg(b)) std::swap(a, b);
  while (!zq_zero(b)) {
    ZQ rem = zq_pseudo_rem(a, b);
    a = b;
    if (zq_zero(rem)) {
      b.clear();
    } else {
      b = zq_div_int(rem, zq_content(rem));
    }
  }
  a = zq_mul_int(a, cg);
  if (!a.empty() && a.back() < 0) a = zq_neg(a);
  return a;
}

// t-major view: BT[j] = coefficient of t^j, an element of Z[q].
using BT = std::vector<ZQ>;

void bt_trim(BT& f) {
  while (!f.empty() && zq_zero(f.back())) f.pop_back();
}
bool bt_zero(const BT& f) { return f.empty(); }
int bt_deg(const BT& f) { return (int)f.size() - 1; }

BT to_bt(const ZPoly& p) {
  BT f;
  for (auto& [k, v] : p.c) {
    if ((int)f.size() <= k.second) f.resize(k.second + 1);
    ZQ& row = f[k.second];
    if ((int)row.size() <= k.first) row.resize(k.first + 1, Int(0));
    row[k.first] = v;
  }
  for (auto& row : f) zq_trim(row);
  bt_trim(f);
  return f;
}

ZPoly from_bt(const BT& f) {
  ZPoly p;
  for (size_t j = 0; j < f.size(); j++)
    for (size_t i = 0; i < f[j].size(); i++)
      if (f[j][i] != 0) p.c[{(int)i, (int)j}] = f[j][i];
  return p;
}

ZQ bt_content(const BT& f) {
  ZQ g;
  for (auto& row : f) {
    g = zq_gcd(g, row);
    if (zq_deg(g) == 0 && !zq_zero(g) && (g[0] == 1 || g[0] == -1)) break;
  }
  return g;
}

BT bt_div_zq(const BT& f, const ZQ& d) {
  BT r(f.size());
  for (size_t j = 0; j < f.size(); j++) {
    if (zq_zero(f[j])) continue;
    check(zq_try_divexact(f[j], d, r[j]), "InternalError", "bt content division not exact");
  }
  bt_trim(r);
  return r;
}

// Pseudo-remainder in t of f by g (coefficients Z[q]).
BT bt_pseudo_rem(BT f, const BT& g) {
  const ZQ& lg = g.back();
  while (!bt_zero(f) && bt_deg(f) >= bt_deg(g)) {
    ZQ lf = f.back();
    int shift = bt_deg(f) - bt_deg(g);
    for (auto& row : f) row = zq_mul(row, lg);
    for (size_t i = 0; i < g.size(); i++) f[i + shift] = zq_add(f[i + shift], zq_neg(zq_mul(lf, g[i])));
    bt_trim(f);
  }
  return f;
}

}  // namespace

bool ZPoly::try_divexact(const ZPoly& g, ZPoly& quo) const {
  check(!g.is_zero(), "InternalError", "polynomial division by zero");
  if (is_zero()) {
    quo = ZPoly();
    return true;
  }
  BT f = to_bt(*this), d = to_bt(g);
  BT q(std::max<size_t>(1, f.size()), ZQ{});
  while (!bt_zero(f)) {
    if (bt_deg(f) < bt_deg(d)) return false;
    ZQ qc;
    if (!zq_try_divexact(f.back(), d.back(), qc)) return false;
    int shift = bt_deg(f) - bt_deg(d);
    if ((int)q.size() <= shift) q.resize(shift + 1);
    q[shift] = qc;
    for (size_t i = 0; i < d.size(); i++)
      f[i + shift] = zq_add(f[i + shift], zq_neg(zq_mul(qc, d[i])));
    bt_trim(f);
  }
  quo = from_bt(q);
  return quo * g == *this;
}

ZPoly ZPoly::divexact(const ZPoly& g) const {
  ZPoly quo;
  check(try_divexact(g, quo), "NonExactDivision", "bivariate polynomial division left a remainder");
  return quo;
}

ZPoly ZPoly::gcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() && b.is_zero()) return ZPoly();
  if (a.is_zero()) return b.lead_graded().second > 0 ? b : -b;
  if (b.is_zero()) return a.lead_graded().second > 0 ? a : -a;
  BT f = to_bt(a), g = to_bt(b);
  ZQ cf = bt_content(f), cg2 = bt_content(g);
  f = bt_div_zq(f, cf);
  g = bt_div_zq(g, cg2);
  ZQ cont = zq_gcd(cf, cg2);
  if (bt_deg(f) < bt_deg(g)) std::swap(f, g);
  while (!bt_zero(g)) {
    BT r = bt_pseudo_rem(f, g);
    f = std::move(g);
    if (bt_zero(r)) {
      g.clear();
    } else {
      g = bt_div_zq(r, bt_content(r));
    }
  }
  // f is the primitive gcd in t-major form; restore the content.
  for (auto& row : f) row = zq_mul(row, cont);
  ZPoly out = from_bt(f);
  if (out.lead_graded().second < 0) out = -out;
  return out;
}

ZPoly ZPoly::eval_t0() const {
  ZPoly r;
  for (auto& [k, v] : c)
    if (k.second == 0) r.c[{k.first, 0}] = v;
  return r;
}

ZPoly ZPoly::eval_q0() const {
  ZPoly r;
  for (auto& [k, v] : c)
    if (k.first == 0) r.c[{0, k.second}] = v;
  return r;
}

ZPoly ZPoly::reverse_t(int D) const {
  ZPoly r;
  for (auto& [k, v] : c) {
    check(k.second <= D, "InternalError", "reverse_t degree bound too small");
    r.c[{k.first, D - k.second}] = v;
  }
  return r;
}

ZPoly ZPoly::subs_powers(int a, int b) const {
  check(a >= 1 && b >= 1, "InternalError", "subs_powers wants positive exponents");
  ZPoly r;
  for (auto& [k, v] : c) r.c[{k.first * a, k.second * b}] = v;
  return r;
}

Int ZPoly::eval_int(long qv, long tv) const {
  Int acc = 0, Q(qv), T(tv);
  for (auto& [k, v] : c) {
    Int term = v;
    for (int i = 0; i < k.first; i++) term *= Q;
    for (int i = 0; i < k.second; i++) term *= T;
    acc += term;
  }
  return acc;
}

std::string ZPoly::str() const {
  if (is_zero()) return "0";
  // t-degree-major ordering for output
  std::vector<std::pair<Key, Int>> terms(c.begin(), c.end());
  std::sort(terms.begin(), terms.end(), [](auto& a, auto& b) {
    if (a.first.second != b.first.second) return a.first.second < b.first.second;
    return a.first.first < b.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto& [k, v] : terms) {
    Int av = v < 0 ? Int(-v) : v;
    if (first) {
      if (v < 0) os << "-";
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    bool unit = (av == 1) && (k.first != 0 || k.second != 0);
    if (!unit) os << av.get_str();
    bool need_star = !unit;
    if (k.first != 0) {
      if (need_star) os << "*";
      os << "q";
      if (k.first != 1) os << "^" << k.first;
      need_star = true;
    }
    if (k.second != 0) {
      if (need_star) os << "*";
      os << "t";
      if (k.second != 1) os << "^" << k.second;
    }
  }
  return os.str();
}

}  // namespace nsmac
