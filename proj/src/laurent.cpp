#include "nsmac/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "nsmac/error.hpp"

namespace nsmac {

XL XL::monomial(int nvars, const Exp& e, QT c) {
  check((int)e.size() == nvars, "InternalError", "exponent length mismatch");
  XL f(nvars);
  if (!c.is_zero()) f.terms[e] = std::move(c);
  return f;
}

XL XL::var(int nvars, int i, int power) {
  check(0 <= i && i < nvars, "InternalError", "variable index out of range");
  Exp e(nvars, 0);
  e[i] = power;
  return monomial(nvars, e);
}

void XL::add_term(const Exp& e, const QT& c) {
  check((int)e.size() == n, "InternalError", "exponent length mismatch");
  if (c.is_zero()) return;
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

QT XL::coeff(const Exp& e) const {
  auto it = terms.find(e);
  return it == terms.end() ? QT(0) : it->second;
}

XL XL::operator-() const {
  XL r(n);
  for (auto& [e, c] : terms) r.terms[e] = -c;
  return r;
}

XL& XL::operator+=(const XL& o) {
  check(n == o.n, "InternalError", "variable count mismatch in +");
  for (auto& [e, c] : o.terms) add_term(e, c);
  return *this;
}

XL XL::operator+(const XL& o) const {
  XL r = *this;
  r += o;
  return r;
}

XL XL::operator-(const XL& o) const {
  XL r = *this;
  r += -o;
  return r;
}

XL XL::operator*(const XL& o) const {
  check(n == o.n, "InternalError", "variable count mismatch in *");
  XL r(n);
  Exp e(n);
  for (auto& [e1, c1] : terms)
    for (auto& [e2, c2] : o.terms) {
      for (int i = 0; i < n; i++) e[i] = e1[i] + e2[i];
      QT prod = c1 * c2;
      if (prod.is_zero()) continue;
      auto it = r.terms.find(e);
      if (it == r.terms.end()) {
        r.terms.emplace(e, std::move(prod));
      } else {
        it->second += prod;
        if (it->second.is_zero()) r.terms.erase(it);
      }
    }
  return r;
}

XL XL::operator*(const QT& s) const {
  XL r(n);
  if (s.is_zero()) return r;
  for (auto& [e, c] : terms) {
    QT prod = c * s;
    if (!prod.is_zero()) r.terms[e] = std::move(prod);
  }
  return r;
}

XL operator*(const QT& s, const XL& f) { return f * s; }

XL XL::exact_div(const XL& g) const {
  check(!g.is_zero(), "NonExactDivision", "division by zero polynomial");
  check(n == g.n, "InternalError", "variable count mismatch in exact_div");
  if (is_zero()) return XL(n);
  // Normalize both operands to honest polynomials with per-variable minimum
  // exponent 0; Laurent-exactness then equals polynomial exactness.
  Exp mf(n), mg(n);
  for (int i = 0; i < n; i++) {
    mf[i] = min_exp(i);
    mg[i] = g.min_exp(i);
  }
  auto shift = [&](const XL& p, const Exp& m) {
    XL r(n);
    for (auto& [e, c] : p.terms) {
      Exp e2(e);
      for (int i = 0; i < n; i++) e2[i] -= m[i];
      r.terms[e2] = c;
    }
    return r;
  };
  XL f0 = shift(*this, mf), g0 = shift(g, mg);
  // quotient support bound: product of (deg_i f0 + 1)
  long cap = 1;
  for (int i = 0; i < n; i++) {
    cap *= (f0.max_exp(i) + 1);
    if (cap > 2'000'000) cap = 2'000'000;
  }
  const Exp& ltg = std::prev(g0.terms.end())->first;  // lex-max
  const QT& cg = std::prev(g0.terms.end())->second;
  XL h(n), r = f0;
  long steps = 0;
  Exp e(n);
  while (!r.is_zero()) {
    auto lead = std::prev(r.terms.end());
    for (int i = 0; i < n; i++) {
      e[i] = lead->first[i] - ltg[i];
      check(e[i] >= 0, "NonExactDivision", "leading-term exponent not divisible");
    }
    QT qc = lead->second / cg;
    XL qterm = XL::monomial(n, e, qc);
    h += qterm;
    r -= qterm * g0;
    check(++steps <= cap, "NonExactDivision", "division does not terminate");
  }
  // restore x^(mf - mg)
  XL out(n);
  for (auto& [ex, c] : h.terms) {
    Exp e2(ex);
    for (int i = 0; i < n; i++) e2[i] += mf[i] - mg[i];
    out.terms[e2] = c;
  }
  return out;
}

XL XL::substitute_zero(int k) const {
  check(0 <= k && k < n, "InternalError", "variable index out of range");
  XL r(n - 1);
  for (auto& [e, c] : terms) {
    check(e[k] >= 0, "NegativeExponentAtZero",
          "cannot set a variable with negative exponent to zero");
    if (e[k] > 0) continue;
    Exp e2;
    e2.reserve(n - 1);
    for (int i = 0; i < n; i++)
      if (i != k) e2.push_back(e[i]);
    r.terms[e2] = c;
  }
  return r;
}

XL XL::bar() const {
  XL r(n);
  for (auto& [e, c] : terms) {
    Exp e2(e);
    for (auto& v : e2) v = -v;
    r.terms[e2] = c.bar_t();
  }
  return r;
}

XL XL::swap_vars(int i) const {
  check(0 <= i && i + 1 < n, "InternalError", "swap index out of range");
  XL r(n);
  for (auto& [e, c] : terms) {
    Exp e2(e);
    std::swap(e2[i], e2[i + 1]);
    r.terms[e2] = c;
  }
  return r;
}

XL XL::permute(const std::vector<int>& w) const {
  check((int)w.size() == n, "InternalError", "permutation size mismatch");
  XL r(n);
  Exp e2(n);
  for (auto& [e, c] : terms) {
    for (int i = 0; i < n; i++) e2[w[i]] = e[i];
    r.terms[e2] = c;
  }
  return r;
}

XL XL::extend(int m) const {
  check(m >= n, "InternalError", "extend shrinks variable count");
  XL r(m);
  for (auto& [e, c] : terms) {
    Exp e2(e);
    e2.resize(m, 0);
    r.terms[e2] = c;
  }
  return r;
}

XL XL::map_terms(const std::function<std::pair<Exp, QT>(const Exp&, const QT&)>& f, int newn) const {
  XL r(newn);
  for (auto& [e, c] : terms) {
    auto [e2, c2] = f(e, c);
    r.add_term(e2, c2);
  }
  return r;
}

bool XL::is_polynomial() const {
  for (auto& [e, c] : terms)
    for (int v : e)
      if (v < 0) return false;
  return true;
}

int XL::min_exp(int i) const {
  int m = 0;
  bool first = true;
  for (auto& [e, c] : terms) {
    if (first || e[i] < m) m = e[i];
    first = false;
  }
  return m;
}

int XL::max_exp(int i) const {
  int m = 0;
  bool first = true;
  for (auto& [e, c] : terms) {
    if (first || e[i] > m) m = e[i];
    first = false;
  }
  return m;
}

int XL::max_total_deg() const {
  int m = 0;
  bool first = true;
  for (auto& [e, c] : terms) {
    int s = 0;
    for (int v : e) s += v;
    if (first || s > m) m = s;
    first = false;
  }
  return m;
}

XL XL::keep_nonnegative() const {
  XL r(n);
  for (auto& [e, c] : terms) {
    bool ok = true;
    for (int v : e)
      if (v < 0) {
        ok = false;
        break;
      }
    if (ok) r.terms[e] = c;
  }
  return r;
}

std::string XL::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int i = 0; i < n; i++) {
      if (e[i] == 0) continue;
      os << "*x" << (i + 1);
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace nsmac
