#pragma once
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "nsmac/qt.hpp"

namespace nsmac {

using Exp = std::vector<int>;  // dense exponent vector, possibly negative entries

// Laurent polynomial in x_1..x_n over QT.  Invariant: every stored coefficient
// is nonzero and every key has length n.  Term order for iteration and
// serialization is plain lexicographic on exponent vectors.
class XL {
 public:
  int n = 0;
  std::map<Exp, QT> terms;

  XL() = default;
  explicit XL(int nvars) : n(nvars) {}
  static XL monomial(int nvars, const Exp& e, QT c = QT(1));
  static XL constant(int nvars, QT c) { return monomial(nvars, Exp(nvars, 0), std::move(c)); }
  static XL var(int nvars, int i, int power = 1);  // x_{i+1}^power, 0-based i

  void add_term(const Exp& e, const QT& c);  // accumulates, drops zeros
  QT coeff(const Exp& e) const;              // 0 if absent

  bool is_zero() const { return terms.empty(); }
  bool operator==(const XL& o) const { return n == o.n && terms == o.terms; }
  bool operator!=(const XL& o) const { return !(*this == o); }

  XL operator-() const;
  XL operator+(const XL& o) const;
  XL operator-(const XL& o) const;
  XL operator*(const XL& o) const;
  XL operator*(const QT& s) const;
  XL& operator+=(const XL& o);
  XL& operator-=(const XL& o) { return *this += -o; }
  XL& operator*=(const XL& o) { return *this = *this * o; }
  XL& operator*=(const QT& s) { return *this = *this * s; }

  // Exact division in the Laurent ring; errors with NonExactDivision.
  XL exact_div(const XL& g) const;

  // Drops terms with positive exponent in variable k (0-based), removes the
  // slot; errors with NegativeExponentAtZero if x_k appears inverted.
  XL substitute_zero(int k) const;

  XL bar() const;  // x_i -> 1/x_i for all i, t -> 1/t

  XL swap_vars(int i) const;           // exchange x_{i+1}, x_{i+2} (0-based i)
  XL permute(const std::vector<int>& w) const;  // x_i -> x_{w[i]}, w a 0-based permutation
  XL extend(int m) const;              // view in m >= n variables
  XL map_terms(const std::function<std::pair<Exp, QT>(const Exp&, const QT&)>& f, int newn) const;

  bool is_polynomial() const;  // no negative exponents
  int min_exp(int i) const;    // 0 for zero polynomial
  int max_exp(int i) const;
  int max_total_deg() const;   // max over terms of sum of exponents (0 on zero)
  XL keep_nonnegative() const;  // drop terms with any negative exponent

  std::string str() const;
};

XL operator*(const QT& s, const XL& f);

}  // namespace nsmac
