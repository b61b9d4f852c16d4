#pragma once

#include <map>
#include <vector>

#include "laurent.hpp"
#include "mixed.hpp"

namespace nsmac {

// Flagged symmetric functions in l ordered alphabets X_1, ..., X_l, stored in
// the multiplicative basis
//
//   hflag_a = h_{a_1}[X_1] h_{a_2}[X_1 + X_2] ... h_{a_l}[X_1 + ... + X_l].
//
// Coordinate keys are trimmed of trailing zeros, so a key of length k < l
// means a_{k+1} = ... = a_l = 0.  The empty key is the constant function 1.
struct FlaggedSym {
  int l = 0;
  std::map<Exp, QT> coords;

  void add(const Exp& a, const QT& c);  // accumulates, drops zeros, trims key
  bool is_zero() const { return coords.empty(); }
  bool operator==(const FlaggedSym& o) const { return l == o.l && coords == o.coords; }
};

// hflag_a evaluated at the single-variable alphabets X_i = {x_i}; n >= len(a).
// Equals prod_i h_{a_i}(x_1..x_i).
XL fsym_h(const Exp& a, int n);

// The twisted basis element prod_i h_{a_i}[x_i + (1-t)(x_1 + ... + x_{i-1})].
// Its leading monomial is x^a, like fsym_h, so either family supports
// expansion by leading-term stripping.
XL fsym_htilde(const Exp& a, int n);

// Inverse of the evaluation X_i = {x_i}: expands a polynomial in x_1..x_l
// over the basis {fsym_h(a, l)}.  Requires p to be an honest polynomial.
FlaggedSym fsym_from_poly(const XL& p);

// Evaluation at X_i = {x_i} over n >= f.l variables.
XL fsym_to_poly(const FlaggedSym& f, int n);

// Evaluation at arbitrary alphabets, one per slot (alphabets.size() >= the
// length of every coordinate key; all over the same concrete variable set).
// At most one alphabet may contain the formal letter Y; otherwise
// MultipleYAlphabets is raised.  The XL variant requires no formal letters.
MixedPoly fsym_specialize(const FlaggedSym& f, const std::vector<Alphabet>& alphabets);
XL fsym_specialize_xl(const FlaggedSym& f, const std::vector<Alphabet>& alphabets);

// Evaluation at flag bounds 0 <= b_1 <= ... <= b_l <= n, i.e. at the
// consecutive alphabets X_i = {x_{b_{i-1}+1}, ..., x_{b_i}} (1-based).
XL fsym_bounds(const FlaggedSym& f, const std::vector<int>& b, int n);

// Nonsymmetric plethysm Pi_{t,x}: the invertible K-linear operator on
// K[x_1..x_n] sending prod_i h_{a_i}[x_i + (1-t)(x_1+...+x_{i-1})] to
// prod_i h_{a_i}(x_1..x_i).  nspleth_inv is the inverse map.
XL nspleth(const XL& p);
XL nspleth_inv(const XL& p);

// Independent route to Pi_{t,x} p for polynomial p: multiply by the truncated
// product prod_{i<j} sum_{k<=K} t^k (x_i/x_j)^k with K = deg p and take the
// polynomial part.  Terms whose exponent has a negative suffix sum have zero
// polynomial part, which justifies the truncation order.
XL nspleth_polpart_oracle(const XL& p);

// Flagged skew Schur function of shape lam/mu evaluated at flag bounds b
// (length = len(lam), weakly increasing, b_i <= n).  Two routes:
//   determinant: det( h_{lam_i - mu_j + j - i}(x_1..x_{b_i}) )
//   tableaux:    sum of x^T over semistandard fillings of lam/mu whose
//                row-i entries are at most b_i
// Raises InvalidShape unless mu fits inside lam.
XL flagged_schur_det(const Partition& lam, const Partition& mu, const std::vector<int>& b,
                     int n);
XL flagged_schur_tab(const Partition& lam, const Partition& mu, const std::vector<int>& b,
                     int n);

}  // namespace nsmac
