#pragma once
#include <map>
#include <vector>

#include "nsmac/laurent.hpp"
#include "nsmac/perm.hpp"

namespace nsmac {

// (n-1, n-2, ..., 0)
Exp rho_weight(int n);
// Per block of sizes r: (0, -1, ..., 1-r_1, 0, -1, ..., 1-r_2, ...)
Exp rho_blocks(const std::vector<int>& r);

// Bruhat order on Z^n weights (phi-table comparison). False when degrees
// differ or lengths differ.
bool bruhat_leq(const Exp& lam, const Exp& mu);

// Total order refining Bruhat order, used for triangular expansions:
// compare |a|, then partial sums of the decreasing sort (lex), then the
// length of the minimal sorting permutation, then lex. Returns a < b.
bool atom_order_less(const Exp& a, const Exp& b);

// Isobaric divided difference on variables i, i+1 (0-based).
XL demazure(int i, const XL& f);
// pihat_i = pi_i - 1
XL demazure_hat(int i, const XL& f);

// Demazure character D_lam and atom A_lam, lam in Z^n. Cached.
XL demazure_char(const Exp& lam);
XL atom_poly(const Exp& lam);

// pi_{w0} on the variable block [a, b); full range by default.
XL weyl_symmetrize(const XL& f, int a, int b);
XL weyl_symmetrize(const XL& f);

// <f, g>_0: constant term of f g prod_{i<j} (1 - x_i/x_j).
QT inner0(const XL& f, const XL& g);
// Same pairing applied only over the variable block [a, b): multiplies by
// the block's product and keeps terms with zero block exponents (the block
// positions stay in the result with exponent 0).
XL inner0_block(const XL& F, int a, int b);

// Generic triangular expansion of f over a weight-indexed basis whose member
// at mu is monic with Bruhat-leading term x^mu: greedy stripping with a
// self-check, falling back to an exact linear solve over the Bruhat down-set
// of the support.
std::map<Exp, QT> expand_in_weight_basis(const XL& f, XL (*basis)(const Exp&),
                                         bool allow_negative);

// Expansion f = sum_mu c_mu A_mu. For polynomial f indices lie in N^n; the
// Laurent variant allows Z^n indices.
std::map<Exp, QT> atom_expand(const XL& f);
std::map<Exp, QT> atom_expand_laurent(const XL& f);
// Same for Demazure characters.
std::map<Exp, QT> dem_expand_laurent(const XL& f);

XL from_atoms(const std::map<Exp, QT>& coeffs, int n);

// Truncation of the atom expansion to indices in N^n.
XL pol_part(const XL& f);

}  // namespace nsmac
