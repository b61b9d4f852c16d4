#pragma once
#include <map>
#include <vector>

#include "nsmac/laurent.hpp"
#include "nsmac/perm.hpp"

namespace nsmac {

// Demazure-Lusztig operator T_i f = t s_i(f) + (1-t) x_{i+1}(s_i(f)-f)/(x_{i+1}-x_i),
// satisfying (T_i - t)(T_i + 1) = 0 and the braid relations. Indices 0-based;
// T_i acts on x_i, x_{i+1}.
XL hecke_T(int i, const XL& f);
// T_i^{-1} = t^{-1}(T_i + 1 - t)
XL hecke_T_inv(int i, const XL& f);

// T_w along a reduced word; independent of the word by the braid relations.
XL hecke_Tw(const Perm& w, XL f);
// bar(T_w) = T_{w^{-1}}^{-1} where bar inverts t and every x_i.
// Satisfies bar(T_w f) = hecke_Tw_bar(w, bar(f)).
XL hecke_Tw_bar(const Perm& w, XL f);

// [r]_t! ... product over parts of the composition r.
QT t_factorial_poly(const std::vector<int>& blocks);

// S_r f = sum over the Young subgroup S_{r_1} x ... x S_{r_k} of T_w f, for a
// composition r of the variable count. normalized divides by [r]_t!, making
// the operator idempotent with image the S_r-invariants.
XL hecke_symmetrize(const std::vector<int>& blocks, const XL& f, bool normalized);
// Same for the single block acting on variables a..b-1.
XL hecke_symmetrize_interval(int a, int b, const XL& f, bool normalized);

// Nonsymmetric Hall-Littlewood polynomials in the t^{-1} convention:
//   E_lam(x;t^{-1}) = t^{l(w)} bar(T_w) x^{lam+}   (any w with w(lam+) = lam),
//   F_lam(x;t^{-1}) = bar(T_v) x^{lam-}            (v minimal with v(lam-) = lam),
// lam+ / lam- the decreasing / increasing rearrangements. Both are cached.
XL hl_E(const Exp& lam);
XL hl_F(const Exp& lam);

// Expansion in the F basis (triangular stripping with linear-solve fallback).
std::map<Exp, QT> F_expand(const XL& f);

// <f, g>_t = constant term of f g prod_{i<j} (1 - x_i/x_j)/(1 - t x_i/x_j),
// expanding each geometric factor to a provably sufficient order. The E and
// bar(F) families are dual for this pairing, and T_i is self-adjoint.
QT inner_t(const XL& f, const XL& g);

}  // namespace nsmac
