#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "nsmac/error.hpp"
#include "nsmac/partition.hpp"
#include "nsmac/perm.hpp"
#include "nsmac/symfun.hpp"
#include "nsmac/weyl.hpp"

using namespace nsmac;

namespace {

XL random_poly(std::mt19937& rng, int n, int maxdeg, int nterms, bool laurent = false) {
  std::uniform_int_distribution<int> expd(laurent ? -maxdeg : 0, maxdeg);
  std::uniform_int_distribution<int> coeffd(-3, 3);
  std::uniform_int_distribution<int> tpow(0, 1);
  XL f(n);
  for (int k = 0; k < nterms; k++) {
    Exp e(n);
    for (int i = 0; i < n; i++) e[i] = expd(rng);
    f.add_term(e, QT(coeffd(rng)) * QT::t(tpow(rng)));
  }
  return f;
}

// Omega[sum_{0<=i<=j<l} x_i/z_j] over 2l variables (x block, then z block),
// truncated to total x-degree <= D.
XL triangular_kernel(int l, int D) {
  int N = 2 * l;
  XL K = XL::constant(N, QT(1));
  for (int i = 0; i < l; i++)
    for (int j = i; j < l; j++) {
      XL geom(N);
      for (int k = 0; k <= D; k++) {
        Exp e(N, 0);
        e[i] = k;
        e[l + j] = -k;
        geom.add_term(e, QT(1));
      }
      K = K * geom;
      XL K2(N);
      for (auto& [e, c] : K.terms) {
        int dx = 0;
        for (int v = 0; v < l; v++) dx += e[v];
        if (dx <= D) K2.add_term(e, c);
      }
      K = K2;
    }
  return K;
}

// <f(z), Omega[sum_{i<=j} x_i/z_j]>_0 with the pairing in the z block.
XL kernel_pairing(const XL& f, int D) {
  int l = f.n, N = 2 * l;
  XL fz(N);
  for (auto& [e, c] : f.terms) {
    Exp e2(N, 0);
    for (int i = 0; i < l; i++) e2[l + i] = e[i];
    fz.add_term(e2, c);
  }
  XL G = inner0_block(fz * triangular_kernel(l, D), l, N);
  XL out(l);
  for (auto& [e, c] : G.terms) out.add_term(Exp(e.begin(), e.begin() + l), c);
  return out;
}

std::vector<Exp> weights_up_to(int n, int maxdeg) {
  std::vector<Exp> out;
  for (int d = 0; d <= maxdeg; d++)
    for (auto& mu : compositions_of(d, n)) out.push_back(mu);
  return out;
}

}  // namespace

TEST_CASE("bruhat order on weights") {
  CHECK(bruhat_leq({2, 1}, {2, 1}));
  CHECK_FALSE(bruhat_leq({2, 1}, {2, 2}));  // degree mismatch

  // dominant is minimal in its orbit
  CHECK(bruhat_leq({2, 1}, {1, 2}));
  CHECK_FALSE(bruhat_leq({1, 2}, {2, 1}));
  CHECK(bruhat_leq({2, 0}, {0, 2}));

  // across orbits
  CHECK(bruhat_leq({1, 1}, {2, 0}));
  CHECK(bruhat_leq({1, 1}, {0, 2}));
  CHECK_FALSE(bruhat_leq({2, 0}, {1, 1}));
  CHECK(bruhat_leq({2, 1}, {0, 3}));
  CHECK_FALSE(bruhat_leq({0, 3}, {2, 1}));

  // shift invariance
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int rep = 0; rep < 200; rep++) {
    int n = 2 + (int)(rng() % 2);
    Exp a(n), b(n);
    for (int i = 0; i < n; i++) a[i] = d(rng), b[i] = d(rng);
    for (int c : {-2, 1, 5}) {
      Exp ac = a, bc = b;
      for (int i = 0; i < n; i++) ac[i] += c, bc[i] += c;
      CHECK(bruhat_leq(a, b) == bruhat_leq(ac, bc));
    }
  }
}

TEST_CASE("bruhat order vs permutation bruhat on regular orbits") {
  for (Exp dom : {Exp{2, 1, 0}, Exp{5, 3, 1}}) {
    auto perms = all_perms(3);
    for (auto& u : perms)
      for (auto& w : perms)
        CHECK(bruhat_leq(perm_apply(u, dom), perm_apply(w, dom)) == perm_bruhat_leq(u, w));
  }
}

TEST_CASE("bruhat order restricted to dominant weights is dominance") {
  for (int d = 1; d <= 6; d++) {
    auto parts = partitions_of_maxlen(d, 3);
    for (auto& la : parts)
      for (auto& mu : parts) {
        Exp a(la.begin(), la.end()), b(mu.begin(), mu.end());
        a.resize(3, 0);
        b.resize(3, 0);
        CHECK(bruhat_leq(a, b) == dominance_leq(la, mu));
      }
  }
}

TEST_CASE("atom supports lie below the index") {
  for (auto& mu : weights_up_to(3, 4)) {
    XL A = atom_poly(mu);
    for (auto& [e, c] : A.terms) CHECK(bruhat_leq(e, mu));
    // and the stripping order refines Bruhat
    for (auto& nu : weights_up_to(3, 4))
      if (nu != mu && bruhat_leq(nu, mu)) CHECK(atom_order_less(nu, mu));
  }
}

TEST_CASE("divided differences") {
  XL x1 = XL::var(3, 0), x2 = XL::var(3, 1), x3 = XL::var(3, 2);
  // pi_1 (x1^2 x2 + x1^2 x3)
  XL f = x1 * x1 * x2 + x1 * x1 * x3;
  XL expect = x1 * x1 * x2 + x1 * x1 * x3 + x1 * x2 * x2 + x1 * x2 * x3 + x2 * x2 * x3;
  CHECK(demazure(0, f) == expect);

  // symmetric input is fixed
  XL sym = x1 * x2 + x1 + x2;
  CHECK(demazure(0, sym) == sym);

  // pihat_1 x1 = x2 at n=2
  CHECK(demazure_hat(0, XL::var(2, 0)) == XL::var(2, 1));

  std::mt19937 rng(424242);
  for (int rep = 0; rep < 6; rep++) {
    int n = 3 + (int)(rng() % 2);
    XL g = random_poly(rng, n, 3, 5);
    for (int i = 0; i + 1 < n; i++) {
      CHECK(demazure(i, demazure(i, g)) == demazure(i, g));
      XL h = demazure_hat(i, g);
      CHECK(demazure_hat(i, h) == -h);
    }
    for (int i = 0; i + 2 < n; i++) {
      CHECK(demazure(i, demazure(i + 1, demazure(i, g))) ==
            demazure(i + 1, demazure(i, demazure(i + 1, g))));
      CHECK(demazure_hat(i, demazure_hat(i + 1, demazure_hat(i, g))) ==
            demazure_hat(i + 1, demazure_hat(i, demazure_hat(i + 1, g))));
    }
  }
}

TEST_CASE("characters and atoms") {
  // dominant index: both reduce to the monomial
  CHECK(atom_poly({2, 0}) == XL::monomial(2, {2, 0}, QT(1)));
  CHECK(demazure_char({3, 1, 0}) == XL::monomial(3, {3, 1, 0}, QT(1)));

  // D_lambda as the sum of atoms over w_mu <= w_lambda in the orbit
  for (auto& la : weights_up_to(3, 4)) {
    Perm wl = minimal_sorting_perm(la);
    Exp dom = la;
    std::sort(dom.begin(), dom.end(), std::greater<int>());
    XL sum(3);
    Exp mu = dom;
    std::sort(mu.begin(), mu.end());
    do {
      if (perm_bruhat_leq(minimal_sorting_perm(mu), wl)) sum += atom_poly(mu);
    } while (std::next_permutation(mu.begin(), mu.end()));
    CHECK(demazure_char(la) == sum);
  }

  // atom at the antidominant rearrangement of a regular dominant weight
  Exp lam = {5, 2, 0};  // (3,1,0) + rho
  XL lhs = atom_poly({0, 2, 5});
  XL rhs = XL::monomial(3, {0, 1, 2}, QT(1)) * SymFun::s({3, 1}).to_variables(3);
  CHECK(lhs == rhs);
}

TEST_CASE("pairing and dual bases") {
  CHECK(inner0(XL::constant(1, QT(1)), XL::constant(1, QT(1))) == QT(1));
  CHECK(inner0(XL::var(2, 0), XL::monomial(2, {-1, 0}, QT(1))) == QT(1));

  auto all = weights_up_to(3, 3);
  for (auto& la : all)
    for (auto& mu : all) {
      Exp neg(mu.size());
      for (size_t i = 0; i < mu.size(); i++) neg[i] = -mu[i];
      QT v = inner0(demazure_char(la), atom_poly(neg));
      CHECK(v == QT(la == mu ? 1 : 0));
    }
}

TEST_CASE("atom expansion") {
  for (auto& mu : weights_up_to(3, 3)) {
    auto ex = atom_expand(atom_poly(mu));
    CHECK(ex.size() == 1);
    CHECK(ex.count(mu) == 1);
    CHECK(ex.at(mu) == QT(1));
  }

  std::mt19937 rng(90210);
  auto all = weights_up_to(3, 4);
  std::uniform_int_distribution<int> coeffd(-2, 2);
  for (int rep = 0; rep < 5; rep++) {
    std::map<Exp, QT> want;
    XL f(3);
    for (int k = 0; k < 6; k++) {
      Exp mu = all[rng() % all.size()];
      QT c = QT(coeffd(rng)) + QT::t() * QT(coeffd(rng));
      if (c.is_zero()) continue;
      auto& cell = want[mu];
      cell += c;
      if (cell.is_zero()) want.erase(mu);
      f += c * atom_poly(mu);
    }
    CHECK(atom_expand(f) == want);
    CHECK(from_atoms(atom_expand(f), 3) == f);
  }
}

TEST_CASE("polynomial part") {
  // x1^{-1} x2 = A_{(-1,1)} - A_{(0,0)}, so the polynomial part is -1
  XL f = XL::monomial(2, {-1, 1}, QT(1));
  CHECK(pol_part(f) == XL::constant(2, QT(-1)));

  CHECK(pol_part(XL::monomial(3, {2, 0, 1}, QT(1))) == XL::monomial(3, {2, 0, 1}, QT(1)));

  // (x1 x2^{-1} x3 + x1)_pol = 0: the first term is the atom A_{(1,-1,1)}
  XL g = XL::monomial(3, {1, -1, 1}, QT(1)) + XL::var(3, 0);
  CHECK(pol_part(g).is_zero());

  // kernel formula <f(z), Omega[sum_{i<=j} x_i/z_j]>_0 computes pol_part
  std::mt19937 rng(777);
  for (int rep = 0; rep < 6; rep++) {
    XL h = random_poly(rng, 2, 2, 4, true);
    int D = std::max(0, h.max_total_deg()) + 2;
    CHECK(kernel_pairing(h, D) == pol_part(h));
  }
}

TEST_CASE("cauchy reproducing kernel") {
  std::mt19937 rng(1000003);
  for (int n : {2, 3})
    for (int rep = 0; rep < 3; rep++) {
      XL f = random_poly(rng, n, 2, 4);
      CHECK(kernel_pairing(f, f.max_total_deg()) == f);
    }
}

TEST_CASE("weyl symmetrization") {
  // full symmetrization of a dominant monomial is the Schur polynomial
  CHECK(weyl_symmetrize(XL::monomial(3, {2, 1, 0}, QT(1))) == SymFun::s({2, 1}).to_variables(3));

  // atoms symmetrize to the character or to zero
  for (auto& mu : weights_up_to(3, 3)) {
    Exp dom = mu;
    std::sort(dom.begin(), dom.end(), std::greater<int>());
    XL got = weyl_symmetrize(atom_poly(mu));
    if (mu == dom)
      CHECK(got == weyl_symmetrize(XL::monomial(3, mu, QT(1))));
    else
      CHECK(got.is_zero());
  }

  // agreement with the alternating-sum formula (numerator over Vandermonde)
  std::mt19937 rng(31415);
  XL vandermonde(3);
  {
    XL x1 = XL::var(3, 0), x2 = XL::var(3, 1), x3 = XL::var(3, 2);
    vandermonde = (x1 - x2) * (x1 - x3) * (x2 - x3);
  }
  for (int rep = 0; rep < 4; rep++) {
    XL f = random_poly(rng, 3, 3, 4, true);
    XL num(3);
    for (auto& w : all_perms(3)) {
      XL term = (XL::monomial(3, rho_weight(3), QT(1)) * f).permute(w);
      num += perm_length(w) % 2 ? -term : term;
    }
    CHECK(weyl_symmetrize(f) == num.exact_div(vandermonde));
  }

  // pibold pi_w = pibold
  for (int rep = 0; rep < 4; rep++) {
    XL f = random_poly(rng, 3, 3, 4);
    auto perms = all_perms(3);
    auto& w = perms[rng() % perms.size()];
    XL g = f;
    for (int i : reduced_word(w)) g = demazure(i, g);
    CHECK(weyl_symmetrize(g) == weyl_symmetrize(f));
  }
}

TEST_CASE("atoms under substitution of zero") {
  for (auto& mu : weights_up_to(3, 4))
    for (int k = 0; k < 3; k++) {
      XL got = atom_poly(mu).substitute_zero(k);
      if (mu[k] > 0) {
        CHECK(got.is_zero());
      } else {
        Exp eta;
        for (int i = 0; i < 3; i++)
          if (i != k) eta.push_back(mu[i]);
        CHECK(got == atom_poly(eta));
      }
    }
}
