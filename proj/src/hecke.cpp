#include "nsmac/hecke.hpp"

#include <algorithm>
#include <mutex>

#include "nsmac/error.hpp"
#include "nsmac/weyl.hpp"

namespace nsmac {

XL hecke_T(int i, const XL& f) {
  check(i >= 0 && i + 1 < f.n, "IndexOutOfRange", "generator index out of range");
  XL sf = f.swap_vars(i);
  XL xi = XL::var(f.n, i), xj = XL::var(f.n, i + 1);
  QT t = QT::t(1);
  return t * sf + (QT(1) - t) * (xj * (sf - f)).exact_div(xj - xi);
}

XL hecke_T_inv(int i, const XL& f) {
  QT tinv = QT::t(-1);
  return tinv * (hecke_T(i, f) + f - QT::t(1) * f);
}

XL hecke_Tw(const Perm& w, XL f) {
  for (int i : reduced_word(w)) f = hecke_T(i, f);
  return f;
}

XL hecke_Tw_bar(const Perm& w, XL f) {
  // bar(T_w) = T_{w^{-1}}^{-1}; inverting the algebra product reverses the
  // application order of the letters
  std::vector<int> word = reduced_word(perm_inverse(w));
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = hecke_T_inv(*it, f);
  return f;
}

QT t_factorial_poly(const std::vector<int>& blocks) {
  QT out(1);
  for (int r : blocks)
    for (int k = 2; k <= r; k++) {
      QT bracket(0);
      for (int e = 0; e < k; e++) bracket += QT::t(e);
      out *= bracket;
    }
  return out;
}

namespace {

// sum of T_w f over the subgroup generated by gens, walking up the left weak
// order: T_{s_i w} f = T_i(T_w f) whenever the length goes up
XL symmetrize_gens(const std::vector<int>& gens, const XL& f) {
  std::map<Perm, XL> vals;
  Perm id = perm_identity(f.n);
  vals.emplace(id, f);
  XL total = f;
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (auto& w : frontier) {
      int lw = perm_length(w);
      for (int i : gens) {
        Perm sw = w;
        for (auto& v : sw) {
          if (v == i)
            v = i + 1;
          else if (v == i + 1)
            v = i;
        }
        if (perm_length(sw) != lw + 1 || vals.count(sw)) continue;
        XL g = hecke_T(i, vals.at(w));
        total += g;
        vals.emplace(sw, std::move(g));
        next.push_back(std::move(sw));
      }
    }
    frontier = std::move(next);
  }
  return total;
}

}  // namespace

XL hecke_symmetrize(const std::vector<int>& blocks, const XL& f, bool normalized) {
  int total = 0;
  for (int r : blocks) {
    check(r >= 1, "InternalError", "composition parts must be positive");
    total += r;
  }
  check(total == f.n, "InternalError", "composition must sum to the variable count");
  std::vector<int> gens;
  int offset = 0;
  for (int r : blocks) {
    for (int i = offset; i + 1 < offset + r; i++) gens.push_back(i);
    offset += r;
  }
  XL out = symmetrize_gens(gens, f);
  if (normalized) out = t_factorial_poly(blocks).inv() * out;
  return out;
}

XL hecke_symmetrize_interval(int a, int b, const XL& f, bool normalized) {
  check(0 <= a && a < b && b <= f.n, "IndexOutOfRange", "bad symmetrizer interval");
  std::vector<int> gens;
  for (int i = a; i + 1 < b; i++) gens.push_back(i);
  XL out = symmetrize_gens(gens, f);
  if (normalized) out = t_factorial_poly({b - a}).inv() * out;
  return out;
}

namespace {
std::mutex hl_mutex;
std::map<Exp, XL> E_cache, F_cache;
}  // namespace

XL hl_E(const Exp& lam) {
  check(!lam.empty(), "InternalError", "empty weight");
  {
    std::lock_guard<std::mutex> lock(hl_mutex);
    auto it = E_cache.find(lam);
    if (it != E_cache.end()) return it->second;
  }
  Exp dom = lam;
  std::sort(dom.begin(), dom.end(), std::greater<int>());
  Perm w = minimal_sorting_perm(lam);
  XL out = hecke_Tw_bar(w, XL::monomial((int)lam.size(), dom, QT(1)));
  out = QT::t(perm_length(w)) * out;
  std::lock_guard<std::mutex> lock(hl_mutex);
  return E_cache.emplace(lam, std::move(out)).first->second;
}

XL hl_F(const Exp& lam) {
  check(!lam.empty(), "InternalError", "empty weight");
  {
    std::lock_guard<std::mutex> lock(hl_mutex);
    auto it = F_cache.find(lam);
    if (it != F_cache.end()) return it->second;
  }
  Exp asc = lam;
  std::sort(asc.begin(), asc.end());
  Perm v = minimal_perm_from(asc, lam);
  XL out = hecke_Tw_bar(v, XL::monomial((int)lam.size(), asc, QT(1)));
  std::lock_guard<std::mutex> lock(hl_mutex);
  return F_cache.emplace(lam, std::move(out)).first->second;
}

std::map<Exp, QT> F_expand(const XL& f) { return expand_in_weight_basis(f, &hl_F, true); }

QT inner_t(const XL& f, const XL& g) {
  check(f.n == g.n, "InternalError", "variable count mismatch");
  int n = f.n;
  XL G = f * g;
  if (G.is_zero()) return QT(0);
  // Each geometric factor only ever raises an earlier variable against a
  // later one, so the largest power that can still reach the constant term
  // is bounded by the total exponent mass of G measured against 0.
  long D = 0;
  for (int v = 0; v < n; v++) {
    int lo = 0, hi = 0;
    for (auto& [e, c] : G.terms) lo = std::min(lo, e[v]), hi = std::max(hi, e[v]);
    D += hi - lo;
  }
  for (int i = 0; i < n; i++) {
    for (int j = i + 1; j < n; j++) {
      // (1 - u) / (1 - t u) = 1 + sum_{k>=1} (t^k - t^{k-1}) u^k, u = x_i/x_j
      XL factor(n);
      factor.terms[Exp(n, 0)] = QT(1);
      for (long k = 1; k <= D; k++) {
        Exp e(n, 0);
        e[i] = (int)k;
        e[j] = -(int)k;
        factor.terms[e] = QT::t((int)k) - QT::t((int)k - 1);
      }
      G = G * factor;
    }
    // no later factor touches x_0..x_i, so only terms already flat there
    // can contribute to the constant term
    XL pruned(n);
    for (auto& [e, c] : G.terms) {
      bool flat = true;
      for (int v = 0; v <= i && flat; v++) flat = (e[v] == 0);
      if (flat) pruned.terms.emplace(e, c);
    }
    G = std::move(pruned);
  }
  return G.coeff(Exp(n, 0));
}

}  // namespace nsmac
