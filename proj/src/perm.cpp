#include "nsmac/perm.hpp"

#include <algorithm>
#include <numeric>

#include "nsmac/error.hpp"

namespace nsmac {

Perm perm_identity(int n) {
  Perm w(n);
  std::iota(w.begin(), w.end(), 0);
  return w;
}

Perm perm_w0(int n) {
  Perm w(n);
  for (int i = 0; i < n; i++) w[i] = n - 1 - i;
  return w;
}

bool perm_is_identity(const Perm& w) {
  for (size_t i = 0; i < w.size(); i++)
    if (w[i] != (int)i) return false;
  return true;
}

Perm perm_inverse(const Perm& w) {
  Perm v(w.size());
  for (size_t i = 0; i < w.size(); i++) v[w[i]] = (int)i;
  return v;
}

Perm perm_compose(const Perm& u, const Perm& v) {
  Perm w(u.size());
  for (size_t i = 0; i < u.size(); i++) w[i] = u[v[i]];
  return w;
}

int perm_length(const Perm& w) {
  int inv = 0;
  for (size_t i = 0; i < w.size(); i++)
    for (size_t j = i + 1; j < w.size(); j++)
      if (w[i] > w[j]) inv++;
  return inv;
}

std::vector<int> reduced_word(Perm w) {
  // Each recorded descent i gives w <- w s_i (swap entries i, i+1),
  // shortening by one; the record applied first-to-last rebuilds w.
  std::vector<int> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t i = 0; i + 1 < w.size(); i++)
      if (w[i] > w[i + 1]) {
        word.push_back((int)i);
        std::swap(w[i], w[i + 1]);
        moved = true;
        break;
      }
  }
  return word;
}

bool perm_bruhat_leq(const Perm& u, const Perm& w) {
  check(u.size() == w.size(), "SizeMismatch", "permutations of different degree");
  size_t n = u.size();
  std::vector<int> a, b;
  for (size_t k = 0; k < n; k++) {
    a.insert(std::upper_bound(a.begin(), a.end(), u[k]), u[k]);
    b.insert(std::upper_bound(b.begin(), b.end(), w[k]), w[k]);
    for (size_t j = 0; j <= k; j++)
      if (a[j] > b[j]) return false;
  }
  return true;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm w = perm_identity(n);
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Exp perm_apply(const Perm& w, const Exp& mu) {
  check(w.size() == mu.size(), "SizeMismatch", "permutation/weight length mismatch");
  Exp out(mu.size());
  for (size_t i = 0; i < mu.size(); i++) out[w[i]] = mu[i];
  return out;
}

Perm minimal_perm_from(const Exp& base, const Exp& target) {
  size_t n = base.size();
  check(target.size() == n, "InternalError", "weight length mismatch");
  // w^{-1}(j) = earliest unused slot of base holding target[j]; equal values
  // keep their relative order, which makes w minimal in its coset.
  Perm w(n);
  std::vector<bool> used(n, false);
  for (size_t j = 0; j < n; j++) {
    size_t p = 0;
    while (p < n && (used[p] || base[p] != target[j])) p++;
    check(p < n, "InternalError", "weights are not rearrangements of each other");
    used[p] = true;
    w[p] = (int)j;
  }
  return w;
}

Perm minimal_sorting_perm(const Exp& mu) {
  Exp dom = mu;
  std::sort(dom.begin(), dom.end(), std::greater<int>());
  return minimal_perm_from(dom, mu);
}

}  // namespace nsmac
