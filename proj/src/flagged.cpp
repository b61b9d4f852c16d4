#include "nsmac/flagged.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <tuple>
#include <utility>

#include "nsmac/error.hpp"
#include "nsmac/partition.hpp"
#include "nsmac/perm.hpp"
#include "nsmac/symfun.hpp"
#include "nsmac/weyl.hpp"

namespace nsmac {

namespace {

std::mutex flag_mutex;

// h_k(x_1..x_i) over n variables
XL h_slot(int n, int i, int k) {
  static std::map<std::tuple<int, int, int>, XL> cache;
  if (k == 0) return XL::constant(n, QT(1));
  if (k < 0 || i == 0) return XL(n);
  std::lock_guard<std::mutex> lock(flag_mutex);
  auto key = std::make_tuple(n, i, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Alphabet A(n);
  for (int j = 0; j < i; j++) A.add_var(j);
  XL out = h_of_alphabet_xl(k, A);
  cache.emplace(key, out);
  return out;
}

// h_k[x_i + (1-t)(x_1 + ... + x_{i-1})] over n variables; i is 1-based
XL ht_slot(int n, int i, int k) {
  static std::map<std::tuple<int, int, int>, XL> cache;
  if (k == 0) return XL::constant(n, QT(1));
  if (k < 0 || i == 0) return XL(n);
  std::lock_guard<std::mutex> lock(flag_mutex);
  auto key = std::make_tuple(n, i, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Alphabet A(n);
  A.add_var(i - 1);
  for (int j = 0; j + 1 < i; j++) {
    A.add_var(j);
    A.add_var(j, -1, 0, 1);
  }
  XL out = h_of_alphabet_xl(k, A);
  cache.emplace(key, out);
  return out;
}

XL slot_product(const Exp& a, int n, bool twisted) {
  static std::map<std::tuple<int, Exp, bool>, XL> cache;
  Exp key = a;
  while (!key.empty() && key.back() == 0) key.pop_back();
  auto ck = std::make_tuple(n, std::move(key), twisted);
  {
    std::lock_guard<std::mutex> lock(flag_mutex);
    auto it = cache.find(ck);
    if (it != cache.end()) return it->second;
  }
  XL out = XL::constant(n, QT(1));
  for (size_t i = 0; i < a.size(); i++) {
    if (a[i] == 0) continue;
    out = out * (twisted ? ht_slot(n, (int)i + 1, a[i]) : h_slot(n, (int)i + 1, a[i]));
  }
  std::lock_guard<std::mutex> lock(flag_mutex);
  cache.emplace(std::move(ck), out);
  return out;
}

// order that compares exponents from the last variable down; both basis
// families have x^a as their unique maximal monomial under it
bool revlex_less(const Exp& a, const Exp& b) {
  for (int i = (int)a.size() - 1; i >= 0; i--)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

using FlagBasis = std::function<XL(const Exp&, int)>;

// dense linear solve for one homogeneous component, over all compositions of
// its degree; insurance for the greedy path
std::map<Exp, QT> solve_component(const XL& pd, int d, const FlagBasis& basis) {
  int n = pd.n;
  std::vector<Exp> cands = compositions_of(d, n);
  std::vector<XL> cols;
  cols.reserve(cands.size());
  std::map<Exp, size_t> rowidx;
  for (auto& a : cands) {
    cols.push_back(basis(a, n));
    for (auto& [e, c] : cols.back().terms) rowidx.emplace(e, rowidx.size());
  }
  for (auto& [e, c] : pd.terms) rowidx.emplace(e, rowidx.size());
  size_t rows = rowidx.size(), m = cands.size();
  std::vector<std::vector<QT>> M(rows, std::vector<QT>(m + 1, QT(0)));
  for (size_t j = 0; j < m; j++)
    for (auto& [e, c] : cols[j].terms) M[rowidx[e]][j] = c;
  for (auto& [e, c] : pd.terms) M[rowidx[e]][m] = c;

  std::vector<size_t> pivot_col(rows, m + 1);
  size_t rank = 0;
  for (size_t j = 0; j < m && rank < rows; j++) {
    size_t p = rank;
    while (p < rows && M[p][j].is_zero()) p++;
    if (p == rows) continue;
    std::swap(M[p], M[rank]);
    QT inv = M[rank][j].inv();
    for (size_t jj = j; jj <= m; jj++) M[rank][jj] = M[rank][jj] * inv;
    for (size_t i = 0; i < rows; i++) {
      if (i == rank || M[i][j].is_zero()) continue;
      QT f = M[i][j];
      for (size_t jj = j; jj <= m; jj++) M[i][jj] = M[i][jj] - f * M[rank][jj];
    }
    pivot_col[rank] = j;
    rank++;
  }
  for (size_t i = rank; i < rows; i++)
    check(M[i][m].is_zero(), "InternalError", "flagged basis expansion is inconsistent");

  std::map<Exp, QT> out;
  XL recon(n);
  for (size_t i = 0; i < rank; i++) {
    if (M[i][m].is_zero()) continue;
    out[cands[pivot_col[i]]] = M[i][m];
    recon = recon + M[i][m] * cols[pivot_col[i]];
  }
  check(recon == pd, "InternalError", "flagged basis expansion failed to reassemble");
  return out;
}

std::map<Exp, QT> expand_flagged(const XL& f, const FlagBasis& basis) {
  check(f.is_polynomial(), "NotPolynomial", "flagged expansion needs a polynomial");
  int n = f.n;
  std::map<int, XL> comps;
  for (auto& [e, c] : f.terms) {
    int d = 0;
    for (int v : e) d += v;
    comps.try_emplace(d, XL(n)).first->second.add_term(e, c);
  }
  std::map<Exp, QT> out;
  for (auto& [d, pd] : comps) {
    XL rem = pd;
    std::map<Exp, QT> got;
    bool ok = true;
    while (ok && !rem.is_zero()) {
      auto lead = rem.terms.begin();
      for (auto it = rem.terms.begin(); it != rem.terms.end(); ++it)
        if (revlex_less(lead->first, it->first)) lead = it;
      Exp mu = lead->first;
      QT c = lead->second;
      rem = rem - c * basis(mu, n);
      for (auto& [e, cc] : rem.terms)
        if (!revlex_less(e, mu)) {
          ok = false;
          break;
        }
      got.emplace(mu, c);
    }
    if (!ok) got = solve_component(pd, d, basis);
    for (auto& [a, c] : got) out.emplace(a, c);
  }
  return out;
}

void validate_shape(const Partition& lam, Partition& mu) {
  for (size_t i = 0; i < lam.size(); i++) {
    check(lam[i] >= 0 && (i == 0 || lam[i] <= lam[i - 1]), "InvalidShape",
          "outer shape is not a partition");
  }
  check(mu.size() <= lam.size(), "InvalidShape", "inner shape has more rows than outer");
  for (size_t i = 0; i < mu.size(); i++) {
    check(mu[i] >= 0 && (i == 0 || mu[i] <= mu[i - 1]), "InvalidShape",
          "inner shape is not a partition");
    check(mu[i] <= lam[i], "InvalidShape", "inner shape does not fit inside outer");
  }
  mu.resize(lam.size(), 0);
}

void validate_bounds(const std::vector<int>& b, size_t l, int n) {
  check(b.size() == l, "InvalidShape", "one flag bound per row is required");
  for (size_t i = 0; i < b.size(); i++)
    check(b[i] >= 0 && b[i] <= n && (i == 0 || b[i] >= b[i - 1]), "InvalidShape",
          "flag bounds must increase weakly and stay within the variable count");
}

}  // namespace

void FlaggedSym::add(const Exp& a, const QT& c) {
  if (c.is_zero()) return;
  Exp key = a;
  while (!key.empty() && key.back() == 0) key.pop_back();
  check((int)key.size() <= l, "IndexOutOfRange", "coordinate key has more slots than l");
  auto it = coords.find(key);
  if (it == coords.end()) {
    coords.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) coords.erase(it);
  }
}

XL fsym_h(const Exp& a, int n) {
  check((int)a.size() <= n, "IndexOutOfRange", "more slots than variables");
  return slot_product(a, n, false);
}

XL fsym_htilde(const Exp& a, int n) {
  check((int)a.size() <= n, "IndexOutOfRange", "more slots than variables");
  return slot_product(a, n, true);
}

FlaggedSym fsym_from_poly(const XL& p) {
  auto coords = expand_flagged(p, [](const Exp& a, int n) { return fsym_h(a, n); });
  FlaggedSym out;
  out.l = p.n;
  for (auto& [a, c] : coords) out.add(a, c);
  return out;
}

XL fsym_to_poly(const FlaggedSym& f, int n) {
  XL out(n);
  for (auto& [a, c] : f.coords) out = out + c * fsym_h(a, n);
  return out;
}

MixedPoly fsym_specialize(const FlaggedSym& f, const std::vector<Alphabet>& alphabets) {
  int formal = 0;
  for (auto& A : alphabets)
    if (A.has_formal()) formal++;
  check(formal <= 1, "MultipleYAlphabets", "at most one alphabet may involve Y");
  size_t need = 0;
  for (auto& [a, c] : f.coords) need = std::max(need, a.size());
  check(alphabets.size() >= need, "IndexOutOfRange", "fewer alphabets than occupied slots");
  int nx = alphabets.empty() ? 0 : alphabets[0].nx;
  for (auto& A : alphabets)
    check(A.nx == nx, "InternalError", "alphabets range over different variable sets");

  // prefix unions X_1 + ... + X_i, extended once per slot
  std::vector<Alphabet> prefix;
  Alphabet run(nx);
  for (auto& A : alphabets) {
    run.append(A);
    prefix.push_back(run);
  }

  MixedPoly out(nx);
  for (auto& [a, c] : f.coords) {
    MixedPoly term = MixedPoly::from_xl(XL::constant(nx, QT(1)));
    for (size_t i = 0; i < a.size(); i++)
      if (a[i] != 0) term = term * h_of_alphabet(a[i], prefix[i]);
    out = out + term * c;
  }
  return out;
}

XL fsym_specialize_xl(const FlaggedSym& f, const std::vector<Alphabet>& alphabets) {
  for (auto& A : alphabets)
    check(!A.has_formal(), "InternalError", "formal letters need fsym_specialize");
  size_t need = 0;
  for (auto& [a, c] : f.coords) need = std::max(need, a.size());
  check(alphabets.size() >= need, "IndexOutOfRange", "fewer alphabets than occupied slots");
  int nx = alphabets.empty() ? 0 : alphabets[0].nx;
  for (auto& A : alphabets)
    check(A.nx == nx, "InternalError", "alphabets range over different variable sets");

  std::vector<Alphabet> prefix;
  Alphabet run(nx);
  for (auto& A : alphabets) {
    run.append(A);
    prefix.push_back(run);
  }
  XL out(nx);
  for (auto& [a, c] : f.coords) {
    XL term = XL::constant(nx, c);
    for (size_t i = 0; i < a.size(); i++)
      if (a[i] != 0) term = term * h_of_alphabet_xl(a[i], prefix[i]);
    out = out + term;
  }
  return out;
}

XL fsym_bounds(const FlaggedSym& f, const std::vector<int>& b, int n) {
  size_t need = 0;
  for (auto& [a, c] : f.coords) need = std::max(need, a.size());
  validate_bounds(b, b.size(), n);
  check(b.size() >= need, "IndexOutOfRange", "fewer flag bounds than occupied slots");
  // consecutive blocks union to prefixes: X_1 + ... + X_i = x_1..x_{b_i}
  XL out(n);
  for (auto& [a, c] : f.coords) {
    XL term = XL::constant(n, c);
    for (size_t i = 0; i < a.size(); i++)
      if (a[i] != 0) term = term * h_slot(n, b[i], a[i]);
    out = out + term;
  }
  return out;
}

XL nspleth(const XL& p) {
  auto coords = expand_flagged(p, [](const Exp& a, int n) { return fsym_htilde(a, n); });
  XL out(p.n);
  for (auto& [a, c] : coords) out = out + c * fsym_h(a, p.n);
  return out;
}

XL nspleth_inv(const XL& p) {
  auto coords = expand_flagged(p, [](const Exp& a, int n) { return fsym_h(a, n); });
  XL out(p.n);
  for (auto& [a, c] : coords) out = out + c * fsym_htilde(a, p.n);
  return out;
}

XL nspleth_polpart_oracle(const XL& p) {
  check(p.is_polynomial(), "NotPolynomial", "oracle needs a polynomial");
  int n = p.n;
  int K = std::max(0, p.max_total_deg());
  // any factor term x_i^k x_j^{-k} (i < j) only lowers suffix sums, so a term
  // whose exponent already has a negative suffix sum can never recover a
  // nonzero polynomial part; prune as we go
  auto prune = [&](const XL& f) {
    XL out(n);
    for (auto& [e, c] : f.terms) {
      long s = 0;
      bool keep = true;
      for (int v = n - 1; v >= 0; v--) {
        s += e[v];
        if (s < 0) {
          keep = false;
          break;
        }
      }
      if (keep) out.add_term(e, c);
    }
    return out;
  };
  XL acc = p;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) {
      XL factor(n);
      Exp e(n, 0);
      for (int k = 0; k <= K; k++) {
        e[i] = k;
        e[j] = -k;
        factor.add_term(e, QT::t(k));
      }
      acc = prune(acc * factor);
    }
  return pol_part(acc);
}

namespace {

// product of h_{k}(x_1..x_b) factors, memoized on the factor multiset; the
// same products recur across shapes and permutations
XL h_slot_product(int n, std::vector<std::pair<int, int>> factors) {
  static std::map<std::pair<int, std::vector<std::pair<int, int>>>, XL> cache;
  std::sort(factors.begin(), factors.end());
  auto key = std::make_pair(n, std::move(factors));
  {
    std::lock_guard<std::mutex> lock(flag_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  XL out = XL::constant(n, QT(1));
  for (auto& [b, k] : key.second) out = out * h_slot(n, b, k);
  std::lock_guard<std::mutex> lock(flag_mutex);
  cache.emplace(std::move(key), out);
  return out;
}

}  // namespace

XL flagged_schur_det(const Partition& lam, const Partition& mu0, const std::vector<int>& b,
                     int n) {
  Partition mu = mu0;
  validate_shape(lam, mu);
  validate_bounds(b, lam.size(), n);
  int l = (int)lam.size();
  XL out(n);
  for (auto& w : all_perms(l)) {
    std::vector<std::pair<int, int>> factors;
    bool zero = false;
    for (int i = 0; i < l && !zero; i++) {
      int k = lam[i] - mu[w[i]] + w[i] - i;
      if (k < 0) zero = true;
      else if (k > 0) factors.push_back({b[i], k});
    }
    if (zero) continue;
    XL term = h_slot_product(n, std::move(factors));
    out = perm_length(w) % 2 ? out - term : out + term;
  }
  return out;
}

XL flagged_schur_tab(const Partition& lam, const Partition& mu0, const std::vector<int>& b,
                     int n) {
  Partition mu = mu0;
  validate_shape(lam, mu);
  validate_bounds(b, lam.size(), n);
  int l = (int)lam.size();
  XL out(n);
  // cells in reading order; entries are 1-based values <= b_row
  std::vector<std::vector<int>> T(l);
  for (int r = 0; r < l; r++) T[r].assign(lam[r], 0);
  Exp wt(n, 0);
  std::function<void(int, int)> fill = [&](int r, int c) {
    while (r < l && c >= lam[r]) {
      r++;
      c = r < l ? mu[r] : 0;
    }
    if (r == l) {
      out.add_term(wt, QT(1));
      return;
    }
    int lo = 1;
    if (c > mu[r]) lo = std::max(lo, T[r][c - 1]);
    if (r > 0 && c >= mu[r - 1] && c < lam[r - 1]) lo = std::max(lo, T[r - 1][c] + 1);
    for (int v = lo; v <= b[r]; v++) {
      T[r][c] = v;
      wt[v - 1]++;
      fill(r, c + 1);
      wt[v - 1]--;
    }
  };
  fill(0, l ? mu[0] : 0);
  return out;
}

}  // namespace nsmac
