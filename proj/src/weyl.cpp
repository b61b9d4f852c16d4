#include "nsmac/weyl.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

#include "nsmac/error.hpp"

namespace nsmac {

Exp rho_weight(int n) {
  Exp r(n);
  for (int i = 0; i < n; i++) r[i] = n - 1 - i;
  return r;
}

Exp rho_blocks(const std::vector<int>& r) {
  Exp out;
  for (int b : r)
    for (int i = 0; i < b; i++) out.push_back(-i);
  return out;
}

bool bruhat_leq(const Exp& lam, const Exp& mu) {
  if (lam.size() != mu.size()) return false;
  long sa = std::accumulate(lam.begin(), lam.end(), 0L);
  long sb = std::accumulate(mu.begin(), mu.end(), 0L);
  if (sa != sb) return false;
  int m = (int)lam.size();
  if (m == 0) return true;
  int lo = lam[0], hi = lam[0];
  for (int v : lam) lo = std::min(lo, v), hi = std::max(hi, v);
  for (int v : mu) lo = std::min(lo, v), hi = std::max(hi, v);
  // phi_S(k,i) counts the points of S = {(k',i') : k' <= w_{i'}} weakly above
  // (k,i) in lex order; values at k < lo agree for equal degree and vanish at
  // k > hi, so the window below is exhaustive.
  for (int k = lo; k <= hi; k++)
    for (int i = 0; i < m; i++) {
      long pl = 0, pm = 0;
      for (int ii = 0; ii < m; ii++) {
        pl += std::max(0, lam[ii] - k) + (ii >= i && lam[ii] >= k ? 1 : 0);
        pm += std::max(0, mu[ii] - k) + (ii >= i && mu[ii] >= k ? 1 : 0);
      }
      if (pl > pm) return false;
    }
  return true;
}

namespace {

std::vector<long> desc_partial_sums(const Exp& a) {
  Exp s = a;
  std::sort(s.begin(), s.end(), std::greater<int>());
  std::vector<long> p(s.size());
  long acc = 0;
  for (size_t i = 0; i < s.size(); i++) p[i] = (acc += s[i]);
  return p;
}

}  // namespace

bool atom_order_less(const Exp& a, const Exp& b) {
  long sa = std::accumulate(a.begin(), a.end(), 0L);
  long sb = std::accumulate(b.begin(), b.end(), 0L);
  if (sa != sb) return sa < sb;
  auto pa = desc_partial_sums(a), pb = desc_partial_sums(b);
  if (pa != pb) return pa < pb;
  int la = perm_length(minimal_sorting_perm(a));
  int lb = perm_length(minimal_sorting_perm(b));
  if (la != lb) return la < lb;
  return a < b;
}

XL demazure(int i, const XL& f) {
  check(i >= 0 && i + 1 < f.n, "IndexOutOfRange", "divided difference index");
  XL xi = XL::var(f.n, i), xj = XL::var(f.n, i + 1);
  return (xi * f - xj * f.swap_vars(i)).exact_div(xi - xj);
}

XL demazure_hat(int i, const XL& f) { return demazure(i, f) - f; }

namespace {

std::mutex key_cache_mutex;
std::map<Exp, XL> atom_cache, char_cache;

XL key_poly_impl(const Exp& lam, bool hat) {
  Exp dom = lam;
  std::sort(dom.begin(), dom.end(), std::greater<int>());
  XL f = XL::monomial((int)lam.size(), lam == dom ? lam : dom, QT(1));
  for (int i : reduced_word(minimal_sorting_perm(lam)))
    f = hat ? demazure_hat(i, f) : demazure(i, f);
  return f;
}

}  // namespace

XL atom_poly(const Exp& lam) {
  {
    std::lock_guard<std::mutex> lk(key_cache_mutex);
    auto it = atom_cache.find(lam);
    if (it != atom_cache.end()) return it->second;
  }
  XL f = key_poly_impl(lam, true);
  std::lock_guard<std::mutex> lk(key_cache_mutex);
  return atom_cache.emplace(lam, f).first->second;
}

XL demazure_char(const Exp& lam) {
  {
    std::lock_guard<std::mutex> lk(key_cache_mutex);
    auto it = char_cache.find(lam);
    if (it != char_cache.end()) return it->second;
  }
  XL f = key_poly_impl(lam, false);
  std::lock_guard<std::mutex> lk(key_cache_mutex);
  return char_cache.emplace(lam, f).first->second;
}

XL weyl_symmetrize(const XL& f, int a, int b) {
  check(0 <= a && a <= b && b <= f.n, "IndexOutOfRange", "symmetrization range");
  XL g = f;
  for (int k = a + 1; k < b; k++)
    for (int j = k - 1; j >= a; j--) g = demazure(j, g);
  return g;
}

XL weyl_symmetrize(const XL& f) { return weyl_symmetrize(f, 0, f.n); }

namespace {

std::mutex omega_cache_mutex;
std::map<std::tuple<int, int, int>, XL> omega_cache;

// prod_{a<=i<j<b} (1 - x_i/x_j)
XL pairing_factor(int n, int a, int b) {
  std::lock_guard<std::mutex> lk(omega_cache_mutex);
  auto key = std::make_tuple(n, a, b);
  auto it = omega_cache.find(key);
  if (it != omega_cache.end()) return it->second;
  XL f = XL::constant(n, QT(1));
  for (int i = a; i < b; i++)
    for (int j = i + 1; j < b; j++) {
      Exp e(n, 0);
      e[i] = 1;
      e[j] = -1;
      f = f * (XL::constant(n, QT(1)) - XL::monomial(n, e, QT(1)));
    }
  return omega_cache.emplace(key, f).first->second;
}

}  // namespace

XL inner0_block(const XL& F, int a, int b) {
  XL G = F * pairing_factor(F.n, a, b);
  XL out(F.n);
  for (auto& [e, c] : G.terms) {
    bool zero_block = true;
    for (int k = a; k < b; k++)
      if (e[k] != 0) {
        zero_block = false;
        break;
      }
    if (zero_block) out.add_term(e, c);
  }
  return out;
}

QT inner0(const XL& f, const XL& g) {
  check(f.n == g.n, "SizeMismatch", "pairing operands have different variable counts");
  return inner0_block(f * g, 0, f.n).coeff(Exp(f.n, 0));
}

namespace {

using BasisFn = XL (*)(const Exp&);

// Exact solve of f = sum_nu a_nu basis(nu) over the Bruhat down-set of the
// support; correctness does not depend on the stripping order.
void solve_in_basis(const XL& f, BasisFn basis, bool allow_negative, std::map<Exp, QT>& out) {
  if (f.is_zero()) return;
  int n = f.n;
  std::map<long, std::vector<Exp>> support_by_deg;
  for (auto& [e, c] : f.terms)
    support_by_deg[std::accumulate(e.begin(), e.end(), 0L)].push_back(e);
  std::vector<Exp> cand;
  for (auto& [d, supp] : support_by_deg) {
    int lo = supp[0][0], hi = supp[0][0];
    for (auto& e : supp)
      for (int v : e) lo = std::min(lo, v), hi = std::max(hi, v);
    if (!allow_negative) lo = std::max(lo, 0);
    std::function<void(Exp&, int, long)> rec = [&](Exp& nu, int pos, long rem) {
      if (pos == n) {
        if (rem != 0) return;
        for (auto& e : supp)
          if (bruhat_leq(nu, e)) {
            cand.push_back(nu);
            return;
          }
        return;
      }
      for (int v = lo; v <= hi; v++) {
        if (rem - v < (long)lo * (n - pos - 1) || rem - v > (long)hi * (n - pos - 1)) continue;
        nu[pos] = v;
        rec(nu, pos + 1, rem - v);
      }
    };
    Exp nu(n, 0);
    rec(nu, 0, d);
  }
  size_t C = cand.size();
  std::vector<XL> polys(C);
  std::map<Exp, size_t> rows;
  for (size_t j = 0; j < C; j++) {
    polys[j] = basis(cand[j]);
    for (auto& [e, c] : polys[j].terms) rows.emplace(e, rows.size());
  }
  for (auto& [e, c] : f.terms) rows.emplace(e, rows.size());
  size_t M = rows.size();
  std::vector<std::vector<QT>> A(M, std::vector<QT>(C + 1, QT(0)));
  for (size_t j = 0; j < C; j++)
    for (auto& [e, c] : polys[j].terms) A[rows.at(e)][j] = c;
  for (auto& [e, c] : f.terms) A[rows.at(e)][C] = c;
  // Gaussian elimination
  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < C && row < M; col++) {
    size_t p = row;
    while (p < M && A[p][col].is_zero()) p++;
    if (p == M) continue;
    std::swap(A[p], A[row]);
    QT inv = A[row][col].inv();
    for (size_t k = col; k <= C; k++) A[row][k] = A[row][k] * inv;
    for (size_t r = 0; r < M; r++) {
      if (r == row || A[r][col].is_zero()) continue;
      QT factor = A[r][col];
      for (size_t k = col; k <= C; k++) A[r][k] = A[r][k] - factor * A[row][k];
    }
    pivot_col.push_back(col);
    row++;
  }
  for (size_t r = row; r < M; r++)
    check(A[r][C].is_zero(), "InternalError", "inconsistent basis expansion system");
  std::vector<QT> sol(C, QT(0));
  for (size_t r = 0; r < pivot_col.size(); r++) sol[pivot_col[r]] = A[r][C];
  // reassembly check, then merge
  XL acc(n);
  for (size_t j = 0; j < C; j++)
    if (!sol[j].is_zero()) acc += sol[j] * polys[j];
  check(acc == f, "InternalError", "basis expansion residual is nonzero");
  for (size_t j = 0; j < C; j++)
    if (!sol[j].is_zero()) {
      auto& cell = out[cand[j]];
      cell += sol[j];
      if (cell.is_zero()) out.erase(cand[j]);
    }
}

}  // namespace

std::map<Exp, QT> expand_in_weight_basis(const XL& f0, XL (*basis)(const Exp&),
                                         bool allow_negative) {
  XL f = f0;
  check(allow_negative || f.is_polynomial(), "NegativeExponent",
        "expansion over N^n requires a polynomial");
  std::map<Exp, QT> out;
  long guard = 0;
  while (!f.is_zero()) {
    check(++guard <= 500000, "InternalError", "basis expansion did not terminate");
    Exp mu = f.terms.begin()->first;
    for (auto& [e, c] : f.terms)
      if (atom_order_less(mu, e)) mu = e;
    QT c = f.coeff(mu);
    XL f2 = f - c * basis(mu);
    // triangularity self-check: the stripped monomial must vanish and
    // nothing above it may appear
    bool ok = f2.coeff(mu).is_zero();
    if (ok)
      for (auto& [e, cc] : f2.terms)
        if (atom_order_less(mu, e)) {
          ok = false;
          break;
        }
    if (!ok) {
      solve_in_basis(f, basis, allow_negative, out);
      return out;
    }
    auto& cell = out[mu];
    cell += c;
    if (cell.is_zero()) out.erase(mu);
    f = f2;
  }
  return out;
}

std::map<Exp, QT> atom_expand(const XL& f) {
  return expand_in_weight_basis(f, &atom_poly, false);
}

std::map<Exp, QT> atom_expand_laurent(const XL& f) {
  return expand_in_weight_basis(f, &atom_poly, true);
}

std::map<Exp, QT> dem_expand_laurent(const XL& f) {
  return expand_in_weight_basis(f, &demazure_char, true);
}

XL from_atoms(const std::map<Exp, QT>& coeffs, int n) {
  XL out(n);
  for (auto& [mu, c] : coeffs) out += c * atom_poly(mu);
  return out;
}

XL pol_part(const XL& f) {
  XL out(f.n);
  for (auto& [mu, c] : atom_expand_laurent(f)) {
    bool nonneg = true;
    for (int v : mu)
      if (v < 0) {
        nonneg = false;
        break;
      }
    if (nonneg) out += c * atom_poly(mu);
  }
  return out;
}

}  // namespace nsmac
