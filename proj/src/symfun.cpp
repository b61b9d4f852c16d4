#include "nsmac/symfun.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "nsmac/error.hpp"

namespace nsmac {

namespace {

// h_k in n variables: all degree-k monomials.
XL h_in_vars(int k, int n) {
  XL f(n);
  for (auto& e : compositions_of(k, n)) f.add_term(e, QT(1));
  return f;
}

XL p_in_vars(int k, int n) {
  XL f(n);
  for (int i = 0; i < n; i++) {
    Exp e(n, 0);
    e[i] = k;
    f.add_term(e, QT(1));
  }
  return f;
}

// m-coefficients of a symmetric polynomial in exactly n variables by
// leading-orbit stripping.  Degree must be <= n for faithfulness; callers
// enforce their own policy.
std::map<Partition, QT> strip_m(XL p) {
  std::map<Partition, QT> out;
  int n = p.n;
  while (!p.is_zero()) {
    auto lead = std::prev(p.terms.end());
    Exp e = lead->first;
    for (int i = 0; i + 1 < n; i++)
      check(e[i] >= e[i + 1], "NotSymmetric", "leading exponent not weakly decreasing");
    QT c = lead->second;
    Partition la(e.begin(), e.end());
    while (!la.empty() && la.back() == 0) la.pop_back();
    out[la] = c;
    // subtract c * m_la(x_1..x_n)
    std::vector<int> ve(e.begin(), e.end());
    std::sort(ve.begin(), ve.end());
    do {
      p.add_term(Exp(ve.begin(), ve.end()), -c);
    } while (std::next_permutation(ve.begin(), ve.end()));
  }
  return out;
}

std::vector<std::vector<QT>> invert_matrix(std::vector<std::vector<QT>> a) {
  size_t n = a.size();
  std::vector<std::vector<QT>> inv(n, std::vector<QT>(n, QT(0)));
  for (size_t i = 0; i < n; i++) inv[i][i] = QT(1);
  for (size_t col = 0; col < n; col++) {
    size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) piv++;
    check(piv < n, "InternalError", "singular basis conversion matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    QT d = a[col][col];
    for (size_t j = 0; j < n; j++) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (size_t r = 0; r < n; r++) {
      if (r == col || a[r][col].is_zero()) continue;
      QT f = a[r][col];
      for (size_t j = 0; j < n; j++) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::mutex g_tables_mutex;
std::map<int, BasisTables> g_tables;

}  // namespace

const BasisTables& basis_tables(int degree) {
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  auto it = g_tables.find(degree);
  if (it != g_tables.end()) return it->second;

  BasisTables tb;
  tb.parts = partitions_of(degree);
  for (size_t i = 0; i < tb.parts.size(); i++) tb.index[tb.parts[i]] = (int)i;
  size_t N = tb.parts.size();
  int n = std::max(degree, 1);

  auto fill = [&](XL (*gen)(int, int)) {
    std::vector<std::vector<QT>> rows(N, std::vector<QT>(N, QT(0)));
    for (size_t i = 0; i < N; i++) {
      XL prod = XL::constant(n, QT(1));
      for (int part : tb.parts[i]) prod *= gen(part, n);
      for (auto& [la, c] : strip_m(prod)) {
        Partition key = la;
        rows[i][tb.index.at(key)] = c;
      }
    }
    return rows;
  };
  tb.h2m = fill(&h_in_vars);
  tb.p2m = fill(&p_in_vars);
  tb.m2h = invert_matrix(tb.h2m);
  tb.m2p = invert_matrix(tb.p2m);

  auto [pos, inserted] = g_tables.emplace(degree, std::move(tb));
  return pos->second;
}

SymFun SymFun::monomial_basis(const Partition& la, QT c) {
  check(is_partition(la), "InternalError", "monomial_basis wants a partition");
  SymFun f;
  if (!c.is_zero()) f.m[la] = std::move(c);
  return f;
}

SymFun SymFun::h(int k) {
  check(k >= 0, "InternalError", "h of negative degree");
  SymFun f;
  for (auto& la : partitions_of(k)) f.m[la] = QT(1);
  return f;
}

SymFun SymFun::e(int k) {
  check(k >= 0, "InternalError", "e of negative degree");
  if (k == 0) return SymFun(QT(1));
  return monomial_basis(Partition(k, 1));
}

SymFun SymFun::p(int k) {
  check(k >= 1, "InternalError", "p of nonpositive degree");
  return monomial_basis({k});
}

SymFun SymFun::s(const Partition& la) { return s_skew(la, {}); }

SymFun SymFun::s_skew(const Partition& la, const Partition& mu) {
  size_t l = la.size();
  if (l == 0) return SymFun(QT(1));
  // det( h_{la_i - mu_j - i + j} ) over permutations; small l only
  std::vector<int> perm(l);
  for (size_t i = 0; i < l; i++) perm[i] = (int)i;
  SymFun acc;
  do {
    int sign = 1;
    for (size_t i = 0; i < l; i++)
      for (size_t j = i + 1; j < l; j++)
        if (perm[i] > perm[j]) sign = -sign;
    SymFun term{QT(sign)};
    bool dead = false;
    for (size_t i = 0; i < l && !dead; i++) {
      int mj = perm[i] < (int)mu.size() ? mu[perm[i]] : 0;
      int deg = la[i] - mj - (int)i + perm[i];
      if (deg < 0) {
        dead = true;
        break;
      }
      if (deg > 0) term *= h(deg);
    }
    if (!dead) acc += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

SymFun SymFun::operator-() const {
  SymFun r;
  for (auto& [la, c] : m) r.m[la] = -c;
  return r;
}

SymFun SymFun::operator+(const SymFun& o) const {
  SymFun r = *this;
  for (auto& [la, c] : o.m) {
    auto it = r.m.find(la);
    if (it == r.m.end()) {
      r.m[la] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) r.m.erase(it);
    }
  }
  return r;
}

SymFun SymFun::operator-(const SymFun& o) const { return *this + (-o); }

SymFun SymFun::operator*(const QT& c) const {
  SymFun r;
  if (c.is_zero()) return r;
  for (auto& [la, v] : m) r.m[la] = v * c;
  return r;
}

SymFun operator*(const QT& c, const SymFun& f) { return f * c; }

SymFun SymFun::operator*(const SymFun& o) const {
  // h-basis: h_la * h_mu = h_{sort(la ++ mu)}
  SymFun out;
  std::map<int, std::map<Partition, QT>> ha, hb;
  auto to_h = [](const SymFun& f, std::map<int, std::map<Partition, QT>>& dst) {
    for (auto& [la, c] : f.m) {
      int d = part_sum(la);
      auto& tb = basis_tables(d);
      int i = tb.index.at(la);
      for (size_t j = 0; j < tb.parts.size(); j++)
        if (!tb.m2h[i][j].is_zero()) {
          auto& cell = dst[d][tb.parts[j]];
          cell += c * tb.m2h[i][j];
          if (cell.is_zero()) dst[d].erase(tb.parts[j]);
        }
    }
  };
  to_h(*this, ha);
  to_h(o, hb);
  std::map<Partition, QT> hprod;
  for (auto& [d1, ma] : ha)
    for (auto& [la, c1] : ma)
      for (auto& [d2, mb] : hb)
        for (auto& [mu, c2] : mb) {
          Partition merged(la);
          merged.insert(merged.end(), mu.begin(), mu.end());
          std::sort(merged.begin(), merged.end(), std::greater<int>());
          auto& cell = hprod[merged];
          cell += c1 * c2;
          if (cell.is_zero()) hprod.erase(merged);
        }
  for (auto& [la, c] : hprod) {
    int d = part_sum(la);
    auto& tb = basis_tables(d);
    int i = tb.index.at(la);
    for (size_t j = 0; j < tb.parts.size(); j++)
      if (!tb.h2m[i][j].is_zero()) {
        auto& cell = out.m[tb.parts[j]];
        cell += c * tb.h2m[i][j];
        if (cell.is_zero()) out.m.erase(tb.parts[j]);
      }
  }
  return out;
}

int SymFun::max_degree() const {
  int d = 0;
  for (auto& [la, c] : m) d = std::max(d, part_sum(la));
  return d;
}

SymFun SymFun::degree_part(int d) const {
  SymFun r;
  for (auto& [la, c] : m)
    if (part_sum(la) == d) r.m[la] = c;
  return r;
}

std::map<Partition, QT> SymFun::p_coords() const {
  std::map<Partition, QT> out;
  for (auto& [la, c] : m) {
    int d = part_sum(la);
    auto& tb = basis_tables(d);
    int i = tb.index.at(la);
    for (size_t j = 0; j < tb.parts.size(); j++)
      if (!tb.m2p[i][j].is_zero()) {
        auto& cell = out[tb.parts[j]];
        cell += c * tb.m2p[i][j];
        if (cell.is_zero()) out.erase(tb.parts[j]);
      }
  }
  return out;
}

SymFun SymFun::from_p_coords(const std::map<Partition, QT>& pc) {
  SymFun out;
  for (auto& [la, c] : pc) {
    int d = part_sum(la);
    auto& tb = basis_tables(d);
    int i = tb.index.at(la);
    for (size_t j = 0; j < tb.parts.size(); j++)
      if (!tb.p2m[i][j].is_zero()) {
        auto& cell = out.m[tb.parts[j]];
        cell += c * tb.p2m[i][j];
        if (cell.is_zero()) out.m.erase(tb.parts[j]);
      }
  }
  return out;
}

SymFun SymFun::pleth_p_scale(const std::function<QT(int)>& scale) const {
  std::map<Partition, QT> pc = p_coords();
  for (auto it = pc.begin(); it != pc.end();) {
    QT f(1);
    for (int k : it->first) f *= scale(k);
    it->second *= f;
    if (it->second.is_zero())
      it = pc.erase(it);
    else
      ++it;
  }
  return from_p_coords(pc);
}

SymFun SymFun::pleth_X_over_1mt() const {
  return pleth_p_scale([](int k) { return QT(1) / (QT(1) - QT::t(k)); });
}

SymFun SymFun::pleth_1mt_X() const {
  return pleth_p_scale([](int k) { return QT(1) - QT::t(k); });
}

XL SymFun::to_variables(int n) const {
  XL out(n);
  for (auto& [la, c] : m) {
    if ((int)la.size() > n) continue;
    std::vector<int> e(la.begin(), la.end());
    e.resize(n, 0);
    std::sort(e.begin(), e.end());
    do {
      out.add_term(Exp(e.begin(), e.end()), c);
    } while (std::next_permutation(e.begin(), e.end()));
  }
  return out;
}

SymFun SymFun::from_variables(const XL& p, bool* unfaithful) {
  for (int i = 0; i + 1 < p.n; i++)
    check(p.swap_vars(i) == p, "NotSymmetric", "polynomial is not symmetric");
  if (unfaithful) *unfaithful = false;
  for (auto& [e, c] : p.terms) {
    int d = 0;
    for (int v : e) {
      check(v >= 0, "NotSymmetric", "negative exponents have no monomial-basis expansion");
      d += v;
    }
    // n < deg: reconstruction is still the unique expansion on parts of
    // length <= n, but terms of longer shape are unrecoverable.
    if (d > p.n && unfaithful) *unfaithful = true;
  }
  SymFun out;
  for (auto& [la, c] : strip_m(p)) out.m[la] = c;
  return out;
}

std::map<std::pair<Partition, Partition>, QT> SymFun::expand_two_alphabets() const {
  // p_k[X+Y] = p_k(X) + p_k(Y); expand each p_la over subsets of parts.
  std::map<std::pair<Partition, Partition>, QT> pp;
  for (auto& [la, c] : p_coords()) {
    size_t l = la.size();
    for (unsigned mask = 0; mask < (1u << l); mask++) {
      Partition a, b;
      for (size_t i = 0; i < l; i++)
        (mask >> i & 1 ? a : b).push_back(la[i]);
      std::sort(a.begin(), a.end(), std::greater<int>());
      std::sort(b.begin(), b.end(), std::greater<int>());
      auto& cell = pp[{a, b}];
      cell += c;
      if (cell.is_zero()) pp.erase({a, b});
    }
  }
  // convert each tensor factor p -> m
  std::map<std::pair<Partition, Partition>, QT> out;
  for (auto& [ab, c] : pp) {
    SymFun fa = from_p_coords({{ab.first, QT(1)}});
    SymFun fb = from_p_coords({{ab.second, QT(1)}});
    for (auto& [la, ca] : fa.m)
      for (auto& [mu, cb] : fb.m) {
        auto& cell = out[{la, mu}];
        cell += c * ca * cb;
        if (cell.is_zero()) out.erase({la, mu});
      }
  }
  return out;
}

std::string SymFun::str() const {
  if (m.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [la, c] : m) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*m[";
    for (size_t i = 0; i < la.size(); i++) os << (i ? "," : "") << la[i];
    os << "]";
  }
  return os.str();
}

}  // namespace nsmac
