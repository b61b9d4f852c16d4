#pragma once
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "nsmac/laurent.hpp"
#include "nsmac/partition.hpp"
#include "nsmac/qt.hpp"

namespace nsmac {

// Symmetric function over QT, stored in the monomial basis.
// Invariant: keys are honest partitions (no trailing zeros), values nonzero.
class SymFun {
 public:
  std::map<Partition, QT> m;

  SymFun() = default;
  explicit SymFun(QT c) {
    if (!c.is_zero()) m[{}] = std::move(c);
  }

  static SymFun monomial_basis(const Partition& la, QT c = QT(1));
  static SymFun h(int k);
  static SymFun e(int k);
  static SymFun p(int k);
  static SymFun s(const Partition& la);                        // Jacobi-Trudi in h
  static SymFun s_skew(const Partition& la, const Partition& mu);

  bool is_zero() const { return m.empty(); }
  bool operator==(const SymFun& o) const { return m == o.m; }
  bool operator!=(const SymFun& o) const { return !(*this == o); }

  SymFun operator-() const;
  SymFun operator+(const SymFun& o) const;
  SymFun operator-(const SymFun& o) const;
  SymFun operator*(const SymFun& o) const;  // via h-basis
  SymFun operator*(const QT& c) const;
  SymFun& operator+=(const SymFun& o) { return *this = *this + o; }
  SymFun& operator-=(const SymFun& o) { return *this = *this - o; }
  SymFun& operator*=(const SymFun& o) { return *this = *this * o; }

  int max_degree() const;  // 0 on zero
  SymFun degree_part(int d) const;

  // Power-sum coordinates (exact, rational in q,t).
  std::map<Partition, QT> p_coords() const;
  static SymFun from_p_coords(const std::map<Partition, QT>& pc);

  // p_k -> scale(k) * p_k; covers X -> X/(1-t) with scale(k) = 1/(1-t^k)
  // and X -> (1-t)X with scale(k) = (1-t^k).
  SymFun pleth_p_scale(const std::function<QT(int)>& scale) const;
  SymFun pleth_X_over_1mt() const;
  SymFun pleth_1mt_X() const;

  XL to_variables(int n) const;
  // Inverse: requires p symmetric; faithful when n >= deg(p), otherwise errors.
  // Expansion supported on partitions of length <= p.n; *unfaithful is set
  // when deg > n (longer shapes cannot be recovered).
  static SymFun from_variables(const XL& p, bool* unfaithful = nullptr);

  // f[X+Y] as a sum of m_lambda(X) m_mu(Y) terms keyed by (lambda, mu).
  std::map<std::pair<Partition, Partition>, QT> expand_two_alphabets() const;

  std::string str() const;
};

SymFun operator*(const QT& c, const SymFun& f);

// Basis conversion tables for one degree, built lazily and cached.
struct BasisTables {
  std::vector<Partition> parts;          // fixed order
  std::map<Partition, int> index;
  std::vector<std::vector<QT>> h2m, m2h, p2m, m2p;  // row = expansion of basis elt
};
const BasisTables& basis_tables(int degree);

}  // namespace nsmac
