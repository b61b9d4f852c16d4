#include "nsmac/mixed.hpp"

#include <algorithm>
#include <sstream>

#include "nsmac/error.hpp"

namespace nsmac {

Alphabet& Alphabet::add_var(int i, int sign, int dq, int dt) {
  check(0 <= i && i < nx, "InternalError", "alphabet variable out of range");
  AlphaTerm tm;
  tm.sign = sign;
  tm.dq = dq;
  tm.dt = dt;
  tm.xexp.assign(nx, 0);
  tm.xexp[i] = 1;
  terms.push_back(std::move(tm));
  return *this;
}

Alphabet& Alphabet::add_mono(const Exp& e, int sign, int dq, int dt) {
  check((int)e.size() == nx, "InternalError", "alphabet monomial length mismatch");
  AlphaTerm tm;
  tm.sign = sign;
  tm.dq = dq;
  tm.dt = dt;
  tm.xexp = e;
  terms.push_back(std::move(tm));
  return *this;
}

Alphabet& Alphabet::add_formal(int sign, int dq, int dt) {
  AlphaTerm tm;
  tm.sign = sign;
  tm.dq = dq;
  tm.dt = dt;
  tm.formal = true;
  terms.push_back(std::move(tm));
  return *this;
}

bool Alphabet::has_formal() const {
  for (auto& tm : terms)
    if (tm.formal) return true;
  return false;
}

Alphabet& Alphabet::append(const Alphabet& o) {
  check(nx == o.nx, "InternalError", "alphabet variable count mismatch");
  terms.insert(terms.end(), o.terms.begin(), o.terms.end());
  return *this;
}

void MixedPoly::add_term(const Exp& e, const SymFun& f) {
  check((int)e.size() == r, "InternalError", "mixed term exponent length mismatch");
  if (f.is_zero()) return;
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms.emplace(e, f);
  } else {
    it->second += f;
    if (it->second.is_zero()) terms.erase(it);
  }
}

SymFun MixedPoly::coeff_x(const Exp& e) const {
  auto it = terms.find(e);
  return it == terms.end() ? SymFun() : it->second;
}

QT MixedPoly::coeff(const Exp& e, const Partition& la) const {
  auto it = terms.find(e);
  if (it == terms.end()) return QT(0);
  auto jt = it->second.m.find(la);
  return jt == it->second.m.end() ? QT(0) : jt->second;
}

MixedPoly MixedPoly::operator-() const {
  MixedPoly out(r, ypos);
  for (auto& [e, f] : terms) out.terms[e] = -f;
  return out;
}

MixedPoly MixedPoly::operator+(const MixedPoly& o) const {
  check(r == o.r, "InternalError", "mixed variable count mismatch");
  MixedPoly out = *this;
  for (auto& [e, f] : o.terms) out.add_term(e, f);
  return out;
}

MixedPoly MixedPoly::operator-(const MixedPoly& o) const { return *this + (-o); }

MixedPoly MixedPoly::operator*(const MixedPoly& o) const {
  check(r == o.r, "InternalError", "mixed variable count mismatch");
  MixedPoly out(r, ypos);
  Exp e(r);
  for (auto& [e1, f1] : terms)
    for (auto& [e2, f2] : o.terms) {
      for (int i = 0; i < r; i++) e[i] = e1[i] + e2[i];
      out.add_term(e, f1 * f2);
    }
  return out;
}

MixedPoly MixedPoly::operator*(const QT& c) const {
  MixedPoly out(r, ypos);
  if (c.is_zero()) return out;
  for (auto& [e, f] : terms) out.terms[e] = f * c;
  return out;
}

MixedPoly operator*(const QT& c, const MixedPoly& f) { return f * c; }

MixedPoly MixedPoly::from_xl(const XL& f) {
  MixedPoly out(f.n);
  for (auto& [e, c] : f.terms) out.terms[e] = SymFun(c);
  return out;
}

MixedPoly MixedPoly::from_symfun(const SymFun& f, int rvars, int ypos) {
  MixedPoly out(rvars, ypos);
  if (!f.is_zero()) out.terms[Exp(rvars, 0)] = f;
  return out;
}

XL MixedPoly::expand_y(int ny) const {
  XL out(r + ny);
  for (auto& [e, f] : terms) {
    XL yval = f.to_variables(ny);
    for (auto& [ye, c] : yval.terms) {
      Exp full;
      full.reserve(r + ny);
      full.insert(full.end(), e.begin(), e.begin() + ypos);
      full.insert(full.end(), ye.begin(), ye.end());
      full.insert(full.end(), e.begin() + ypos, e.end());
      out.add_term(full, c);
    }
  }
  return out;
}

int MixedPoly::max_total_degree() const {
  int d = 0;
  for (auto& [e, f] : terms) {
    int s = 0;
    for (int v : e) s += v;
    d = std::max(d, s + f.max_degree());
  }
  return d;
}

bool MixedPoly::coeffs_congruent_mod_t(const MixedPoly& o, int e) const {
  MixedPoly d = *this - o;
  for (auto& [ex, f] : d.terms)
    for (auto& [la, c] : f.m)
      if (!c.congruent_mod_t(QT(0), e)) return false;
  return true;
}

std::string MixedPoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, f] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "x^(";
    for (size_t i = 0; i < e.size(); i++) os << (i ? "," : "") << e[i];
    os << ")*{" << f.str() << "}";
  }
  return os.str();
}

MixedPoly eval_alphabet(const SymFun& f, const Alphabet& A) {
  // accumulate in the p-basis on the Y side: Exp -> (p-partition -> coeff)
  std::map<Exp, std::map<Partition, QT>> acc;
  // p_k[A] pieces
  auto pk_concrete = [&](int k) {
    std::vector<std::pair<Exp, QT>> out;
    for (auto& tm : A.terms) {
      if (tm.formal) continue;
      Exp e(tm.xexp);
      for (auto& v : e) v *= k;
      QT c = QT::q(tm.dq * k) * QT::t(tm.dt * k) * QT(tm.sign);
      out.push_back({std::move(e), std::move(c)});
    }
    return out;
  };
  auto pk_formal = [&](int k) {
    QT s(0);
    for (auto& tm : A.terms)
      if (tm.formal) s += QT::q(tm.dq * k) * QT::t(tm.dt * k) * QT(tm.sign);
    return s;
  };

  for (auto& [la, c] : f.p_coords()) {
    std::map<std::pair<Exp, Partition>, QT> partial;
    partial[{Exp(A.nx, 0), {}}] = c;
    for (int k : la) {
      auto conc = pk_concrete(k);
      QT form = pk_formal(k);
      std::map<std::pair<Exp, Partition>, QT> next;
      for (auto& [key, coef] : partial) {
        for (auto& [de, dc] : conc) {
          Exp e2 = key.first;
          for (int i = 0; i < A.nx; i++) e2[i] += de[i];
          auto& cell = next[{e2, key.second}];
          cell += coef * dc;
          if (cell.is_zero()) next.erase({e2, key.second});
        }
        if (!form.is_zero()) {
          Partition la2 = key.second;
          la2.insert(std::upper_bound(la2.begin(), la2.end(), k, std::greater<int>()), k);
          auto& cell = next[{key.first, la2}];
          cell += coef * form;
          if (cell.is_zero()) next.erase({key.first, la2});
        }
      }
      partial = std::move(next);
    }
    for (auto& [key, coef] : partial) {
      auto& cell = acc[key.first][key.second];
      cell += coef;
      if (cell.is_zero()) {
        acc[key.first].erase(key.second);
        if (acc[key.first].empty()) acc.erase(key.first);
      }
    }
  }

  MixedPoly out(A.nx);
  for (auto& [e, pc] : acc) {
    SymFun g = SymFun::from_p_coords(pc);
    if (!g.is_zero()) out.terms[e] = std::move(g);
  }
  return out;
}

MixedPoly h_of_alphabet(int k, const Alphabet& A) { return eval_alphabet(SymFun::h(k), A); }

XL h_of_alphabet_xl(int k, const Alphabet& A) {
  check(!A.has_formal(), "InternalError", "alphabet has a formal part; use h_of_alphabet");
  if (k < 0) return XL(A.nx);
  // letter-by-letter generating function: a positive letter z contributes the
  // factor 1/(1-uz) to sum_j h_j u^j, a negative letter contributes (1-uz)
  std::vector<XL> H(k + 1, XL(A.nx));
  H[0] = XL::constant(A.nx, QT(1));
  for (auto& tm : A.terms) {
    check(tm.sign == 1 || tm.sign == -1, "InternalError", "alphabet letter sign must be +-1");
    XL z = XL::monomial(A.nx, tm.xexp, QT::q(tm.dq) * QT::t(tm.dt));
    if (tm.sign > 0) {
      for (int j = 1; j <= k; j++) H[j] = H[j] + z * H[j - 1];
    } else {
      for (int j = k; j >= 1; j--) H[j] = H[j] - z * H[j - 1];
    }
  }
  return H[k];
}

}  // namespace nsmac
