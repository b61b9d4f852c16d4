#pragma once
#include <map>
#include <string>
#include <vector>

#include "nsmac/symfun.hpp"

namespace nsmac {

// One letter of a plethystic alphabet: sign * q^dq t^dt * x^xexp, or, when
// formal is set, sign * q^dq t^dt * Y with Y the single formal alphabet symbol.
struct AlphaTerm {
  int sign = 1;
  int dq = 0, dt = 0;
  Exp xexp;  // length nx; ignored when formal
  bool formal = false;
};

struct Alphabet {
  int nx = 0;
  std::vector<AlphaTerm> terms;

  explicit Alphabet(int nvars = 0) : nx(nvars) {}
  Alphabet& add_var(int i, int sign = 1, int dq = 0, int dt = 0);
  Alphabet& add_mono(const Exp& e, int sign = 1, int dq = 0, int dt = 0);
  Alphabet& add_formal(int sign = 1, int dq = 0, int dt = 0);
  bool has_formal() const;
  Alphabet& append(const Alphabet& o);  // same nx
};

// Polynomial in concrete variables x_1..x_r whose coefficients are symmetric
// functions of the formal alphabet Y.  ypos records how many concrete slots
// precede Y when the object is flattened to honest variables.
class MixedPoly {
 public:
  int r = 0;
  int ypos = 0;
  std::map<Exp, SymFun> terms;

  MixedPoly() = default;
  explicit MixedPoly(int rvars) : r(rvars), ypos(rvars) {}
  MixedPoly(int rvars, int ypos_) : r(rvars), ypos(ypos_) {}

  void add_term(const Exp& e, const SymFun& f);
  SymFun coeff_x(const Exp& e) const;
  QT coeff(const Exp& e, const Partition& la) const;  // <x^e m_la(Y)>

  bool is_zero() const { return terms.empty(); }
  bool operator==(const MixedPoly& o) const { return r == o.r && terms == o.terms; }
  bool operator!=(const MixedPoly& o) const { return !(*this == o); }

  MixedPoly operator-() const;
  MixedPoly operator+(const MixedPoly& o) const;
  MixedPoly operator-(const MixedPoly& o) const;
  MixedPoly operator*(const MixedPoly& o) const;
  MixedPoly operator*(const QT& c) const;
  MixedPoly& operator+=(const MixedPoly& o) { return *this = *this + o; }
  MixedPoly& operator-=(const MixedPoly& o) { return *this = *this - o; }

  static MixedPoly from_xl(const XL& f);             // constant Y-part
  static MixedPoly from_symfun(const SymFun& f, int rvars, int ypos);

  // Substitute Y = y_1 + ... + y_ny; y-block inserted after slot ypos.
  XL expand_y(int ny) const;

  int max_total_degree() const;  // x-degree plus Y-degree
  bool coeffs_congruent_mod_t(const MixedPoly& o, int e) const;

  std::string str() const;
};

MixedPoly operator*(const QT& c, const MixedPoly& f);

// f[A]: plethystic evaluation of a symmetric function at an alphabet.
// Concrete letters land in x-variables, formal letters in Y.
MixedPoly eval_alphabet(const SymFun& f, const Alphabet& A);

// h_k[A]; the workhorse of all specializations.
MixedPoly h_of_alphabet(int k, const Alphabet& A);

// Convenience when A has no formal part.
XL h_of_alphabet_xl(int k, const Alphabet& A);

}  // namespace nsmac
