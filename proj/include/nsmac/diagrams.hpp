#pragma once

#include <functional>
#include <vector>

#include "perm.hpp"
#include "qt.hpp"

namespace nsmac {

// Ragged-right skew diagram beta/alpha in French style.  Rows are 0-based
// from the bottom; row j holds boxes of contents alpha[j]-j .. beta[j]-j-1
// and carries a flag box of content beta[j]-j at its right end (an empty row
// alpha[j] == beta[j] keeps its flag box).  Validity: alpha[j] <= beta[j],
// alpha weakly decreasing, beta[j+1] <= beta[j]+1.  Entries may be negative.
struct RaggedSkew {
  std::vector<int> alpha, beta;

  int rows() const { return (int)alpha.size(); }
  int row_lo(int j) const { return alpha[j] - j; }        // content of first box
  int flag_content(int j) const { return beta[j] - j; }   // content of flag box
  int row_size(int j) const { return beta[j] - alpha[j]; }
  bool operator==(const RaggedSkew& o) const { return alpha == o.alpha && beta == o.beta; }
};

// Indexing data (r, gamma, eta, sigma) for a tuple of ragged-right skew
// diagrams with flag numbers.  Global rows are 0-based from the bottom,
// components listed bottom to top; block b of r covers the rows of component
// b.  Within block rows j0..j0+r_b-1, component row j-j0 has
// alpha = gamma[j] + (j-j0), beta = eta[j] + (j-j0), so eta[j] is the content
// of the flag box of global row j.  sigma is a 0-based permutation of the
// rows; the flag number of global row j is l - sigma^{-1}(j), taking values
// in 1..l.
struct DiagramData {
  std::vector<int> r;
  std::vector<int> gamma, eta;
  Perm sigma;

  int length() const { return (int)gamma.size(); }
  int components() const { return (int)r.size(); }
  std::vector<RaggedSkew> tuple() const;
  std::vector<int> flag_numbers() const;  // values in 1..l, indexed by global row
  std::vector<int> component_of() const;  // 0-based component index per global row

  bool operator==(const DiagramData& o) const {
    return r == o.r && gamma == o.gamma && eta == o.eta && sigma == o.sigma;
  }
};

// Checks the defining conditions on (r, gamma, eta, sigma) and returns the
// data unchanged.  gamma must be strictly decreasing and eta weakly
// decreasing on every r-block with gamma[i] <= eta[i]; sigma must be a
// permutation whose flag numbers decrease as flag-box content increases and
// increase bottom to top among equal-content flag boxes within a component.
// Errors: GammaNotRegular, NotRaggedRight, IncompatibleSigma.
DiagramData validate_and_convert(std::vector<int> r, std::vector<int> gamma,
                                 std::vector<int> eta, Perm sigma);

// Builds the weight form from a tuple of shapes plus flag numbers (1..l) and
// validates it.  Inverse of DiagramData::tuple()/flag_numbers(); the
// conversion roundtrips exactly.
DiagramData data_from_tuple(const std::vector<RaggedSkew>& tuple,
                            const std::vector<int>& flags);

// h = number of triples (x,y,z): x,z adjacent in an extended row of a
// component (z a box or the flag box, x a box or the position left of the
// first box), y a box of an earlier component, c(y) = c(z) = c(x)+1.
// e = number of rising end triples: pairs of flag boxes in distinct
// components with equal content whose flag numbers increase upward.
struct TriplesStats {
  long h = 0, e = 0;
};
TriplesStats triples_stats(const DiagramData& data);

// Box of a tuple, identified by component, row within the component, and
// content.  pos is the index in content/row reading order (lexicographic by
// (content, global row)).
struct Box {
  int comp, row, global_row, content, pos;
};

// Boxes of the tuple in reading order.
std::vector<Box> boxes_in_reading_order(const DiagramData& data);

// Letters of a signed alphabet are encoded as 2v for positive v and 2v+1 for
// barred v (v >= 1), so that integer order on codes realizes
// 1 < 1bar < 2 < 2bar < ...
inline bool letter_barred(int code) { return code & 1; }
inline int letter_value(int code) { return code >> 1; }
inline int pos_letter(int v) { return 2 * v; }
inline int bar_letter(int v) { return 2 * v + 1; }

// a strictly succeeds b: a > b, or a == b barred.  Rows of a tableau require
// !succ(left, right); columns require succ(upper, lower) for vertically
// adjacent boxes of a component, the upper box having smaller content.
inline bool letter_succ(int a, int b) { return a > b || (a == b && (a & 1)); }

// Assignment of a letter code to every box, aligned with
// boxes_in_reading_order.
struct Filling {
  std::vector<int> codes;
};

// Alphabet subsets A_1 < ... < A_l for flag bounds b (weakly increasing
// positive entries): unsigned takes A_i = {b_{i-1}+1, ..., b_i}; signed takes
// the order intervals A_1 = [1, b_1], A_i = [bar b_{i-1}, b_i], i.e. codes
// 2b_{i-1}+1 .. 2b_i (2 .. 2b_1 for A_1), so every barred letter except
// bar b_i lands in some subset.
std::vector<std::vector<int>> bounds_alphabet(const std::vector<int>& b);
std::vector<std::vector<int>> signed_bounds_alphabet(const std::vector<int>& b);

// Drops letters of value greater than max_value from every subset; realizes
// setting the trailing variables to zero in a specialized tableau sum.
std::vector<std::vector<int>> truncate_alphabet(std::vector<std::vector<int>> subsets,
                                                int max_value);

// Enumerates every flagged tableau on the tuple exactly once: rows weakly
// increase with no repeated barred letter, columns within a component
// increase with equal barred letters allowed, and a box filled from A_i has
// i at most the flag number of its row and greater than the flag number of
// every same-component flag box below it in its column.  Emits the filling
// with inv = number of attacking inversions, counting pairs (x real, y real
// or flag) in distinct components with c(y) = c(x) for x in the earlier
// component or c(y) = c(x)+1 for x in the later one; a real pair inverts
// when succ(T(x), T(y)), a flag pair when the subset index of T(x) exceeds
// the flag number of y.  m = number of barred entries.  subsets must be
// pairwise disjoint and increasing (empty subsets allowed); fillings are
// emitted in lexicographic order of their code vectors.
void enumerate_fsst(const DiagramData& data,
                    const std::vector<std::vector<int>>& subsets,
                    const std::function<void(const Filling&, long inv, long m)>& emit);

// True when no attacking pair carries equal letter values, bars ignored:
// |T(x)| != |T(y)| for real pairs, and |T(x)| != b_p when y is the flag box
// with flag number p.  b holds the flag bounds, indexed by flag number.
bool filling_non_attacking(const DiagramData& data, const Filling& T,
                           const std::vector<int>& b);

// Arm and leg of every box of the row diagram of mu (one single-row
// component per entry, listed top to bottom like mu itself).  table[i][c-1]
// is the box of content -c in the row of mu[i]: arm = mu[i] - c, leg =
// number of hands strictly between that box's hand and the box itself in
// reading order.
struct ArmLeg {
  int a = 0, l = 0;
};
std::vector<std::vector<ArmLeg>> arm_leg(const std::vector<int>& mu);

// Reduced legs for the middle block of mu = (head; lambda; tail) with
// head = first r entries and lambda the next k entries: legs in the row
// diagram with hands of content c(u)-1 in head rows excluded, along with all
// hands of content c(u).  table[i][c-1] covers the box of content -c in row
// r+i of mu.
std::vector<std::vector<int>> reduced_leg(const std::vector<int>& mu, int r, int k);

// Row diagram dg(mu) as indexing data: component i (from the bottom) is the
// single row (-mu[m-1-i], 0) with flag number m - i, so flag numbers read
// m, m-1, ..., 1 bottom to top.
DiagramData row_diagram_data(const std::vector<int>& mu);

// Augmented ribbon tuples for mu in N^m: component i (from the bottom) is a
// ribbon with mu[m-1-i] boxes of contents -1..-mu[m-1-i] plus the augmentation
// flag box of content 0 in its first row; each domino pair of contents
// (-k, -k+1) is horizontal or vertical, giving 2^s shapes per ribbon of size
// s.  The first non_ragged_top entries of mu are restricted to
// non-ragged-right ribbons (first domino horizontal), halving their count.
// Augmentation boxes receive flag numbers w(m-1), ..., w(0) + 1 bottom to
// top (w a 0-based permutation of 0..m-1); remaining flag boxes get
// m+1, m+2, ... sorted by decreasing content, then component, then row,
// which is always compatible.  Each tuple is emitted with the factor
// prod q^{a(u)+1} t^{l(u)} over the north boxes u of its vertical dominoes,
// arms and legs taken in the row diagram of mu.
void ribbon_tuples(const std::vector<int>& mu, int non_ragged_top, const Perm& w,
                   const std::function<void(const DiagramData&, const QT&)>& emit);

// n(sort_desc(mu)) and the inversion count #{i<j : mu_i > mu_j}.
int nstat_sorted(const std::vector<int>& mu);
int comp_inversions(const std::vector<int>& mu);

}  // namespace nsmac
