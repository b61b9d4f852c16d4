#include "nsmac/diagrams.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

#include "nsmac/error.hpp"
#include "nsmac/partition.hpp"

namespace nsmac {

namespace {

std::vector<int> block_starts(const std::vector<int>& r) {
  std::vector<int> s(r.size() + 1, 0);
  for (size_t b = 0; b < r.size(); ++b) s[b + 1] = s[b] + r[b];
  return s;
}

}  // namespace

std::vector<RaggedSkew> DiagramData::tuple() const {
  std::vector<RaggedSkew> out;
  auto s = block_starts(r);
  for (int b = 0; b < components(); ++b) {
    RaggedSkew sk;
    for (int j = 0; j < r[b]; ++j) {
      sk.alpha.push_back(gamma[s[b] + j] + j);
      sk.beta.push_back(eta[s[b] + j] + j);
    }
    out.push_back(std::move(sk));
  }
  return out;
}

std::vector<int> DiagramData::flag_numbers() const {
  Perm si = perm_inverse(sigma);
  std::vector<int> f(length());
  for (int j = 0; j < length(); ++j) f[j] = length() - si[j];
  return f;
}

std::vector<int> DiagramData::component_of() const {
  std::vector<int> c(length());
  auto s = block_starts(r);
  for (int b = 0; b < components(); ++b)
    for (int j = s[b]; j < s[b + 1]; ++j) c[j] = b;
  return c;
}

DiagramData validate_and_convert(std::vector<int> r, std::vector<int> gamma,
                                 std::vector<int> eta, Perm sigma) {
  int l = 0;
  for (int rb : r) {
    check(rb >= 1, "InvalidShape", "component row counts must be positive");
    l += rb;
  }
  check((int)gamma.size() == l && (int)eta.size() == l && (int)sigma.size() == l,
        "InvalidShape", "gamma, eta, sigma must all have length sum(r)");

  auto s = block_starts(r);
  for (size_t b = 0; b < r.size(); ++b) {
    for (int j = s[b]; j < s[b + 1]; ++j) {
      if (j > s[b]) {
        check(gamma[j] < gamma[j - 1], "GammaNotRegular",
              "gamma must be strictly decreasing within each component, rows " +
                  std::to_string(j - 1) + "," + std::to_string(j));
        check(eta[j] <= eta[j - 1], "NotRaggedRight",
              "eta must be weakly decreasing within each component, rows " +
                  std::to_string(j - 1) + "," + std::to_string(j));
      }
      check(gamma[j] <= eta[j], "NotRaggedRight",
            "gamma must not exceed eta, row " + std::to_string(j));
    }
  }

  {
    std::vector<char> seen(l, 0);
    bool ok = true;
    for (int v : sigma) {
      if (v < 0 || v >= l || seen[v]) { ok = false; break; }
      seen[v] = 1;
    }
    check(ok, "IncompatibleSigma", "sigma is not a permutation of the rows");
  }

  // Flag-number criterion: numbers decrease as flag box content increases,
  // and increase bottom to top among equal contents within one component.
  DiagramData data{std::move(r), std::move(gamma), std::move(eta), std::move(sigma)};
  auto f = data.flag_numbers();
  auto comp = data.component_of();
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      if (data.eta[i] < data.eta[j])
        check(f[i] > f[j], "IncompatibleSigma",
              "flag numbers must decrease as flag box content increases, rows " +
                  std::to_string(i) + "," + std::to_string(j));
      if (i < j && data.eta[i] == data.eta[j] && comp[i] == comp[j])
        check(f[i] < f[j], "IncompatibleSigma",
              "flag numbers must increase bottom to top on equal-content flag "
              "boxes of one component, rows " +
                  std::to_string(i) + "," + std::to_string(j));
    }
  return data;
}

DiagramData data_from_tuple(const std::vector<RaggedSkew>& tuple,
                            const std::vector<int>& flags) {
  std::vector<int> r, gamma, eta;
  for (const auto& sk : tuple) {
    check(sk.alpha.size() == sk.beta.size() && !sk.alpha.empty(), "InvalidShape",
          "each component needs matching nonempty alpha, beta");
    r.push_back(sk.rows());
    for (int j = 0; j < sk.rows(); ++j) {
      gamma.push_back(sk.alpha[j] - j);
      eta.push_back(sk.beta[j] - j);
    }
  }
  int l = (int)gamma.size();
  check((int)flags.size() == l, "InvalidShape", "need one flag number per row");
  std::vector<char> seen(l + 1, 0);
  for (int fv : flags) {
    check(fv >= 1 && fv <= l && !seen[fv], "IncompatibleSigma",
          "flag numbers must be a permutation of 1..l");
    seen[fv] = 1;
  }
  Perm si(l);
  for (int j = 0; j < l; ++j) si[j] = l - flags[j];
  return validate_and_convert(std::move(r), std::move(gamma), std::move(eta),
                              perm_inverse(si));
}

TriplesStats triples_stats(const DiagramData& data) {
  TriplesStats st;
  int l = data.length();
  auto comp = data.component_of();
  for (int g = 0; g < l; ++g)
    for (int c = data.gamma[g]; c <= data.eta[g]; ++c)
      for (int g2 = 0; g2 < l; ++g2)
        if (comp[g2] < comp[g] && data.gamma[g2] <= c && c < data.eta[g2]) ++st.h;
  Perm si = perm_inverse(data.sigma);
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j)
      if (comp[i] != comp[j] && data.eta[i] == data.eta[j] && si[i] > si[j]) ++st.e;
  return st;
}

std::vector<Box> boxes_in_reading_order(const DiagramData& data) {
  std::vector<Box> out;
  auto s = block_starts(data.r);
  for (int b = 0; b < data.components(); ++b)
    for (int j = 0; j < data.r[b]; ++j) {
      int g = s[b] + j;
      for (int c = data.gamma[g]; c < data.eta[g]; ++c)
        out.push_back({b, j, g, c, 0});
    }
  std::sort(out.begin(), out.end(), [](const Box& a, const Box& b) {
    return std::tie(a.content, a.global_row) < std::tie(b.content, b.global_row);
  });
  for (size_t i = 0; i < out.size(); ++i) out[i].pos = (int)i;
  return out;
}

std::vector<std::vector<int>> bounds_alphabet(const std::vector<int>& b) {
  std::vector<std::vector<int>> subsets;
  int prev = 0;
  for (int bi : b) {
    check(bi >= prev && bi >= 1, "InvalidShape",
          "flag bounds must be weakly increasing positive integers");
    std::vector<int> sub;
    for (int v = prev + 1; v <= bi; ++v) sub.push_back(pos_letter(v));
    subsets.push_back(std::move(sub));
    prev = bi;
  }
  return subsets;
}

std::vector<std::vector<int>> signed_bounds_alphabet(const std::vector<int>& b) {
  std::vector<std::vector<int>> subsets;
  int prev = 0;
  for (int bi : b) {
    check(bi >= prev && bi >= 1, "InvalidShape",
          "flag bounds must be weakly increasing positive integers");
    std::vector<int> sub;
    int lo = prev == 0 ? pos_letter(1) : bar_letter(prev);
    for (int code = lo; code <= pos_letter(bi); ++code) sub.push_back(code);
    subsets.push_back(std::move(sub));
    prev = bi;
  }
  return subsets;
}

std::vector<std::vector<int>> truncate_alphabet(std::vector<std::vector<int>> subsets,
                                                int max_value) {
  for (auto& sub : subsets)
    sub.erase(std::remove_if(sub.begin(), sub.end(),
                             [&](int code) { return letter_value(code) > max_value; }),
              sub.end());
  return subsets;
}

namespace {

struct BoxPlan {
  int left = -1, above = -1;        // positions of already-filled neighbors
  std::vector<int> cands;           // allowed letter codes, ascending
  // real attacking partners filled earlier: (position, true when this box is
  // the pair's first member x)
  std::vector<std::pair<int, bool>> partners;
  std::vector<int> flag_ps;         // flag numbers of attacking flag boxes
};

struct Enumerator {
  const std::vector<Box>& boxes;
  std::vector<BoxPlan> plan;
  std::vector<int> subset_of;       // letter code -> subset index, 0 if absent
  const std::function<void(const Filling&, long, long)>& emit;
  Filling fill;

  void run(size_t k, long inv, long m) {
    if (k == boxes.size()) {
      emit(fill, inv, m);
      return;
    }
    const BoxPlan& p = plan[k];
    for (int a : p.cands) {
      if (p.left >= 0 && letter_succ(fill.codes[p.left], a)) continue;
      if (p.above >= 0 && !letter_succ(fill.codes[p.above], a)) continue;
      long d = 0;
      for (auto [q, first] : p.partners)
        d += first ? letter_succ(a, fill.codes[q]) : letter_succ(fill.codes[q], a);
      for (int fp : p.flag_ps) d += subset_of[a] > fp;
      fill.codes[k] = a;
      run(k + 1, inv + d, m + (a & 1));
    }
  }
};

}  // namespace

void enumerate_fsst(const DiagramData& data,
                    const std::vector<std::vector<int>>& subsets,
                    const std::function<void(const Filling&, long inv, long m)>& emit) {
  int l = data.length();
  check((int)subsets.size() == l, "InvalidShape", "need one alphabet subset per row");
  int maxcode = 1;
  for (const auto& sub : subsets)
    for (int code : sub) {
      check(code >= 2, "InvalidShape", "letter codes start at 2");
      maxcode = std::max(maxcode, code);
    }
  std::vector<int> subset_of(maxcode + 1, 0);
  int last = 0;
  for (int i = 0; i < l; ++i) {
    auto sub = subsets[i];
    std::sort(sub.begin(), sub.end());
    for (int code : sub) {
      check(code > last, "InvalidShape",
            "alphabet subsets must be disjoint and increasing");
      check(subset_of[code] == 0, "InvalidShape",
            "alphabet subsets must be disjoint");
      subset_of[code] = i + 1;
      last = code;
    }
  }

  auto boxes = boxes_in_reading_order(data);
  auto f = data.flag_numbers();
  auto comp = data.component_of();
  std::map<std::tuple<int, int, int>, int> at;  // (comp, row, content) -> pos
  for (const auto& bx : boxes) at[{bx.comp, bx.row, bx.content}] = bx.pos;

  auto s = block_starts(data.r);
  std::vector<BoxPlan> plan(boxes.size());
  for (const auto& bx : boxes) {
    BoxPlan& p = plan[bx.pos];
    if (auto it = at.find({bx.comp, bx.row, bx.content - 1}); it != at.end())
      p.left = it->second;
    if (auto it = at.find({bx.comp, bx.row + 1, bx.content - 1}); it != at.end())
      p.above = it->second;
    // admissible subset indices: above every same-component flag box below
    // this box in its column, at most the flag number of its row
    int lo = 0, hi = f[bx.global_row];
    for (int j = 0; j < bx.row; ++j)
      if (data.eta[s[bx.comp] + j] + j == bx.content + bx.row)
        lo = std::max(lo, f[s[bx.comp] + j]);
    for (int i = lo + 1; i <= hi; ++i)
      for (int code : subsets[i - 1]) p.cands.push_back(code);
    std::sort(p.cands.begin(), p.cands.end());
    // real attacking partners: register the pair with the later position
    for (const auto& by : boxes) {
      if (by.pos >= bx.pos || by.comp == bx.comp) continue;
      if ((bx.comp < by.comp && by.content == bx.content) ||
          (bx.comp > by.comp && by.content == bx.content + 1))
        p.partners.push_back({by.pos, true});   // bx is x, by is y
      if ((by.comp < bx.comp && bx.content == by.content) ||
          (by.comp > bx.comp && bx.content == by.content + 1))
        p.partners.push_back({by.pos, false});  // by is x, bx is y
    }
    // attacking flag boxes (always second members)
    for (int g = 0; g < l; ++g) {
      if (comp[g] == bx.comp) continue;
      if ((bx.comp < comp[g] && data.eta[g] == bx.content) ||
          (bx.comp > comp[g] && data.eta[g] == bx.content + 1))
        p.flag_ps.push_back(f[g]);
    }
  }

  Enumerator en{boxes, std::move(plan), std::move(subset_of), emit, {}};
  en.fill.codes.assign(boxes.size(), 0);
  en.run(0, 0, 0);
}

bool filling_non_attacking(const DiagramData& data, const Filling& T,
                           const std::vector<int>& b) {
  int l = data.length();
  check((int)b.size() == l, "InvalidShape", "need one flag bound per row");
  auto boxes = boxes_in_reading_order(data);
  check(T.codes.size() == boxes.size(), "InvalidShape",
        "filling does not match the tuple");
  auto f = data.flag_numbers();
  auto comp = data.component_of();
  for (const auto& bx : boxes) {
    int vx = letter_value(T.codes[bx.pos]);
    for (const auto& by : boxes)
      if (bx.comp != by.comp &&
          ((bx.comp < by.comp && by.content == bx.content) ||
           (bx.comp > by.comp && by.content == bx.content + 1)) &&
          vx == letter_value(T.codes[by.pos]))
        return false;
    for (int g = 0; g < l; ++g)
      if (comp[g] != bx.comp &&
          ((bx.comp < comp[g] && data.eta[g] == bx.content) ||
           (bx.comp > comp[g] && data.eta[g] == bx.content + 1)) &&
          vx == b[f[g] - 1])
        return false;
  }
  return true;
}

std::vector<std::vector<ArmLeg>> arm_leg(const std::vector<int>& mu) {
  int m = (int)mu.size();
  std::vector<std::vector<ArmLeg>> table(m);
  for (int i = 0; i < m; ++i) {
    check(mu[i] >= 0, "InvalidShape", "entries must be nonnegative");
    table[i].resize(mu[i]);
    for (int c = 1; c <= mu[i]; ++c) {
      ArmLeg& al = table[i][c - 1];
      al.a = mu[i] - c;
      for (int j = 0; j < i; ++j) al.l += c <= mu[j] && mu[j] <= mu[i];
      for (int j = i + 1; j < m; ++j) al.l += c <= mu[j] + 1 && mu[j] + 1 <= mu[i];
    }
  }
  return table;
}

std::vector<std::vector<int>> reduced_leg(const std::vector<int>& mu, int r, int k) {
  int m = (int)mu.size();
  check(r >= 0 && k >= 0 && r + k <= m, "IndexOutOfRange",
        "blocks must fit inside mu");
  auto table = arm_leg(mu);
  std::vector<std::vector<int>> out(k);
  for (int i = r; i < r + k; ++i) {
    out[i - r].resize(mu[i]);
    for (int c = 1; c <= mu[i]; ++c) {
      int lr = table[i][c - 1].l;
      for (int j = 0; j < r; ++j) lr -= mu[j] == c;
      for (int j = i + 1; j < m; ++j) lr -= mu[j] == c - 1;
      out[i - r][c - 1] = lr;
    }
  }
  return out;
}

DiagramData row_diagram_data(const std::vector<int>& mu) {
  int m = (int)mu.size();
  std::vector<RaggedSkew> tuple;
  std::vector<int> flags;
  for (int ci = 0; ci < m; ++ci) {
    tuple.push_back({{-mu[m - 1 - ci]}, {0}});
    flags.push_back(m - ci);
  }
  return data_from_tuple(tuple, flags);
}

namespace {

// Rows of one augmented ribbon from the choice bits v_1..v_s (bit k-1 set
// means the dominoes of contents (-k, -k+1) sit vertically).
RaggedSkew ribbon_shape(int s, unsigned choice) {
  RaggedSkew sk;
  int rows = 1;
  for (int k = 1; k <= s; ++k) rows += (choice >> (s - k)) & 1;
  std::vector<int> kmin(rows + 1, 0), kmax(rows + 1, 0);
  int row = 1;
  for (int k = 1; k <= s; ++k) {
    row += (choice >> (s - k)) & 1;
    if (!kmin[row]) kmin[row] = k;
    kmax[row] = k;
  }
  for (int j = 1; j <= rows; ++j) {
    if (!kmin[j]) {  // empty first row: augmentation box only
      sk.alpha.push_back(0);
      sk.beta.push_back(0);
    } else {
      sk.alpha.push_back((j - 1) - kmax[j]);
      sk.beta.push_back(j - kmin[j]);
    }
  }
  return sk;
}

}  // namespace

void ribbon_tuples(const std::vector<int>& mu, int non_ragged_top, const Perm& w,
                   const std::function<void(const DiagramData&, const QT&)>& emit) {
  int m = (int)mu.size();
  check(non_ragged_top >= 0 && non_ragged_top <= m, "IndexOutOfRange",
        "restriction count must lie in 0..m");
  check((int)w.size() == m, "InvalidShape", "flag permutation must have size m");
  auto table = arm_leg(mu);

  std::vector<unsigned> limit(m), choice(m, 0);
  for (int ci = 0; ci < m; ++ci) {
    int mi = m - 1 - ci, s = mu[mi];
    limit[ci] = s == 0 ? 1u
                       : (mi < non_ragged_top ? 1u << (s - 1) : 1u << s);
  }

  for (;;) {
    std::vector<RaggedSkew> tuple;
    std::vector<int> flags;
    QT factor(1);
    // non-augmentation flag boxes, keyed for the canonical assignment
    std::vector<std::tuple<int, int, int, int>> extra;  // (-content, comp, row, global)
    int g = 0;
    for (int ci = 0; ci < m; ++ci) {
      int mi = m - 1 - ci, s = mu[mi];
      RaggedSkew sk = ribbon_shape(s, choice[ci]);
      for (int k = 1; k <= s; ++k)
        if ((choice[ci] >> (s - k)) & 1) {
          const ArmLeg& al = table[mi][k - 1];
          factor = factor * QT::mono(al.a + 1, al.l, 1);
        }
      flags.push_back(w[mi] + 1);
      ++g;
      for (int j = 1; j < sk.rows(); ++j, ++g) {
        extra.push_back({-(sk.beta[j] - j), ci, j, g});
        flags.push_back(0);
      }
      tuple.push_back(std::move(sk));
    }
    std::sort(extra.begin(), extra.end());
    int next = m + 1;
    for (const auto& e : extra) flags[std::get<3>(e)] = next++;
    emit(data_from_tuple(tuple, flags), factor);

    int ci = 0;
    while (ci < m && ++choice[ci] == limit[ci]) choice[ci++] = 0;
    if (ci == m) break;
  }
}

int nstat_sorted(const std::vector<int>& mu) {
  return nstat(sort_to_partition(mu));
}

int comp_inversions(const std::vector<int>& mu) {
  int inv = 0;
  for (size_t i = 0; i < mu.size(); ++i)
    for (size_t j = i + 1; j < mu.size(); ++j) inv += mu[i] > mu[j];
  return inv;
}

}  // namespace nsmac
