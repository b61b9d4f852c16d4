#include "nsmac/partition.hpp"

#include <algorithm>
#include <functional>

#include "nsmac/error.hpp"

namespace nsmac {

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); i++) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

int part_sum(const Partition& p) {
  int s = 0;
  for (int v : p) s += v;
  return s;
}

Partition sort_to_partition(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<int>());
  while (!v.empty() && v.back() == 0) v.pop_back();
  check(v.empty() || v.back() > 0, "InternalError", "sort_to_partition got a negative entry");
  return v;
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  Partition c(p[0], 0);
  for (int v : p)
    for (int j = 0; j < v; j++) c[j]++;
  return c;
}

int nstat(const Partition& p) {
  int s = 0;
  for (size_t i = 0; i < p.size(); i++) s += (int)i * p[i];
  return s;
}

std::vector<Partition> partitions_of(int d) { return partitions_of_maxlen(d, d); }

std::vector<Partition> partitions_of_maxlen(int d, int maxlen) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rem, int maxpart) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    if ((int)cur.size() >= maxlen) return;
    for (int v = std::min(rem, maxpart); v >= 1; v--) {
      cur.push_back(v);
      rec(rem - v, v);
      cur.pop_back();
    }
  };
  if (d >= 0) rec(d, d);
  return out;
}

std::vector<std::vector<int>> compositions_of(int d, int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(len, 0);
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == len) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    if (pos == len - 1) {
      cur[pos] = rem;
      out.push_back(cur);
      cur[pos] = 0;
      return;
    }
    for (int v = 0; v <= rem; v++) {
      cur[pos] = v;
      rec(pos + 1, rem - v);
      cur[pos] = 0;
    }
  };
  if (len == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(0, d);
  return out;
}

bool dominance_leq(const Partition& a, const Partition& b) {
  int sa = 0, sb = 0;
  size_t m = std::max(a.size(), b.size());
  for (size_t i = 0; i < m; i++) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa > sb) return false;
  }
  return sa == sb;
}

}  // namespace nsmac
