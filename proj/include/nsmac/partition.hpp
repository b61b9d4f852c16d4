#pragma once
#include <vector>

namespace nsmac {

using Partition = std::vector<int>;  // weakly decreasing positive entries; empty = ()

bool is_partition(const Partition& p);
int part_sum(const Partition& p);
Partition sort_to_partition(std::vector<int> v);  // sort desc, strip zeros; entries must be >= 0
Partition conjugate(const Partition& p);
int nstat(const Partition& p);  // n(lambda) = sum (i-1) * lambda_i

// All partitions of d (d >= 0), in a fixed deterministic order.
std::vector<Partition> partitions_of(int d);
// Partitions of d with at most maxlen parts.
std::vector<Partition> partitions_of_maxlen(int d, int maxlen);

// All vectors in N^len with entry sum d.
std::vector<std::vector<int>> compositions_of(int d, int len);

bool dominance_leq(const Partition& a, const Partition& b);  // same size assumed

}  // namespace nsmac
