#pragma once
#include <vector>

#include "nsmac/laurent.hpp"

namespace nsmac {

// One-line notation, 0-based: w[i] is the image of i.
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_w0(int n);
bool perm_is_identity(const Perm& w);
Perm perm_inverse(const Perm& w);
// (u*v)(i) = u(v(i))
Perm perm_compose(const Perm& u, const Perm& v);
// inversion count
int perm_length(const Perm& w);
// Word r with w = s_{r[k-1]} ... s_{r[1]} s_{r[0]}; operators attached to w
// along a reduced word are applied in the order r[0], r[1], ...
std::vector<int> reduced_word(Perm w);
bool perm_bruhat_leq(const Perm& u, const Perm& w);
std::vector<Perm> all_perms(int n);

// Left action on weights: (w.mu)[w[i]] = mu[i].
Exp perm_apply(const Perm& w, const Exp& mu);
// Minimal-length w with w(base) = target; base and target must be
// rearrangements of each other.
Perm minimal_perm_from(const Exp& base, const Exp& target);
// Minimal-length w with w(sort_desc(mu)) = mu.
Perm minimal_sorting_perm(const Exp& mu);

}  // namespace nsmac
