#pragma once

#include <vector>

namespace cychains {

// Koszul sign for rearranging homogeneous elements x_0..x_{n-1} into the
// order x_{perm[0]}, x_{perm[1]}, ...: product over inverted pairs of
// (-1)^{deg_a * deg_b}. Only parities of the degrees matter.
int koszul_sign(const std::vector<int>& perm, const std::vector<int>& degrees);

// (p o q)(i) = p[q[i]]
std::vector<int> perm_compose(const std::vector<int>& p, const std::vector<int>& q);

// degrees rearranged by the permutation: out[i] = degrees[perm[i]]
std::vector<int> permute_degrees(const std::vector<int>& perm, const std::vector<int>& degrees);

} // namespace cychains
