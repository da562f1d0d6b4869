#include "cychains/grading.hpp"

#include <stdexcept>

namespace cychains {

int koszul_sign(const std::vector<int>& perm, const std::vector<int>& degrees) {
    if (perm.size() != degrees.size())
        throw std::invalid_argument("koszul_sign: length mismatch");
    int parity = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j])
                parity += degrees[static_cast<size_t>(perm[i])] *
                          degrees[static_cast<size_t>(perm[j])];
    return (parity % 2 == 0) ? 1 : -1;
}

std::vector<int> perm_compose(const std::vector<int>& p, const std::vector<int>& q) {
    if (p.size() != q.size()) throw std::invalid_argument("perm_compose: length mismatch");
    std::vector<int> r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[static_cast<size_t>(q[i])];
    return r;
}

std::vector<int> permute_degrees(const std::vector<int>& perm, const std::vector<int>& degrees) {
    std::vector<int> r(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) r[i] = degrees[static_cast<size_t>(perm[i])];
    return r;
}

} // namespace cychains
