#include "qpr/index_set.hpp"

namespace qpr {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

std::uint64_t quasi_principal_pair_count(int n, int k) {
    detail::check_order_range(n, k);
    return binomial(n, k) *
           (1 + static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(n - k));
}

std::vector<IndexPair> quasi_principal_pairs(int n, int k) {
    std::vector<IndexPair> out;
    out.reserve(quasi_principal_pair_count(n, k));
    for_each_quasi_principal_pair(n, k, [&](std::span<const int> a, std::span<const int> b) {
        out.push_back(IndexPair{IndexSet(std::vector<int>(a.begin(), a.end())),
                                IndexSet(std::vector<int>(b.begin(), b.end()))});
        return true;
    });
    return out;
}

} // namespace qpr
