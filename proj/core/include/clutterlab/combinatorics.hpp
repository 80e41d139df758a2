#pragma once

#include <functional>
#include <numeric>
#include <vector>

namespace clutterlab {

/// Calls fn for every size-k index subset of [0, n) in lexicographic order;
/// fn returning false stops early. Returns false iff stopped early.
inline bool for_each_combination(int n, int k,
                                 const std::function<bool(const std::vector<int>&)>& fn) {
    if (k < 0 || k > n) return true;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (!fn(idx)) return false;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

inline std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    for_each_combination(n, k, [&](const std::vector<int>& idx) {
        out.push_back(idx);
        return true;
    });
    return out;
}

}  // namespace clutterlab
