#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

namespace agc {

/// C(n, k), saturating at the maximum of unsigned long long.
inline unsigned long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) {
        unsigned long long num = static_cast<unsigned long long>(n - k + i);
        if (r > std::numeric_limits<unsigned long long>::max() / num)
            return std::numeric_limits<unsigned long long>::max();
        r = r * num / i;  // exact: product of i consecutive integers divisible by i!
    }
    return r;
}

/// Advance c to the next k-subset of [0, n) in lexicographic order.
inline bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

/// Call fn(subset) for every k-subset of [0, n), lexicographically.
template <typename Fn>
void for_each_combination(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> c(k);
    std::iota(c.begin(), c.end(), 0);
    do {
        fn(static_cast<const std::vector<int>&>(c));
    } while (next_combination(c, n));
}

}  // namespace agc
