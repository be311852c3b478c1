// Brute-force oracles, kept independent of the library's implementation
// paths they are used to check.
#pragma once

#include <cstdint>
#include <vector>

#include "ballot/permutation.hpp"

namespace oracles {

// LIS by trying every subset of positions (n <= ~20).
inline int lis_brute_force(const std::vector<int>& values) {
    const int n = static_cast<int>(values.size());
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int prev = 0;
        int len = 0;
        bool increasing = true;
        for (int i = 0; i < n && increasing; ++i) {
            if (mask & (1u << i)) {
                if (values[i] <= prev) increasing = false;
                prev = values[i];
                ++len;
            }
        }
        if (increasing && len > best) best = len;
    }
    return best;
}

// Number of standard fillings of the two-row shape (l1, l2), by recursion on
// how many cells of each row are already filled.
inline long long standard_fillings(int l1, int l2, int c1 = 0, int c2 = 0) {
    if (c1 == l1 && c2 == l2) return 1;
    long long total = 0;
    if (c1 < l1) total += standard_fillings(l1, l2, c1 + 1, c2);
    if (c2 < l2 && c2 < c1) total += standard_fillings(l1, l2, c1, c2 + 1);
    return total;
}

// All sequences of length n over 1..max_letter, for validator sweeps.
inline std::vector<std::vector<int>> all_sequences(int n, int max_letter) {
    std::vector<std::vector<int>> out;
    std::vector<int> current(n, 1);
    while (true) {
        out.push_back(current);
        int i = n - 1;
        while (i >= 0 && current[i] == max_letter) current[i--] = 1;
        if (i < 0) break;
        ++current[i];
    }
    if (n == 0) out = {{}};
    return out;
}

// Is this sequence a valid code by direct definition?
inline bool is_code_brute(const std::vector<int>& v) {
    if (v.empty()) return true;
    if (v[0] != 1) return false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i + 1] > v[i] + 1) return false;
        if (v[i + 1] < 1) return false;
    }
    return true;
}

}  // namespace oracles
