#include "ballot/permutation.hpp"

#include <algorithm>
#include <string>

namespace ballot {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    const int n = static_cast<int>(image_.size());
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t i = 0; i < image_.size(); ++i) {
        int v = image_[i];
        if (v < 1 || v > n || seen[v - 1]) {
            throw validation_error("NotAPermutation",
                                   "value " + std::to_string(v) + " at position " +
                                       std::to_string(i + 1),
                                   static_cast<int>(i + 1));
        }
        seen[v - 1] = true;
    }
}

int Permutation::last() const {
    if (image_.empty()) {
        throw validation_error("EmptyPermutation", "the empty permutation has no last letter");
    }
    return image_.back();
}

int lis_length(const Permutation& p) {
    // Patience sorting: piles[j] holds the smallest possible tail of an
    // increasing subsequence of length j + 1.
    std::vector<int> piles;
    for (int v : p.image()) {
        auto it = std::lower_bound(piles.begin(), piles.end(), v);
        if (it == piles.end()) {
            piles.push_back(v);
        } else {
            *it = v;
        }
    }
    return static_cast<int>(piles.size());
}

bool is_123_avoiding(const Permutation& p) {
    return lis_length(p) <= 2;
}

int decreasing_prefix(const Permutation& p) {
    if (p.empty()) return 0;
    int m = 1;
    while (m < static_cast<int>(p.size()) && p[m - 1] > p[m]) ++m;
    return m;
}

}  // namespace ballot
