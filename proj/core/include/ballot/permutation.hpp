#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "ballot/errors.hpp"

namespace ballot {

// One-line notation: image of 1..n, each value appearing exactly once.
class Permutation {
public:
    Permutation() = default;

    // Throws validation_error with kind NotAPermutation.
    explicit Permutation(std::vector<int> image);

    std::size_t size() const noexcept { return image_.size(); }
    bool empty() const noexcept { return image_.empty(); }
    const std::vector<int>& image() const noexcept { return image_; }
    int operator[](std::size_t i) const { return image_[i]; }  // 0-based

    // image[n]. Throws EmptyPermutation.
    int last() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.image_ <=> b.image_;
    }

private:
    std::vector<int> image_;
};

// Length of the longest strictly increasing subsequence, by patience sorting.
int lis_length(const Permutation& p);

// True iff lis_length <= 2 (vacuously true for the empty permutation).
bool is_123_avoiding(const Permutation& p);

// Largest m with image[1] > image[2] > ... > image[m]; 0 for the empty
// permutation.
int decreasing_prefix(const Permutation& p);

}  // namespace ballot
