#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "ballot/errors.hpp"

namespace ballot {

// Standard Young tableau of shape (n, n), stored as two strictly increasing
// rows with row1[i] < row2[i] columnwise and content {1, ..., 2n}. Entry 1
// always sits in row1.
class TwoRowTableau {
public:
    TwoRowTableau() = default;

    // Throws validation_error with kind ShapeMismatch, NotIncreasing,
    // ColumnViolation or ContentNotPermutationOf1To2n.
    TwoRowTableau(std::vector<int> row1, std::vector<int> row2);

    std::size_t size() const noexcept { return row1_.size(); }  // n
    bool empty() const noexcept { return row1_.empty(); }
    const std::vector<int>& row1() const noexcept { return row1_; }
    const std::vector<int>& row2() const noexcept { return row2_; }

    // 2n minus the last entry of row1. Throws EmptyTableau.
    int h() const;

    friend bool operator==(const TwoRowTableau&, const TwoRowTableau&) = default;
    friend std::strong_ordering operator<=>(const TwoRowTableau& a, const TwoRowTableau& b) {
        if (auto c = a.row1_ <=> b.row1_; c != 0) return c;
        return a.row2_ <=> b.row2_;
    }

private:
    std::vector<int> row1_;
    std::vector<int> row2_;
};

}  // namespace ballot
