#include "ballot/tableau.hpp"

#include <string>

namespace ballot {

TwoRowTableau::TwoRowTableau(std::vector<int> row1, std::vector<int> row2)
    : row1_(std::move(row1)), row2_(std::move(row2)) {
    if (row1_.size() != row2_.size()) {
        throw validation_error("ShapeMismatch",
                               "rows have lengths " + std::to_string(row1_.size()) + " and " +
                                   std::to_string(row2_.size()));
    }
    const std::size_t n = row1_.size();
    std::vector<bool> seen(2 * n, false);
    for (const auto& row : {row1_, row2_}) {
        for (int v : row) {
            if (v < 1 || v > static_cast<int>(2 * n) || seen[v - 1]) {
                throw validation_error("ContentNotPermutationOf1To2n",
                                       "entry " + std::to_string(v));
            }
            seen[v - 1] = true;
        }
    }
    for (int r = 1; r <= 2; ++r) {
        const auto& row = r == 1 ? row1_ : row2_;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (row[i] >= row[i + 1]) {
                throw validation_error("NotIncreasing",
                                       "row " + std::to_string(r) + " at position " +
                                           std::to_string(i + 2),
                                       static_cast<int>(i + 2));
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (row1_[i] >= row2_[i]) {
            throw validation_error("ColumnViolation",
                                   "column " + std::to_string(i + 1) + " is not increasing",
                                   static_cast<int>(i + 1));
        }
    }
}

int TwoRowTableau::h() const {
    if (row1_.empty()) {
        throw validation_error("EmptyTableau", "the empty tableau has no height parameter");
    }
    return static_cast<int>(2 * row1_.size()) - row1_.back();
}

}  // namespace ballot
