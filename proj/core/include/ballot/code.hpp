#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "ballot/errors.hpp"

namespace ballot {

// Sequence a_1 ... a_n of positive integers with a_1 = 1 and a_{i+1} <= a_i + 1.
// The empty (void) code is valid. Immutable after construction.
class Code {
public:
    Code() = default;

    // Throws validation_error with kind FirstLetterNotOne, GrowthViolation
    // or NonPositiveLetter.
    explicit Code(std::vector<int> values);

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    const std::vector<int>& values() const noexcept { return values_; }
    int operator[](std::size_t i) const { return values_[i]; }  // 0-based

    // Last letter a_n. Throws EmptyCode on the void code.
    int last() const;

    friend bool operator==(const Code&, const Code&) = default;
    friend std::strong_ordering operator<=>(const Code& a, const Code& b) {
        return a.values_ <=> b.values_;
    }

private:
    std::vector<int> values_;
};

}  // namespace ballot
