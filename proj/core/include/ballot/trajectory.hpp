#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "ballot/errors.hpp"

namespace ballot {

// Reserve-account balance history r_1 ... r_n: r_1 = 0, each step rises by
// at most one unit, and the balance never goes negative. The zero-based
// counterpart of a Code (subtract 1 elementwise).
class Trajectory {
public:
    Trajectory() = default;

    // Throws validation_error with kind FirstValueNotZero, GrowthViolation
    // or NegativeValue.
    explicit Trajectory(std::vector<int> reserve);

    std::size_t size() const noexcept { return reserve_.size(); }
    bool empty() const noexcept { return reserve_.empty(); }
    const std::vector<int>& reserve() const noexcept { return reserve_; }
    int operator[](std::size_t i) const { return reserve_[i]; }  // 0-based

    // Final balance r_n. Throws EmptyTrajectory.
    int final_value() const;

    friend bool operator==(const Trajectory&, const Trajectory&) = default;
    friend std::strong_ordering operator<=>(const Trajectory& a, const Trajectory& b) {
        return a.reserve_ <=> b.reserve_;
    }

private:
    std::vector<int> reserve_;
};

}  // namespace ballot
