#include "ballot/trajectory.hpp"

#include <string>

namespace ballot {

Trajectory::Trajectory(std::vector<int> reserve) : reserve_(std::move(reserve)) {
    for (std::size_t i = 0; i < reserve_.size(); ++i) {
        if (reserve_[i] < 0) {
            throw validation_error("NegativeValue",
                                   "balance at tick " + std::to_string(i + 1) + " is " +
                                       std::to_string(reserve_[i]),
                                   static_cast<int>(i + 1));
        }
    }
    if (!reserve_.empty() && reserve_[0] != 0) {
        throw validation_error("FirstValueNotZero",
                               "first balance is " + std::to_string(reserve_[0]), 1);
    }
    for (std::size_t i = 0; i + 1 < reserve_.size(); ++i) {
        if (reserve_[i + 1] > reserve_[i] + 1) {
            throw validation_error("GrowthViolation",
                                   "balance rises by more than one unit at tick " +
                                       std::to_string(i + 2),
                                   static_cast<int>(i + 2));
        }
    }
}

int Trajectory::final_value() const {
    if (reserve_.empty()) {
        throw validation_error("EmptyTrajectory", "the empty trajectory has no final value");
    }
    return reserve_.back();
}

}  // namespace ballot
