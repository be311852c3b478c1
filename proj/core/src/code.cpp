#include "ballot/code.hpp"

#include <string>

namespace ballot {

Code::Code(std::vector<int> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] < 1) {
            throw validation_error("NonPositiveLetter",
                                   "letter at position " + std::to_string(i + 1) +
                                       " is " + std::to_string(values_[i]),
                                   static_cast<int>(i + 1));
        }
    }
    if (!values_.empty() && values_[0] != 1) {
        throw validation_error("FirstLetterNotOne",
                               "first letter is " + std::to_string(values_[0]), 1);
    }
    for (std::size_t i = 0; i + 1 < values_.size(); ++i) {
        if (values_[i + 1] > values_[i] + 1) {
            throw validation_error("GrowthViolation",
                                   std::to_string(values_[i + 1]) + " follows " +
                                       std::to_string(values_[i]) + " at position " +
                                       std::to_string(i + 2),
                                   static_cast<int>(i + 2));
        }
    }
}

int Code::last() const {
    if (values_.empty()) {
        throw validation_error("EmptyCode", "the void code has no last letter");
    }
    return values_.back();
}

}  // namespace ballot
