#include "ballot/dyck.hpp"

#include <string>

namespace ballot {

DyckWord::DyckWord(std::vector<Step> letters) : letters_(std::move(letters)) {
    int height = 0;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        height += letters_[i] == Step::Up ? 1 : -1;
        if (height < 0) {
            throw validation_error("PrefixViolation",
                                   "prefix of length " + std::to_string(i + 1) +
                                       " has more Down than Up",
                                   static_cast<int>(i + 1));
        }
    }
    if (height != 0) {
        throw validation_error("Unbalanced",
                               "word has " + std::to_string(height) + " unmatched Up letters",
                               height);
    }
}

int DyckWord::trailing_descents() const {
    if (letters_.empty()) {
        throw validation_error("EmptyWord", "the empty word has no trailing descents");
    }
    int count = 0;
    for (auto it = letters_.rbegin(); it != letters_.rend() && *it == Step::Down; ++it) {
        ++count;
    }
    return count;
}

int DyckWord::irreducible_factors() const {
    if (letters_.empty()) {
        throw validation_error("EmptyWord", "the empty word has no factorization");
    }
    int height = 0;
    int returns = 0;
    for (Step s : letters_) {
        height += s == Step::Up ? 1 : -1;
        if (height == 0) ++returns;
    }
    return returns;
}

}  // namespace ballot
