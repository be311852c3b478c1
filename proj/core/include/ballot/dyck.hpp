#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "ballot/errors.hpp"

namespace ballot {

enum class Step { Up, Down };

// Balanced word over {Up, Down} whose every prefix has at least as many Up
// as Down letters. length() counts letters (2n); semilength() is n.
class DyckWord {
public:
    DyckWord() = default;

    // Throws validation_error with kind PrefixViolation (position of the
    // offending Down) or Unbalanced (excess of Up over Down in position()).
    explicit DyckWord(std::vector<Step> letters);

    std::size_t length() const noexcept { return letters_.size(); }
    std::size_t semilength() const noexcept { return letters_.size() / 2; }
    bool empty() const noexcept { return letters_.empty(); }
    const std::vector<Step>& letters() const noexcept { return letters_; }

    // Number of consecutive Down letters at the end. Throws EmptyWord.
    int trailing_descents() const;

    // Number of returns of the path to height 0, i.e. the number of
    // irreducible factors in the unique factorization. Throws EmptyWord.
    int irreducible_factors() const;

    friend bool operator==(const DyckWord&, const DyckWord&) = default;
    friend std::strong_ordering operator<=>(const DyckWord& a, const DyckWord& b) {
        return a.letters_ <=> b.letters_;
    }

private:
    std::vector<Step> letters_;
};

}  // namespace ballot
