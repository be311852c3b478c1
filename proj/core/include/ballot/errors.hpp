#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ballot {

// Validation failures carry a stable kind name (e.g. "GrowthViolation") and,
// where meaningful, a 1-based position or small integer detail.
class validation_error : public std::runtime_error {
public:
    validation_error(std::string kind, const std::string& message, int position = 0)
        : std::runtime_error(kind + ": " + message),
          kind_(std::move(kind)),
          position_(position) {}

    const std::string& kind() const noexcept { return kind_; }
    int position() const noexcept { return position_; }

private:
    std::string kind_;
    int position_;
};

// Work refused because it would exceed a documented size bound.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& message)
        : std::runtime_error(message) {}
};

}  // namespace ballot
