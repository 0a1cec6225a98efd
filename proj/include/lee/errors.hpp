#pragma once

#include <stdexcept>
#include <string>

namespace lee {

// Inputs that violate a precondition (bad ranges, parity, malformed data).
// std::invalid_argument and std::domain_error are reused directly for those
// cases; the two classes below mark failures that callers may want to treat
// differently from bad input.

// An enumeration or construction would exceed a configured resource cap.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// A constructed object failed its own certification (surfaced, never masked).
struct construction_error : std::runtime_error {
    explicit construction_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lee
