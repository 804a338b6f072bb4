#pragma once

#include <stdexcept>
#include <string>

namespace ufr {

/// Thrown when an exact integer result would not fit the 128-bit fast path.
class OverflowError : public std::runtime_error {
public:
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an enumeration entry point is asked for an n beyond its cap.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ufr
