#pragma once

#include <stdexcept>
#include <string>

namespace finigeo {

/// Bad argument: dimension mismatch, label out of range, malformed structure.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// The requested computation is outside the supported size range.
class CapacityError : public std::length_error {
public:
    explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

/// A construction invariant failed. Indicates a bug, never bad input.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace finigeo
