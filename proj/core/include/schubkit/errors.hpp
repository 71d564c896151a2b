#pragma once

#include <stdexcept>
#include <string>

namespace schubkit {

/// Thrown when an enumeration would exceed its configured budget.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when the hypothesis of a verified inequality does not apply
/// (as opposed to a malformed input).
class hypothesis_error : public std::invalid_argument {
public:
    explicit hypothesis_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace schubkit
