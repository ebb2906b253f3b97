#pragma once

#include <stdexcept>
#include <string>

namespace skewcc {

/// Raised when a brute-force enumeration would exceed its hard word cap.
/// Distinct from std::domain_error so callers can report "too large to
/// verify exhaustively" separately from a violated mathematical hypothesis.
class enumeration_limit_error : public std::runtime_error {
  public:
    explicit enumeration_limit_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an internal cross-check of a computed result fails. Such a
/// failure is an assertion about the mathematics, not a bad input.
class verification_error : public std::runtime_error {
  public:
    explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace skewcc
