#pragma once

#include <stdexcept>
#include <string>

namespace mub {

/// Thrown when a construction is asked for a dimension it does not cover
/// (e.g. a prime-only method invoked with a composite number).
class UnsupportedDimension : public std::runtime_error {
 public:
  explicit UnsupportedDimension(const std::string& what)
      : std::runtime_error(what) {}
};

/// Thrown when a caller supplies a theta for which 1 + theta^2 is a
/// quadratic residue mod p, so the entangled bases would not be unbiased.
class InvalidTheta : public std::invalid_argument {
 public:
  explicit InvalidTheta(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace mub
