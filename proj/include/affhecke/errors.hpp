#pragma once

#include <stdexcept>
#include <string>

namespace affhecke {

/// Raised when a computation would exceed a configured resource bound
/// (group order, matrix size, conversion window).
class SizeError : public std::runtime_error {
 public:
  explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a basis conversion needs a translation outside the window.
class WindowError : public SizeError {
 public:
  explicit WindowError(const std::string& what) : SizeError(what) {}
};

}  // namespace affhecke
