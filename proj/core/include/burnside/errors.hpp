#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace burnside {

/// Malformed word, tower literal, or group descriptor. `position` is a
/// zero-based offset into the input text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("parse error at " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A brute-force routine would exceed one of the configured work caps
/// (CAYLEY_CAP, EXHAUST_CAP, element-enumeration limits).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A claimed structural fact (normality, block system, semisimple factor)
/// did not survive verification.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace burnside
