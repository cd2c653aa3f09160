#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qgroups {

/// Malformed expression text. `position` is the 0-based byte offset of the
/// offending token.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Raised when a rational function is evaluated at q = 1 and its reduced
/// denominator vanishes there.
class pole_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace qgroups
