#pragma once

#include <stdexcept>
#include <string>

namespace kwise {

enum class ErrorKind {
  invalid_input,
  malformed_witness,
  infeasible,
  infeasible_for_extreme,
  out_of_range,
  invalid_pair,
  overdraw,
  unsupported,
  precondition,
  cannot_increment,
  mode_mismatch,
  too_large,
};

const char* to_string(ErrorKind kind);

/// User-facing failure. Broken internal invariants are reported as
/// std::logic_error instead, since they indicate a bug rather than bad input.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace kwise
