#pragma once

#include <stdexcept>
#include <string>

namespace semi {

enum class ErrorKind {
  malformed_input,
  not_associative,
  not_closed,
  order_too_large,
  degree_mismatch,
  not_extendable,
  not_an_automorphism,
  io_failure,
};

const char* to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` lets callers map
/// failures onto exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for failures caused by size or search budgets rather than bad input.
  bool is_resource_limit() const noexcept {
    return kind_ == ErrorKind::order_too_large;
  }

 private:
  ErrorKind kind_;
};

}  // namespace semi
