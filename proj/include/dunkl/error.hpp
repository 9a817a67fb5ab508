#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dunkl {

// Failure categories surfaced by the library. The CLI maps these onto exit
// codes, so keep the list short and stable.
enum class ErrorKind {
  invalid_argument,
  domain_tag,
  unsupported_group,
  not_finite_group,
  resolution,
  domain_too_small,
  geometry,
  series_order,
  inadmissible_test_function,
  invalid_input,
  config,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

// Literal overload so hot paths do not build a message string per call.
inline void require(bool condition, ErrorKind kind, const char* what) {
  if (!condition) fail(kind, what);
}

}  // namespace dunkl
