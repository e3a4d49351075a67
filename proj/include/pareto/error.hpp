#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pareto {

// Error taxonomy shared by every module; the CLI and server report `code_name()`.
enum class ErrorCode {
  InvalidInput,
  Geometry,
  Degeneracy,
  AmbiguousLocation,
  IncompleteAnnotation,
  Inconsistency,
  Order,
  Routing,
  Genericity,
  CapExceeded,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }
  std::string_view code_name() const { return to_string(code_); }

 private:
  ErrorCode code_;
};

}  // namespace pareto
