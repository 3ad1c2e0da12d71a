#pragma once

#include <stdexcept>
#include <string>

namespace cspleth {

// Error hierarchy used across the library.  The CLI maps each type to a
// distinct process exit code, so new failure modes should get their own
// subclass rather than reusing an existing one.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed graph input (JSON or terse text).
struct GraphFormatError : Error {
  explicit GraphFormatError(const std::string& msg) : Error(msg) {}
};

// Malformed expression or symmetric-function input.
struct ExprParseError : Error {
  explicit ExprParseError(const std::string& msg) : Error(msg) {}
};

// Expression references an alphabet name with no binding.
struct UnknownAlphabetError : Error {
  explicit UnknownAlphabetError(const std::string& msg) : Error(msg) {}
};

// A finite bound was required (e.g. for combinatorial evaluation) but the
// alphabet is unbounded.
struct UnboundedAlphabetError : Error {
  explicit UnboundedAlphabetError(const std::string& msg) : Error(msg) {}
};

// Request exceeds a configured size limit (degree bound, edge-count cap).
struct CapacityError : Error {
  explicit CapacityError(const std::string& msg) : Error(msg) {}
};

// An identity check failed; carries the witness text.
struct VerifyError : Error {
  explicit VerifyError(const std::string& msg) : Error(msg) {}
};

}  // namespace cspleth
