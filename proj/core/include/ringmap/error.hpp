#pragma once

#include <stdexcept>
#include <string>

namespace ringmap {

/** Stable error classes, mapped one-to-one to CLI exit statuses and to the
 * "code" field of machine-readable error reports. */
enum class ErrorCode {
  invalid_argument, ///< bad numeric parameter or violated precondition
  invalid_curve,    ///< curve fails regularity/simplicity validation
  numeric_failure,  ///< solver breakdown (non-finite values, degenerate system)
  io_failure,       ///< file read/write problem
  bad_config,       ///< malformed or out-of-range configuration document
};

/// Short stable identifier, e.g. "E_ARG", "E_CURVE".
const char* error_code_name(ErrorCode code) noexcept;

/// Process exit status associated with a code (2..6; 0 means success).
int error_exit_status(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

} // namespace ringmap
