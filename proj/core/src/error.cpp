#include "ringmap/error.hpp"

namespace ringmap {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "E_ARG";
    case ErrorCode::invalid_curve: return "E_CURVE";
    case ErrorCode::numeric_failure: return "E_NUMERIC";
    case ErrorCode::io_failure: return "E_IO";
    case ErrorCode::bad_config: return "E_CONFIG";
  }
  return "E_UNKNOWN";
}

int error_exit_status(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return 2;
    case ErrorCode::invalid_curve: return 3;
    case ErrorCode::numeric_failure: return 4;
    case ErrorCode::io_failure: return 5;
    case ErrorCode::bad_config: return 6;
  }
  return 1;
}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

} // namespace ringmap
