// Part of the polybasis project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace polybasis {

enum class ErrorCode {
  endpoint_mismatch,
  cell_chain_mismatch,
  measure_violation,
  unresolved_peak,
  not_parallel,
  mode_mismatch,
  unknown_object,
  no_match,
  parse_error,
  invalid_system,
};

const char* error_code_name(ErrorCode code);

class EngineError : public std::runtime_error {
 public:
  EngineError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw EngineError(code, message);
}

}  // namespace polybasis
