#ifndef INEQ_ERROR_HPP
#define INEQ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ineq {

enum class ErrorCode {
  DimensionMismatch,
  FieldMismatch,
  NonAdmissible,
  ParamDomain,
  NoKnownWitness,
};

inline const char* to_string(ErrorCode c) noexcept {
  switch (c) {
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::FieldMismatch:     return "FIELD_MISMATCH";
    case ErrorCode::NonAdmissible:     return "NON_ADMISSIBLE";
    case ErrorCode::ParamDomain:       return "PARAM_DOMAIN";
    case ErrorCode::NoKnownWitness:    return "NO_KNOWN_WITNESS";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace ineq

#endif
