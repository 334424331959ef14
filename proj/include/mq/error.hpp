#ifndef MQ_ERROR_HPP
#define MQ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mq {

// Error categories, grouped by the CLI exit code they map to:
// validation errors exit 2, unsupported-class errors exit 3 and
// internal consistency failures exit 4.
enum class ErrorKind {
  NotAssociative,
  NoIdentity,
  IndexOutOfRange,
  SizeLimitExceeded,
  UnknownFamily,
  ParamsOutOfRange,
  NotIdempotent,
  NotDG,
  NotRTrivial,
  NotJTrivial,
  NotRectangular,
  NotBand,
  NotOrthogroup,
  NotDA,
  NotMultiplicative,
  NotACategory,
  NotSkeletal,
  NotEI,
  NoSuitablePrime,
  PrimeMismatch,
  LiftAmbiguous,
  BadCharacteristic,
  NegativeEntry,
  UnsupportedClass,
  BadInput,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

const char* error_kind_name(ErrorKind k);

// 2 = validation, 3 = class unsupported, 4 = internal consistency.
int error_exit_code(ErrorKind k);

}  // namespace mq

#endif
