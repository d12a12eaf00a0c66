#ifndef MEMAUDIT_ERRORS_HPP
#define MEMAUDIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace memaudit {

enum class Err {
  MissingFile,
  MalformedRecord,
  DuplicateId,
  MissingPopularityField,
  InvalidEncoding,
  EmptyGold,
  InsufficientGold,
  InvalidParam,
  UnknownKind,
  BackendUnavailable,
  ProtocolError,
  RateLimited,
  ReplayMiss,
  StoreWriteFailure,
  UnknownDocument,
  EmptyInput,
  MissingMetric,
  LengthMismatch,
  TooFewPoints,
  OutOfRange,
  ConfigParseError,
};

const char *err_name(Err code);

// All recoverable failures surface as AuditError; code() identifies the
// failure class and what() carries the human-readable context.
class AuditError : public std::runtime_error {
public:
  AuditError(Err code, const std::string &msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg),
        code_(code) {}

  Err code() const noexcept { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void raise(Err code, const std::string &msg) {
  throw AuditError(code, msg);
}

} // namespace memaudit

#endif // MEMAUDIT_ERRORS_HPP
