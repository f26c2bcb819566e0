#pragma once

#include <stdexcept>
#include <string>

namespace rsf {

/// Broad failure category. The CLI maps each category onto an exit status.
enum class ErrorKind {
  Parse,         ///< malformed input text
  Precondition,  ///< a mathematical precondition of an operation does not hold
  Internal,      ///< an internal consistency guard fired
};

/// Library error carrying a short machine-readable code ("not divisible",
/// "pole under specialization", ...) plus a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] void throw_parse(const std::string& code, const std::string& detail);
[[noreturn]] void throw_precondition(const std::string& code, const std::string& detail);
[[noreturn]] void throw_internal(const std::string& code, const std::string& detail);

}  // namespace rsf
