#include "rsf/error.hpp"

namespace rsf {

namespace {

std::string compose(const std::string& code, const std::string& detail) {
  return detail.empty() ? code : code + ": " + detail;
}

}  // namespace

Error::Error(ErrorKind kind, std::string code, const std::string& detail)
    : std::runtime_error(compose(code, detail)), kind_(kind), code_(std::move(code)) {}

void throw_parse(const std::string& code, const std::string& detail) {
  throw Error(ErrorKind::Parse, code, detail);
}

void throw_precondition(const std::string& code, const std::string& detail) {
  throw Error(ErrorKind::Precondition, code, detail);
}

void throw_internal(const std::string& code, const std::string& detail) {
  throw Error(ErrorKind::Internal, code, detail);
}

}  // namespace rsf
