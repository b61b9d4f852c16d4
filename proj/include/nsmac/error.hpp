#pragma once
#include <stdexcept>
#include <string>

namespace nsmac {

// All contract violations carry a stable machine-readable code plus a human message.
struct CalcError : std::runtime_error {
  std::string code;
  CalcError(std::string c, const std::string& msg)
      : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
  throw CalcError(code, msg);
}

inline void check(bool ok, const std::string& code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

}  // namespace nsmac
