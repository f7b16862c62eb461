#pragma once

#include <stdexcept>
#include <string>

namespace mcs {

// Domain errors carry a stable machine-readable code alongside the message.
// Codes surface verbatim in CLI error payloads, so treat them as API.
struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& msg)
      : std::runtime_error(msg), code(std::move(c)) {}
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace mcs
