#pragma once
#include <stdexcept>
#include <string>
#include <utility>

namespace grograde {

// Structured failure. `kind` is a stable machine-readable tag such as
// "NonAssociative" or "CapExceeded"; what() carries the human message.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& msg) {
  throw Error(kind, msg);
}

inline void check(bool ok, const std::string& kind, const std::string& msg) {
  if (!ok) fail(kind, msg);
}

}  // namespace grograde
