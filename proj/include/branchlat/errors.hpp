#pragma once

#include <stdexcept>
#include <string>

namespace branchlat {

// Input violates a documented precondition. The CLI maps this to exit code 2.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An internal consistency guarantee failed at runtime. The CLI maps this to
// exit code 3. Seeing one of these means a bug, not bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw ValidationError(msg);
}

inline void ensure(bool ok, const std::string& msg) {
  if (!ok) throw InternalError(msg);
}

}  // namespace branchlat
