#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace agt {

// Malformed input text. `offset` is the byte position in the original string.
struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& what, std::size_t off)
      : std::runtime_error(what + " (at offset " + std::to_string(off) + ")"),
        offset(off) {}
};

// A size cap or enumeration budget was exceeded.
struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation not defined for the requested combination of arguments.
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller violated a precondition.
struct InvalidArgument : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A library invariant failed; always a bug, never user error.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void internal_check(bool ok, const char* msg) {
  if (!ok) throw InternalError(msg);
}

}  // namespace agt
