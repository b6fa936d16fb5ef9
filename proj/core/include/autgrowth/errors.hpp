#pragma once

#include <stdexcept>
#include <string>

namespace ag {

// Bad user input: malformed words, presentations, transducer files.
struct format_error : std::runtime_error {
  explicit format_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured budget (radius, memory, roll/flow guard) was exhausted.
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// A precondition documented on an operation was violated by the caller.
struct precondition_error : std::logic_error {
  explicit precondition_error(const std::string& what) : std::logic_error(what) {}
};

// An internal invariant failed; used as a test hook for checked claims.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

#define AG_CHECK(cond, msg)                       \
  do {                                            \
    if (!(cond)) throw ::ag::internal_error(msg); \
  } while (0)

}  // namespace ag
