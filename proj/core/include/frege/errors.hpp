#pragma once

#include <stdexcept>
#include <string>

namespace frege {

/// Invalid user input (bad profile, malformed problem, ...). CLI exit code 1.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A mathematical invariant the engine guarantees was observed to fail.
/// Always a bug, never user error. CLI exit code 2.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

namespace detail {
[[noreturn]] inline void internal_check_failed(const char* expr, const char* file, int line) {
  throw InternalError(std::string("invariant failed: ") + expr + " at " + file + ":" +
                      std::to_string(line));
}
} // namespace detail

} // namespace frege

// Always-on invariant check; these guard the proven lemmas, so a failure
// means the engine itself is wrong.
#define FREGE_INTERNAL_CHECK(expr)                                                     \
  do {                                                                                 \
    if (!(expr)) ::frege::detail::internal_check_failed(#expr, __FILE__, __LINE__);    \
  } while (0)
