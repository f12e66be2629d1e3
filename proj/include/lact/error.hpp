#pragma once

#include <stdexcept>
#include <string>

namespace lact {

// Error categories; the CLI maps them onto exit codes (parse/validation -> 2,
// io -> 3, bounded-search misses are not errors).
class Error : public std::runtime_error {
 public:
  enum class Kind { parse, validation, precondition, bound, io };

  Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

[[noreturn]] inline void fail(Error::Kind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace lact
