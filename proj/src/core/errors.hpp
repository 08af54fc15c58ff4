#pragma once

#include <stdexcept>
#include <string>

namespace kp {

enum class ErrorKind {
  InvalidArgument,  // bad call arguments, dimension mismatches, bad config
  UnknownTask,      // unparsable task name or strength out of range
  Data,             // empty datasets, class-coverage failures
  Io,               // filesystem failures
  Format,           // malformed binary/JSON inputs
  Internal,         // broken internal invariant
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
  if (!cond) fail(kind, msg);
}

}  // namespace kp
