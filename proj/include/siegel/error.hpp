#pragma once

#include <stdexcept>
#include <string>

namespace siegel {

enum class ErrorKind {
  Dimension,     // operands of different sizes
  Precondition,  // input outside the operation's domain
  Parse,         // malformed serialized input
  Validation,    // well-formed input that violates a type invariant
  Internal,      // broken internal invariant; never expected
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require_same_dim(int a, int b, const char* where) {
  if (a != b) {
    fail(ErrorKind::Dimension,
         std::string(where) + ": dimension mismatch (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace siegel
