#pragma once

#include <stdexcept>
#include <string>

namespace skqaoa {

/// Failure classes surfaced by the library. The CLI maps each one to a
/// distinct process exit code.
enum class ErrorKind {
  invalid_argument,   // malformed input, depth or size out of range
  residue_violation,  // imaginary part of V_p above tolerance
  not_converged,      // optimizer budget spent without a converged restart
  memory_cap,         // statevector would exceed the configured cap
  eigen_not_converged,
  non_finite,         // NaN/Inf in an intermediate quantity
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::invalid_argument, what);
}

}  // namespace skqaoa
