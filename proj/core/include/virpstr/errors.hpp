#ifndef VIRPSTR_ERRORS_HPP
#define VIRPSTR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace virpstr {

// Violated operation precondition; the CLI maps these to exit code 1.
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Kernel at degree rs is not one-dimensional: (c,h) lies on another curve
// of equal or lower degree. Reported, never guessed around.
struct SingularVectorError : PreconditionError {
  int kernel_dim;
  SingularVectorError(const std::string& what, int dim) : PreconditionError(what), kernel_dim(dim) {}
};

// Pseudo-traces are only defined for interlocked modules.
struct NonInterlockedError : PreconditionError {
  explicit NonInterlockedError(const std::string& what) : PreconditionError(what) {}
};

}  // namespace virpstr

#endif
