#pragma once

#include <stdexcept>
#include <string>

namespace pcomm {

// Precondition violated by the caller (malformed data, wrong shape,
// an element outside the operation's domain).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public InvalidInput {
 public:
  SingularMatrix(std::size_t pivot_column)
      : InvalidInput("matrix is singular: no usable pivot in column " +
                     std::to_string(pivot_column)),
        pivot_column_(pivot_column) {}

  std::size_t pivot_column() const noexcept { return pivot_column_; }

 private:
  std::size_t pivot_column_;
};

// An iterative or search routine did not reach its target.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computed object failed the identity it is supposed to certify.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pcomm
