#pragma once

#include <stdexcept>
#include <string>

namespace galois_trees {

// Raised on malformed input or violated preconditions (unknown ids,
// disconnected graphs where connectivity is required, bad group elements).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an exact division leaves a nonzero remainder.
class InexactDivision : public Error {
 public:
  InexactDivision(const std::string& what, std::string remainder)
      : Error(what + " (remainder: " + remainder + ")"),
        remainder_(std::move(remainder)) {}

  const std::string& remainder() const { return remainder_; }

 private:
  std::string remainder_;
};

}  // namespace galois_trees
