#pragma once

#include <stdexcept>
#include <string>

namespace commnorm {

// Argument outside the mathematical domain of an operation (theta not in
// [0,1], p < 2 where p >= 2 is required, even d where odd d is required).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed input data: non-finite entries, shape mismatches, bad strings.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The constant is dimension dependent at this triplet and no d was given.
class DimensionRequired : public DomainError {
 public:
  DimensionRequired() : DomainError("dimension required") {}
};

}  // namespace commnorm
