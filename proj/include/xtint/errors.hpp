#pragma once

#include <stdexcept>
#include <string>

namespace xtint {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller broke an operation's contract (bad argument, mismatched ground sets).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a configured size cap (word width, enumeration budget).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Parameters fall outside the domain on which a formula is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Parameters outside the range a result covers (e.g. n below 2k-t+1).
class OutOfScopeError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagreed.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

/// Reading or writing persistent output failed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace xtint
