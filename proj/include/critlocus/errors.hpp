#pragma once

#include <stdexcept>
#include <string>

namespace critlocus {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a parameter violates an operation's documented domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NegativeValuation : public Error {
 public:
  using Error::Error;
};

class VarSpaceMismatch : public Error {
 public:
  using Error::Error;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

class NotMonicInBeta : public Error {
 public:
  using Error::Error;
};

class ZeroDegree : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

class NotProductOfRationalLinears : public Error {
 public:
  using Error::Error;
};

class DidNotConverge : public Error {
 public:
  using Error::Error;
};

class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A proven identity failed to hold. Carries a serialized dump of the inputs
/// so the failing case can be replayed; callers treat it as fatal.
class FalsifiedIdentity : public Error {
 public:
  FalsifiedIdentity(const std::string& what, std::string dump)
      : Error(what), dump_(std::move(dump)) {}
  const std::string& dump() const noexcept { return dump_; }

 private:
  std::string dump_;
};

}  // namespace critlocus
