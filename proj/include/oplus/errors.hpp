#pragma once

#include <stdexcept>
#include <string>

namespace oplus {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cayley table rejected: not square, entry out of range, or order unsupported.
class InvalidTable : public Error {
 public:
  using Error::Error;
};

/// Associativity failed; carries the first violating triple (a*b)*c != a*(b*c).
class NonAssociative : public Error {
 public:
  NonAssociative(int a, int b, int c)
      : Error("non-associative at triple (" + std::to_string(a) + ", " +
              std::to_string(b) + ", " + std::to_string(c) + ")"),
        a(a),
        b(b),
        c(c) {}
  int a, b, c;
};

/// Two values built over distinct ground semigroups were combined.
class GroundMismatch : public Error {
 public:
  using Error::Error;
};

/// A filter support (or fil_of argument) would be empty.
class EmptySupport : public Error {
 public:
  using Error::Error;
};

/// A stated mathematical hypothesis of the operation does not hold.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// Extension loops require an additive input filter.
class NotAdditive : public Error {
 public:
  using Error::Error;
};

/// Bad window arguments: member out of range, shift beyond horizon, etc.
class WindowError : public Error {
 public:
  using Error::Error;
};

/// The window horizon truncates a decision the operation needs.
class OracleUndecided : public Error {
 public:
  using Error::Error;
};

/// An oracle pick returned an element outside the queried set.
class OracleInconsistent : public Error {
 public:
  using Error::Error;
};

/// Strictly increasing picks are impossible because the oracle is principal.
class PrincipalOracleDetected : public Error {
 public:
  using Error::Error;
};

class NonDisjointBlocks : public Error {
 public:
  using Error::Error;
};

class NotEvenExponents : public Error {
 public:
  using Error::Error;
};

class OddInput : public Error {
 public:
  using Error::Error;
};

class NotClassZero : public Error {
 public:
  using Error::Error;
};

/// The requested shift leaves no window to check.
class VacuousWindow : public Error {
 public:
  using Error::Error;
};

class PreconditionNotEstablished : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace oplus
