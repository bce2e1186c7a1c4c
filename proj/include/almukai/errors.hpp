#pragma once

#include <stdexcept>
#include <string>

namespace almukai {

// Base of every error this library raises. The concrete classes mirror the
// failure modes of the individual modules so callers (and the CLI exit-code
// mapping) can dispatch on type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error { using Error::Error; };
class NotInvertible : public Error { using Error::Error; };

// s is not an exact divisor of the level
class InvalidLevel : public Error { using Error::Error; };
class InvalidDeterminant : public Error { using Error::Error; };
class LevelMismatch : public Error { using Error::Error; };

// A divisibility guaranteed by the coset algebra failed. Always a bug.
class InternalClosureViolation : public Error { using Error::Error; };

class NotAnIsometry : public Error { using Error::Error; };
class NotIntegral : public Error { using Error::Error; };
class ActionNotDiagonal : public Error { using Error::Error; };
class IntegralityViolation : public Error { using Error::Error; };
class NotInImage : public Error { using Error::Error; };

class EndpointMismatch : public Error { using Error::Error; };

class NotInUpperHalfPlane : public Error { using Error::Error; };
class NumericalPole : public Error { using Error::Error; };
class ZeroRank : public Error { using Error::Error; };

class ParseError : public Error { using Error::Error; };

}  // namespace almukai
