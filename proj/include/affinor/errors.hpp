#pragma once

#include <stdexcept>
#include <string>

namespace affinor {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotFiniteOrder : public Error {
 public:
  using Error::Error;
};

class RegularityViolation : public Error {
 public:
  using Error::Error;
};

class AllZeroCoefficients : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class NotOrderFive : public Error {
 public:
  using Error::Error;
};

class NotAlmostComplex : public Error {
 public:
  using Error::Error;
};

class UnknownClassTag : public Error {
 public:
  using Error::Error;
};

class EmptyGrid : public Error {
 public:
  using Error::Error;
};

/// Malformed user input (characteristic collections, metrics, ranges).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace affinor
