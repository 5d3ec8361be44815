#pragma once

#include <stdexcept>
#include <string>

namespace qwi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A PotentialProfile or UnitSystem violates one of its invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// E equals a region potential exactly, so the wavenumber vanishes.
class DegenerateWavenumberError : public Error {
 public:
  using Error::Error;
};

/// An energy or position lies outside the domain where an operation is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A method that only handles the three-region well was given another profile.
class UnsupportedProfileError : public Error {
 public:
  using Error::Error;
};

/// An impedance (or a Green's function) hit a pole.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// An energy passed as a bound state does not satisfy the bound-state condition.
class InconsistentStateError : public Error {
 public:
  using Error::Error;
};

/// A limit or extrapolation sequence failed to settle.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace qwi
