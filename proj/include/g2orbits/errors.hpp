#pragma once

#include <stdexcept>
#include <string>

namespace g2orbits {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidIndex : public Error {
public:
  using Error::Error;
};

class AsymmetricMatrix : public Error {
public:
  using Error::Error;
};

class NotASubspace : public Error {
public:
  using Error::Error;
};

class NotOrthogonal : public Error {
public:
  using Error::Error;
};

class NotInSo7 : public Error {
public:
  using Error::Error;
};

class UnknownSubalgebra : public Error {
public:
  using Error::Error;
};

/// Raised when an operation needs a hypersurface orbit but the orbit through
/// g(t) has a larger codimension.
class SingularOrbit : public Error {
public:
  SingularOrbit(int codimension, double t)
      : Error("orbit at t = " + std::to_string(t) + " is singular (codimension " +
              std::to_string(codimension) + ")"),
        codimension_(codimension) {}

  int codimension() const noexcept { return codimension_; }

private:
  int codimension_;
};

class NearSingularParameter : public Error {
public:
  using Error::Error;
};

class ParameterOutOfRange : public Error {
public:
  using Error::Error;
};

class InvalidNormal : public Error {
public:
  using Error::Error;
};

class UnsupportedAction : public Error {
public:
  using Error::Error;
};

class NoRoot : public Error {
public:
  using Error::Error;
};

class StructuralMismatch : public Error {
public:
  using Error::Error;
};

} // namespace g2orbits
