#pragma once

#include <stdexcept>
#include <string>

namespace qclock {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Shapes or dimensions of operands do not fit together.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// A dense object would exceed the configured entry cap.
class CapacityError : public Error {
  public:
    using Error::Error;
};

class InvalidArgument : public Error {
  public:
    using Error::Error;
};

class NotUnitary : public Error {
  public:
    using Error::Error;
};

/// U^N differs from the identity: eigenphases are not N-th roots of unity.
class NotPeriodic : public Error {
  public:
    using Error::Error;
};

class IncompleteSpectrum : public Error {
  public:
    using Error::Error;
};

class NotNormalised : public Error {
  public:
    using Error::Error;
};

/// The full cycle product of a circuit is not the identity.
class NotCyclic : public Error {
  public:
    using Error::Error;
};

/// Measuring an eigenstate orthogonal to the subsystem state.
class OrthogonalEigenstate : public Error {
  public:
    using Error::Error;
};

class Degenerate : public Error {
  public:
    using Error::Error;
};

/// Energy image is not closed under addition mod N.
class NotASubgroup : public Error {
  public:
    using Error::Error;
};

/// A constructed family fails the dynamic axioms.
class AxiomsViolated : public Error {
  public:
    AxiomsViolated(const std::string &what, double residual)
        : Error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

  private:
    double residual_;
};

} // namespace qclock
