#pragma once

#include <stdexcept>
#include <string>

namespace teichdisk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an input value was violated.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A numerical certificate could not be produced at the available grid
/// resolution or sample range.
class ResolutionLimited : public Error {
 public:
  using Error::Error;
};

/// A checked invariant did not hold.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// A sampled map failed to preserve orientation (|mu| >= 1) at a node.
class OrientationFailure : public Error {
 public:
  OrientationFailure(double x, double y, double abs_mu)
      : Error("orientation failure at (" + std::to_string(x) + ", " +
              std::to_string(y) + "): |mu| = " + std::to_string(abs_mu)),
        x_(x),
        y_(y),
        abs_mu_(abs_mu) {}

  double x() const { return x_; }
  double y() const { return y_; }
  double abs_mu() const { return abs_mu_; }

 private:
  double x_;
  double y_;
  double abs_mu_;
};

}  // namespace teichdisk
