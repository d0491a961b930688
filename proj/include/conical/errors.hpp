#pragma once

#include <stdexcept>
#include <string>

namespace conical {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
public:
  using Error::Error;
};

/// Unscaled complex erfc requested where it would overflow.
class OverflowDomain : public Error {
public:
  using Error::Error;
};

/// aux_f evaluated at (or below) the overlap cutoff.
class DivergentArgument : public Error {
public:
  DivergentArgument(const std::string& what, double argument)
      : Error(what), argument_(argument) {}
  double argument() const noexcept { return argument_; }

private:
  double argument_;
};

/// A detector coincides with another detector or with one of its images.
/// `image_index` is the offending image m, or 0 for the direct (flat) term.
class DivergentOverlap : public DivergentArgument {
public:
  DivergentOverlap(const std::string& what, int image_index, double argument)
      : DivergentArgument(what, argument), image_index_(image_index) {}
  int image_index() const noexcept { return image_index_; }

private:
  int image_index_;
};

/// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
class ToleranceNotMet : public Error {
public:
  ToleranceNotMet(const std::string& what, double error_estimate)
      : Error(what), error_estimate_(error_estimate) {}
  double error_estimate() const noexcept { return error_estimate_; }

private:
  double error_estimate_;
};

class NoSignChange : public Error {
public:
  using Error::Error;
};

class NotUnimodal : public Error {
public:
  using Error::Error;
};

class PolesTooClose : public Error {
public:
  using Error::Error;
};

}  // namespace conical
