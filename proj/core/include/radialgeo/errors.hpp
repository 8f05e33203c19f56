#pragma once

#include <stdexcept>
#include <string>

namespace radialgeo {

/// Base class for every failure raised by the library.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point or parameter lies outside the domain of the conformal factor or surface.
class DomainError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// The immersion degenerates: |X_u x X_v| is below the regularity threshold.
class RegularityError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class NotIsothermalError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class StepError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// A sampled curve is not parametrized by arc length in the ambient metric.
class ParametrizationError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class NoBracketError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// The conformal factor violates the hypotheses of the sphere-radius existence result.
class HypothesisError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// The coefficient of phi'' in the rotation-profile ODE came too close to zero.
class SingularCoefficientError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

}  // namespace radialgeo
