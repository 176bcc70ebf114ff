#pragma once

#include <stdexcept>
#include <string>

namespace cascade {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A scalar parameter is missing, non-finite or outside its admissible range.
class ParameterError : public Error {
 public:
  ParameterError(const std::string& name, const std::string& detail)
      : Error("parameter '" + name + "': " + detail), parameter(name) {}
  std::string parameter;
};

/// Requested evaluation level exceeds the configured cap (the amplitude
/// lambda^N would no longer be representable).
class LevelOverflowError : public Error {
 public:
  LevelOverflowError(int level, int cap)
      : Error("level " + std::to_string(level) + " exceeds cap " +
              std::to_string(cap)),
        level(level),
        cap(cap) {}
  int level;
  int cap;
};

/// Enumeration would produce more points than the configured cap allows.
class SizeCapError : public Error {
 public:
  SizeCapError(std::size_t required, std::size_t cap)
      : Error("enumeration needs cap >= " + std::to_string(required) +
              ", configured cap is " + std::to_string(cap)),
        required(required),
        cap(cap) {}
  std::size_t required;
  std::size_t cap;
};

/// Adaptive quadrature could not reach the requested tolerance.
class QuadratureError : public Error {
 public:
  QuadratureError(double requested, double achieved)
      : Error("quadrature tolerance " + std::to_string(requested) +
              " not reached, achieved estimate " + std::to_string(achieved)),
        requested(requested),
        achieved(achieved) {}
  double requested;
  double achieved;
};

/// A parameter search target violates a hard feasibility bound.
class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(const std::string& what) : Error(what) {}
};

/// Time argument lies outside the interval the operation is defined on.
class IntervalError : public Error {
 public:
  explicit IntervalError(const std::string& what) : Error(what) {}
};

/// Box-counting input cannot produce a meaningful fit.
class FlatCloudError : public Error {
 public:
  explicit FlatCloudError(const std::string& what) : Error(what) {}
};

/// Explicit time step violates the stability bound of the FD scheme.
class StabilityError : public Error {
 public:
  explicit StabilityError(const std::string& what) : Error(what) {}
};

/// Config file could not be parsed; carries a 1-based line number when known.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line(line) {}
  int line;
};

}  // namespace cascade
