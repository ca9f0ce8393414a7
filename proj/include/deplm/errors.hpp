#pragma once

#include <stdexcept>
#include <string>

namespace deplm {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class RankDeficient : public Error {
 public:
  using Error::Error;
};

class ZeroColumn : public Error {
 public:
  using Error::Error;
};

class EmptySeries : public Error {
 public:
  using Error::Error;
};

class DegenerateSeries : public Error {
 public:
  using Error::Error;
};

class LagOutOfRange : public Error {
 public:
  using Error::Error;
};

class SingularR0 : public Error {
 public:
  using Error::Error;
};

class EmptyIndexSet : public Error {
 public:
  using Error::Error;
};

class MalformedInput : public Error {
 public:
  using Error::Error;
};

// Carries the offending eigenvalue so callers can report it.
class NotPositiveDefinite : public Error {
 public:
  NotPositiveDefinite(const std::string& what, double min_eigenvalue)
      : Error(what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

class NonPositiveVariance : public Error {
 public:
  NonPositiveVariance(const std::string& what, double variance)
      : Error(what), variance_(variance) {}
  double variance() const noexcept { return variance_; }

 private:
  double variance_;
};

}  // namespace deplm
