#pragma once

#include <stdexcept>
#include <string>

namespace rch {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class GridMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised when an integration leaves the bounded regime. `last_good_time`
/// is the time of the last accepted state.
class BlowUp : public Error {
 public:
  BlowUp(const std::string& what, double last_good_time)
      : Error(what), last_good_time_(last_good_time) {}
  double last_good_time() const noexcept { return last_good_time_; }

 private:
  double last_good_time_;
};

class CflViolation : public Error {
 public:
  using Error::Error;
};

/// The flow map stopped being an increasing diffeomorphism.
class DiffeomorphismViolation : public Error {
 public:
  DiffeomorphismViolation(const std::string& what, double time)
      : Error(what), time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

}  // namespace rch
