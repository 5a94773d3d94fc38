#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace fracwave {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameter outside its admissible set (alpha, model coefficients, grids).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// A point outside the domain where a quantity is defined on the chosen branch.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what, std::optional<double> k = std::nullopt)
      : Error(what), k_(k) {}

  /// Offending wave number, when the failure is tied to one.
  std::optional<double> wave_number() const { return k_; }

 private:
  std::optional<double> k_;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double error_estimate,
                   std::optional<std::size_t> mode_index = std::nullopt)
      : Error(what), error_estimate_(error_estimate), mode_index_(mode_index) {}

  double error_estimate() const { return error_estimate_; }
  std::optional<std::size_t> mode_index() const { return mode_index_; }

 private:
  double error_estimate_;
  std::optional<std::size_t> mode_index_;
};

class SizeError : public Error {
 public:
  using Error::Error;
};

class NoSignChange : public Error {
 public:
  using Error::Error;
};

// Real parts vanish identically, so a real-part crossing is not isolated.
class DegenerateCrossing : public Error {
 public:
  using Error::Error;
};

}  // namespace fracwave
