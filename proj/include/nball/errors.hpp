#pragma once

#include <stdexcept>
#include <string>

namespace nball {

// Input outside the mathematical domain of an operation (poles, zero base, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A distribution expression contains a term with no implemented rule.
class unsupported_expression : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Numerical procedure did not reach its tolerance. Carries the best estimate.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, double best_estimate)
      : std::runtime_error(what), best_estimate_(best_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }

 private:
  double best_estimate_;
};

}  // namespace nball
