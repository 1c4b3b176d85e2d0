#pragma once

#include <stdexcept>
#include <string>

namespace qrbf {

// A truncated series did not reach its stopping criterion within the term cap.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tensor quadrature would exceed the node budget.
class QuadratureBudgetError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// An integrand cannot be integrated exactly (or to certified accuracy) against
// the Gaussian weight of the rule: missing growth certificate, or a certificate
// that asks for more exactness than the rule provides.
class WeightIncompatibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qrbf
