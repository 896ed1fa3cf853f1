#pragma once

#include <stdexcept>
#include <string>

namespace trinomial {

// Malformed input: empty/zero polynomial, non-finite coefficients, mismatched
// root set vs. spec, bad angle ordering. CLI maps this to exit code 1.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Parameter outside the mathematical domain of an operation (e.g. a <= 1 for
// the annulus brackets, a outside (0,2] for the limit formulas). Exit code 1.
class DomainError : public ValidationError {
 public:
  explicit DomainError(const std::string& what) : ValidationError(what) {}
};

// Iteration did not certify: bracket failure, residual above bound, quadrature
// refinement cap. Exit code 2.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace trinomial
