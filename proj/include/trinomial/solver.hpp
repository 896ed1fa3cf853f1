#pragma once

#include <utility>
#include <vector>

#include "trinomial/errors.hpp"
#include "trinomial/polynomial.hpp"

namespace trinomial {

struct SolverConfig {
  int max_iterations = 500;          // Aberth sweeps
  double residual_tolerance = 1e-12; // relative to coefficient scale
  double pairing_tolerance = 1e-12;  // conjugate matching
  int polish_steps = 3;              // Newton steps per root after Aberth
};

struct PolarRoot {
  double rho;
  double phi;  // in [0, 2*pi)
};

struct SolveInfo {
  int iterations = 0;
  double tolerance = 0.0;
  double max_residual = 0.0;
  bool converged = false;
};

// Roots sorted by (phi, rho); conjugate-symmetric for real input; residuals
// certified against residual_tolerance * max|coeff| * max(1,|z|)^degree.
struct RootSet {
  std::vector<cplx> roots;
  std::vector<double> residuals;   // |p(z_i)| on the monic polynomial
  std::vector<PolarRoot> polar;
  std::vector<double> coeffs;      // monic source coefficients, highest first
  SolveInfo source;

  int degree() const { return static_cast<int>(roots.size()); }
};

// Carries the best iterate so the caller can inspect what failed to certify.
class NonConvergenceError : public NumericalError {
 public:
  NonConvergenceError(const std::string& what, RootSet best)
      : NumericalError(what), best_(std::move(best)) {}
  const RootSet& best() const { return best_; }

 private:
  RootSet best_;
};

// Aberth-Ehrlich simultaneous iteration with Newton polish. Deterministic:
// initial guesses on the circle of radius |constant|^(1/n), fixed irrational
// angular offset, fixed sweep order.
RootSet solve(const Polynomial& p, const SolverConfig& cfg = {});

// Same solver through the trinomial evaluation fast path (binary powering).
RootSet solve(const TrinomialSpec& spec, const SolverConfig& cfg = {});

// Per-root residuals of the polar identities for x^n - a x - 1 (k = 1):
//   first:  |rho^2n - (a^2 rho^2 + 2 a rho cos(phi) + 1)|
//   second: |a rho sin((n-1) phi) + sin(n phi)|
// ValidationError if rs was not solved from this spec; DomainError if k != 1.
std::vector<std::pair<double, double>> verify_polar_residuals(const RootSet& rs,
                                                              const TrinomialSpec& spec);

}  // namespace trinomial
