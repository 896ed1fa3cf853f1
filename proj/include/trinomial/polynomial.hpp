#pragma once

#include <complex>
#include <vector>

namespace trinomial {

using cplx = std::complex<double>;

// z^e by binary powering: ~log2(e) rounding errors, deterministic, no exp/log.
cplx pow_int(cplx z, long e);
double pow_int(double x, long e);

// Dense real-coefficient polynomial, coefficients highest degree first.
class Polynomial {
 public:
  explicit Polynomial(std::vector<double> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double leading() const { return coeffs_.front(); }
  double constant() const { return coeffs_.back(); }

  cplx eval(cplx z) const;
  double eval(double x) const;
  // p(z) and p'(z) in one Horner pass.
  void eval_with_derivative(cplx z, cplx& p, cplx& dp) const;

  Polynomial derivative() const;
  // Divides by the leading coefficient. ValidationError if it is zero/non-finite.
  Polynomial monic() const;

 private:
  std::vector<double> coeffs_;
};

// x^n - a x^k - 1. The family everything downstream analyzes.
struct TrinomialSpec {
  int n;
  double a;
  int k = 1;

  // Throws ValidationError unless n >= 2, k in {1,2,4}, k < n, a finite.
  void validate() const;

  Polynomial expand() const;

  cplx eval(cplx z) const;
  void eval_with_derivative(cplx z, cplx& p, cplx& dp) const;
  double eval(double x) const;
  double eval_derivative(double x) const;
};

}  // namespace trinomial
