#include "trinomial/polynomial.hpp"

#include <cmath>

#include "trinomial/errors.hpp"

namespace trinomial {

cplx pow_int(cplx z, long e) {
  cplx r{1.0, 0.0};
  while (e > 0) {
    if (e & 1) r *= z;
    z *= z;
    e >>= 1;
  }
  return r;
}

double pow_int(double x, long e) {
  double r = 1.0;
  while (e > 0) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) throw ValidationError("polynomial must have degree >= 1");
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw ValidationError("polynomial coefficients must be finite");
  }
}

cplx Polynomial::eval(cplx z) const {
  cplx b{coeffs_[0], 0.0};
  for (std::size_t i = 1; i < coeffs_.size(); ++i) b = b * z + coeffs_[i];
  return b;
}

double Polynomial::eval(double x) const {
  double b = coeffs_[0];
  for (std::size_t i = 1; i < coeffs_.size(); ++i) b = b * x + coeffs_[i];
  return b;
}

void Polynomial::eval_with_derivative(cplx z, cplx& p, cplx& dp) const {
  cplx b{coeffs_[0], 0.0};
  cplx d{0.0, 0.0};
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    d = d * z + b;
    b = b * z + coeffs_[i];
  }
  p = b;
  dp = d;
}

Polynomial Polynomial::derivative() const {
  const int n = degree();
  if (n == 1) throw ValidationError("derivative would be constant");
  std::vector<double> d(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)] * (n - i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  const double lead = coeffs_.front();
  if (lead == 0.0 || !std::isfinite(lead)) {
    throw ValidationError("leading coefficient must be nonzero and finite");
  }
  if (lead == 1.0) return *this;
  std::vector<double> c(coeffs_);
  for (double& v : c) v /= lead;
  return Polynomial(std::move(c));
}

void TrinomialSpec::validate() const {
  if (n < 2) throw ValidationError("trinomial degree n must be >= 2");
  if (k != 1 && k != 2 && k != 4) throw ValidationError("k must be one of 1, 2, 4");
  if (k >= n) throw ValidationError("k must be smaller than n");
  if (!std::isfinite(a)) throw ValidationError("a must be finite");
}

Polynomial TrinomialSpec::expand() const {
  validate();
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  c[0] = 1.0;
  c[static_cast<std::size_t>(n - k)] = -a;
  c[static_cast<std::size_t>(n)] = -1.0;
  return Polynomial(std::move(c));
}

cplx TrinomialSpec::eval(cplx z) const {
  return pow_int(z, n) - a * pow_int(z, k) - 1.0;
}

void TrinomialSpec::eval_with_derivative(cplx z, cplx& p, cplx& dp) const {
  const cplx zk1 = pow_int(z, k - 1);
  const cplx zn1 = pow_int(z, n - 1);
  p = zn1 * z - a * (zk1 * z) - 1.0;
  dp = static_cast<double>(n) * zn1 - a * static_cast<double>(k) * zk1;
}

double TrinomialSpec::eval(double x) const {
  return pow_int(x, n) - a * pow_int(x, k) - 1.0;
}

double TrinomialSpec::eval_derivative(double x) const {
  return n * pow_int(x, n - 1) - a * k * pow_int(x, k - 1);
}

}  // namespace trinomial
