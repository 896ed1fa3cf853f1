#pragma once

#include <complex>

namespace trinomial {

// Limit of nu/n as n -> infinity: arccos(-a/2) / pi. Domain (0, 2].
double rate_limit(double a);

// exp( (1/2pi) * integral_0^arccos(-a/2) log(1 + a^2 + 2 a cos t) dt ),
// adaptive 15-point Gauss-Legendre with interval halving. Domain (0, 2].
double measure_limit_quadrature(double a, double tol = 1e-12);

// Clausen function Cl2(theta) = sum sin(k theta)/k^2. Bernoulli series after
// range reduction to [0, pi]; ~1e-15 absolute accuracy.
double clausen2(double theta);

// Maillot/dilogarithm closed form: exp( (Cl2(2 arcsin(a/2)) + 2 arcsin(a/2) ln a) / pi ).
// Domain (0, 2]. Agrees with the quadrature to ~1e-12.
double measure_limit_maillot(double a);

struct ExtendedLimit {
  double value = 1.0;
  bool degenerate = false;             // a == 0: measure of x^n - 1
  bool angle_assumed_rational = false; // a not real-positive: reduction to |a|
                                       // assumes arg(a) rational in 2*pi
};

// |a| > 2 -> |a|; 0 < |a| <= 2 -> quadrature limit at |a|; a == 0 -> 1 flagged.
ExtendedLimit measure_limit_extended(std::complex<double> a);

struct LimitReport {
  double a = 0.0;
  double rate = 0.0;
  double measure_quadrature = 0.0;
  double measure_dilog = 0.0;
  double cross_delta = 0.0;  // |quadrature - dilog|
  int quadrature_panels = 0;
  int clausen_terms = 0;
};

LimitReport limit_report(double a, double tol = 1e-12);

}  // namespace trinomial
