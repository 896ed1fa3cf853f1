#include "trinomial/limits.hpp"

#include <cmath>
#include <vector>

#include "trinomial/errors.hpp"

namespace trinomial {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

// 15-point Gauss-Legendre rule on [-1, 1], positive half (rule is symmetric).
constexpr int kGaussHalf = 8;
constexpr double kGaussNode[kGaussHalf] = {
    0.0,
    0.2011940939974345223,
    0.3941513470775633699,
    0.57097217260853884754,
    0.72441773136017004742,
    0.8482065834104272162,
    0.93727339240070590431,
    0.98799251802048542849,
};
constexpr double kGaussWeight[kGaussHalf] = {
    0.20257824192556127288,
    0.19843148532711157646,
    0.18616100001556221103,
    0.16626920581699393355,
    0.13957067792615431445,
    0.10715922046717193501,
    0.070366047488108124709,
    0.030753241996117268355,
};

// Cl2 series coefficients |B_2m| / (2m * (2m+1)!), m = 1..34. Term ratio is
// (theta/2pi)^2 <= 1/4 after range reduction, so 34 terms clear 1e-17.
constexpr int kClausenCount = 34;
constexpr double kClausenCoeff[kClausenCount] = {
    0.013888888888888888889,
    0.000069444444444444444444,
    7.8735197782816830436e-7,
    1.1482216343327454439e-8,
    1.8978869988970999072e-10,
    3.3873013709535212723e-12,
    6.3726364431831803966e-14,
    1.2462059912950672305e-15,
    2.5105444608999545509e-17,
    5.1782588060906235072e-19,
    1.0887357368300848844e-20,
    2.3257441143020872235e-22,
    5.0351952131473895608e-24,
    1.1026499294381215333e-25,
    2.4386585509007344735e-27,
    5.4401426788562523156e-29,
    1.2228340131217352117e-30,
    2.7672634689679505842e-32,
    6.3000905918320139487e-34,
    1.4420868388418475211e-35,
    3.3170939991595428044e-37,
    7.6639135579206578874e-39,
    1.7778714733830657873e-40,
    4.1396058982341373449e-42,
    9.6715570360811017926e-44,
    2.2667187016766123705e-45,
    5.3279563113282539722e-47,
    1.2557248389564335741e-48,
    2.9670005422470941881e-50,
    7.0267873176007424861e-52,
    1.6678074846988773506e-53,
    3.9666610353116645565e-55,
    9.4523532983705922543e-57,
    2.2565291278139191752e-58,
};

template <typename F>
double gauss15(const F& f, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double acc = kGaussWeight[0] * f(mid);
  for (int i = 1; i < kGaussHalf; ++i) {
    const double d = half * kGaussNode[i];
    acc += kGaussWeight[i] * (f(mid - d) + f(mid + d));
  }
  return acc * half;
}

struct QuadResult {
  double value = 0.0;
  int panels = 0;
};

// Interval halving until the halved pair reproduces the parent panel to the
// local share of tol. The error estimate of a p=30 rule is essentially exact.
template <typename F>
QuadResult adaptive_gauss15(const F& f, double lo, double hi, double tol) {
  struct Seg {
    double lo, hi, whole;
  };
  const double full = hi - lo;
  std::vector<Seg> stack{{lo, hi, gauss15(f, lo, hi)}};
  QuadResult out{};
  while (!stack.empty()) {
    const Seg s = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (s.lo + s.hi);
    const double left = gauss15(f, s.lo, mid);
    const double right = gauss15(f, mid, s.hi);
    const double len = s.hi - s.lo;
    if (std::abs(left + right - s.whole) <= 0.5 * tol * len / full) {
      out.value += left + right;
      out.panels += 2;
      continue;
    }
    if (len <= 1e-14 * full || stack.size() >= 4096) {
      throw NumericalError("quadrature failed to reach the requested tolerance");
    }
    stack.push_back({s.lo, mid, left});
    stack.push_back({mid, s.hi, right});
  }
  return out;
}

void require_limit_domain(double a) {
  if (!(a > 0.0 && a <= 2.0)) throw DomainError("limit laws require 0 < a <= 2");
}

QuadResult measure_quadrature_info(double a, double tol) {
  require_limit_domain(a);
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw ValidationError("quadrature tolerance must be finite and > 0");
  }
  const double theta = std::acos(-0.5 * a);
  auto f = [a](double t) { return std::log(1.0 + a * a + 2.0 * a * std::cos(t)); };
  QuadResult q = adaptive_gauss15(f, 0.0, theta, tol);
  q.value = std::exp(q.value / kTwoPi);
  return q;
}

double clausen2_info(double theta, int* terms_out) {
  if (!std::isfinite(theta)) throw ValidationError("clausen2 needs a finite angle");
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  double sign = 1.0;
  if (t > kPi) {  // Cl2(2pi - t) = -Cl2(t)
    t = kTwoPi - t;
    sign = -1.0;
  }
  int terms = 0;
  double acc = 0.0;
  if (t > 0.0) {
    acc = t * (1.0 - std::log(t));
    const double t2 = t * t;
    double pw = t * t2;
    for (int m = 0; m < kClausenCount; ++m) {
      const double term = kClausenCoeff[m] * pw;
      acc += term;
      ++terms;
      if (term <= 1e-18 * std::abs(acc)) break;
      pw *= t2;
    }
  }
  if (terms_out) *terms_out = terms;
  return sign * acc;
}

}  // namespace

double rate_limit(double a) {
  require_limit_domain(a);
  return std::acos(-0.5 * a) / kPi;
}

double measure_limit_quadrature(double a, double tol) {
  return measure_quadrature_info(a, tol).value;
}

double clausen2(double theta) { return clausen2_info(theta, nullptr); }

double measure_limit_maillot(double a) {
  require_limit_domain(a);
  const double s = 2.0 * std::asin(0.5 * a);
  return std::exp((clausen2(s) + s * std::log(a)) / kPi);
}

ExtendedLimit measure_limit_extended(std::complex<double> a) {
  const double mod = std::abs(a);
  if (!std::isfinite(mod)) throw ValidationError("a must be finite");
  ExtendedLimit out{};
  if (mod == 0.0) {
    out.value = 1.0;
    out.degenerate = true;
    return out;
  }
  if (mod > 2.0) {
    out.value = mod;
    return out;
  }
  out.angle_assumed_rational = !(a.imag() == 0.0 && a.real() > 0.0);
  out.value = measure_limit_quadrature(mod);
  return out;
}

LimitReport limit_report(double a, double tol) {
  require_limit_domain(a);
  LimitReport rep{};
  rep.a = a;
  rep.rate = rate_limit(a);
  const QuadResult q = measure_quadrature_info(a, tol);
  rep.measure_quadrature = q.value;
  rep.quadrature_panels = q.panels;
  const double s = 2.0 * std::asin(0.5 * a);
  int terms = 0;
  const double cl = clausen2_info(s, &terms);
  rep.clausen_terms = terms;
  rep.measure_dilog = std::exp((cl + s * std::log(a)) / kPi);
  rep.cross_delta = std::abs(rep.measure_quadrature - rep.measure_dilog);
  return rep;
}

}  // namespace trinomial
