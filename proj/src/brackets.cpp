#include "trinomial/brackets.hpp"

#include <cmath>
#include <functional>

#include "trinomial/errors.hpp"

namespace trinomial {

namespace detail {

double refine_root(const std::function<double(double)>& f,
                   const std::function<double(double)>& df, double lo, double hi) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) {
    throw NumericalError("bracket does not straddle zero");
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 240; ++it) {
    const double fx = f(x);
    if (fx == 0.0) return x;
    if ((fx < 0.0) == (flo < 0.0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    if (hi - lo <= 1e-16 * std::max(1.0, std::abs(x))) break;
    const double d = df(x);
    double next = (d != 0.0) ? x - fx / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 1e-17 * std::max(1.0, std::abs(next))) {
      x = next;
      break;
    }
    x = next;
  }
  return x;
}

}  // namespace detail

namespace {

using detail::refine_root;

void require_positive_a(double a) {
  if (!(a > 0.0)) throw DomainError("bracket requires a > 0");
}

void validate_general(int n, double a, int k) {
  TrinomialSpec{n, a, k}.validate();
  require_positive_a(a);
}

}  // namespace

double bracket_beta_general(int n, double a, int k) {
  validate_general(n, a, k);
  // f(1) = -a < 0; f(1 + a^(1/(n-k))) > 0 since (1+c)^(n-k) >= 1 + c^(n-k).
  const double hi = 1.0 + std::pow(a, 1.0 / (n - k));
  auto f = [&](double x) { return pow_int(x, n) - a * pow_int(x, k) - 1.0; };
  auto df = [&](double x) { return n * pow_int(x, n - 1) - a * k * pow_int(x, k - 1); };
  return refine_root(f, df, 1.0, hi);
}

double bracket_alpha_general(int n, double a, int k) {
  validate_general(n, a, k);
  // g(0) = 1 > 0; g(1) = -a < 0; g strictly decreasing on (0, 1).
  auto g = [&](double x) { return 1.0 - pow_int(x, n) - a * pow_int(x, k); };
  auto dg = [&](double x) { return -(n * pow_int(x, n - 1) + a * k * pow_int(x, k - 1)); };
  return refine_root(g, dg, 0.0, 1.0);
}

double bracket_beta(const TrinomialSpec& spec) {
  return bracket_beta_general(spec.n, spec.a, spec.k);
}

double bracket_alpha(const TrinomialSpec& spec) {
  return bracket_alpha_general(spec.n, spec.a, spec.k);
}

std::optional<std::pair<double, double>> bracket_gamma(const TrinomialSpec& spec) {
  spec.validate();
  if (spec.k != 1) throw DomainError("annulus brackets are defined for k = 1");
  const double a = spec.a;
  const int n = spec.n;
  if (!(a > 1.0 && a <= 2.0)) throw DomainError("annulus brackets require 1 < a <= 2");

  auto p2 = [&](double x) { return a * x - pow_int(x, n) - 1.0; };
  auto dp2 = [&](double x) { return a - n * pow_int(x, n - 1); };

  // P2 peaks at (a/n)^(1/(n-1)); a positive peak value is the existence test.
  const double xs = std::pow(a / n, 1.0 / (n - 1));
  if (!(p2(xs) > 0.0)) return std::nullopt;

  const double g1 = refine_root(p2, dp2, 0.0, xs);
  const double g2 = (a == 2.0) ? 1.0 : refine_root(p2, dp2, xs, 1.0);
  return std::make_pair(g1, g2);
}

RealBrackets real_brackets(const TrinomialSpec& spec) {
  RealBrackets out{};
  out.beta = bracket_beta(spec);
  out.alpha = bracket_alpha(spec);
  if (spec.k == 1 && spec.a > 1.0 && spec.a <= 2.0) {
    out.gamma = bracket_gamma(spec);
  }
  return out;
}

}  // namespace trinomial
