#include "trinomial/brackets.hpp"

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "doctest.h"
#include "trinomial/errors.hpp"
#include "trinomial/polynomial.hpp"

using namespace trinomial;

namespace {

// Plain midpoint bisection, independent of the library's hybrid refiner.
double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("beta at degree 2 is the golden ratio / silver ratio") {
  CHECK(bracket_beta({2, 1.0, 1}) == doctest::Approx(1.6180339887498949).epsilon(1e-12));
  CHECK(bracket_beta({2, 2.0, 1}) == doctest::Approx(2.4142135623730951).epsilon(1e-12));
}

TEST_CASE("beta matches bisection and stays in its interval") {
  for (const auto& [n, a] : std::vector<std::pair<int, double>>{
           {10, 0.3}, {24, 1.0}, {100, 1.0}, {150, 1.9}, {37, 2.0}}) {
    const TrinomialSpec spec{n, a, 1};
    const double beta = bracket_beta(spec);
    const double oracle =
        bisect([&](double x) { return spec.eval(x); }, 1.0, 1.0 + std::pow(a, 1.0 / (n - 1)));
    CHECK(beta == doctest::Approx(oracle).epsilon(1e-13));
    CHECK(beta > 1.0);
    CHECK(beta < 1.0 + std::pow(a, 1.0 / (n - 1)));
  }
  CHECK(bracket_beta({100, 1.0, 1}) - 1.0 < 0.05);
}

TEST_CASE("alpha matches bisection and approaches 1") {
  CHECK(bracket_alpha({2, 1.0, 1}) == doctest::Approx(0.6180339887498949).epsilon(1e-12));
  CHECK(bracket_alpha({3, 2.0, 1}) == doctest::Approx(0.4533976515164038).epsilon(1e-10));
  for (const auto& [n, a] : std::vector<std::pair<int, double>>{{24, 1.0}, {100, 1.0}, {150, 0.1}}) {
    const double alpha = bracket_alpha({n, a, 1});
    const double oracle =
        bisect([&](double x) { return 1.0 - pow_int(x, n) - a * x; }, 0.0, 1.0);
    CHECK(alpha == doctest::Approx(oracle).epsilon(1e-13));
    CHECK(alpha > 0.0);
    CHECK(alpha < 1.0);
  }
  CHECK(1.0 - bracket_alpha({100, 1.0, 1}) < 0.05);
}

TEST_CASE("general-k brackets solve the k-form equations") {
  for (int k : {2, 4}) {
    const int n = 24;
    const double a = 1.3;
    const double beta = bracket_beta_general(n, a, k);
    const double alpha = bracket_alpha_general(n, a, k);
    const double bo = bisect(
        [&](double x) { return pow_int(x, n) - a * pow_int(x, k) - 1.0; }, 1.0,
        1.0 + std::pow(a, 1.0 / (n - k)));
    const double ao =
        bisect([&](double x) { return 1.0 - pow_int(x, n) - a * pow_int(x, k); }, 0.0, 1.0);
    CHECK(beta == doctest::Approx(bo).epsilon(1e-13));
    CHECK(alpha == doctest::Approx(ao).epsilon(1e-13));
  }
}

TEST_CASE("gamma pair exists exactly when the peak is positive") {
  const auto g5 = bracket_gamma({5, 2.0, 1});
  REQUIRE(g5.has_value());
  CHECK(g5->first > 0.5);
  CHECK(g5->first < 0.6);
  CHECK(g5->second == 1.0);  // a = 2: gamma2 lands on 1 exactly

  const auto g3 = bracket_gamma({3, 1.1, 1});
  CHECK_FALSE(g3.has_value());  // peak of 1.1x - x^3 - 1 is negative

  const auto g200 = bracket_gamma({200, 1.05, 1});
  REQUIRE(g200.has_value());
  CHECK(g200->first < g200->second);
  CHECK(g200->first > 0.0);
  CHECK(g200->second < 1.0);
  for (double g : {g200->first, g200->second}) {
    CHECK(std::abs(1.05 * g - pow_int(g, 200) - 1.0) <= 1e-12);
  }
}

TEST_CASE("gamma roots match bisection on both sides of the peak") {
  const int n = 150;
  const double a = 1.9;
  const auto g = bracket_gamma({n, a, 1});
  REQUIRE(g.has_value());
  auto p2 = [&](double x) { return a * x - pow_int(x, n) - 1.0; };
  const double xs = std::pow(a / n, 1.0 / (n - 1));
  CHECK(g->first == doctest::Approx(bisect(p2, 0.0, xs)).epsilon(1e-13));
  CHECK(g->second == doctest::Approx(bisect(p2, xs, 1.0)).epsilon(1e-13));
}

TEST_CASE("gamma preconditions are enforced") {
  CHECK_THROWS_AS(bracket_gamma({100, 1.0, 1}), DomainError);
  CHECK_THROWS_AS(bracket_gamma({100, 0.5, 1}), DomainError);
  CHECK_THROWS_AS(bracket_gamma({100, 2.5, 1}), DomainError);
  CHECK_THROWS_AS(bracket_gamma({100, 1.5, 2}), DomainError);
  CHECK_THROWS_AS(bracket_beta({100, -1.0, 1}), DomainError);
  CHECK_THROWS_AS(bracket_alpha({100, 0.0, 1}), DomainError);
}

TEST_CASE("real_brackets bundles the individual results") {
  const TrinomialSpec spec{100, 1.5, 1};
  const RealBrackets rb = real_brackets(spec);
  CHECK(rb.beta == bracket_beta(spec));
  CHECK(rb.alpha == bracket_alpha(spec));
  REQUIRE(rb.gamma.has_value());
  CHECK(*rb.gamma == *bracket_gamma(spec));

  const RealBrackets rb2 = real_brackets({100, 0.5, 1});
  CHECK_FALSE(rb2.gamma.has_value());  // outside (1, 2]

  const RealBrackets rb4 = real_brackets({24, 1.5, 4});
  CHECK_FALSE(rb4.gamma.has_value());  // stated for k = 1 only
  CHECK(rb4.beta > 1.0);
}
