#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "trinomial/polynomial.hpp"

namespace trinomial {

namespace detail {
// Newton clamped to a sign-preserving bracket; bisection whenever the Newton
// step leaves it. f(lo) and f(hi) must straddle zero.
double refine_root(const std::function<double(double)>& f,
                   const std::function<double(double)>& df, double lo, double hi);
}  // namespace detail

// Real landmarks of x^n - a x^k - 1 on the positive axis. beta is the unique
// positive root (all root moduli are <= beta); alpha is the unique positive
// root of 1 - x^n - a x^k (all root moduli are >= alpha).
struct RealBrackets {
  double beta;
  double alpha;
  std::optional<std::pair<double, double>> gamma;  // k=1 annulus pair, when it exists
};

// Unique real root > 1 of x^n - a x - 1, bracketed in (1, 1 + a^(1/(n-1))).
// Newton/bisection hybrid to ~1 ulp. Requires a > 0.
double bracket_beta(const TrinomialSpec& spec);

// Unique root of 1 - x^n - a x in (0, 1). Requires a > 0.
double bracket_alpha(const TrinomialSpec& spec);

// Both roots of P2(x) = a x - x^n - 1 on (0, 1], when they exist. Existence is
// decided by the sign of P2 at its maximizer (a/n)^(1/(n-1)); gamma2 == 1
// exactly when a == 2. DomainError unless 1 < a <= 2.
std::optional<std::pair<double, double>> bracket_gamma(const TrinomialSpec& spec);

// All three at once.
RealBrackets real_brackets(const TrinomialSpec& spec);

// Generalized to any k in {1,2,4}: positive roots of x^n - a x^k - 1 and of
// 1 - x^n - a x^k. Containment alpha_k <= |z| <= beta_k holds for every root.
double bracket_beta_general(int n, double a, int k);
double bracket_alpha_general(int n, double a, int k);

}  // namespace trinomial
