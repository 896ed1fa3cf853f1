#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "trinomial/brackets.hpp"
#include "trinomial/solver.hpp"

namespace trinomial {

struct OutsideCount {
  int nu = 0;         // roots with rho > 1 + tol
  int dead_band = 0;  // roots with |rho - 1| <= tol: reported, never classified
};

// tol defaults to the classification dead band of 1e-10.
OutsideCount count_outside_unit(const RootSet& rs, double tol = 1e-10);

// |leading| * prod max(|z_i|, 1), accumulated in log space.
double mahler_measure(const RootSet& rs, double leading = 1.0);

// max |z_i|.
double house(const RootSet& rs);

// Moduli non-increasing as arguments increase over [0, pi/k - epsilon].
// epsilon <= 0 selects the default 4*pi/n. Slack 1e-12 on each comparison.
bool check_monotone_modulus(const RootSet& rs, int k = 1, double epsilon = 0.0);

// Exactly one root argument per half-open window [2*pi*j/n, 2*pi*(j+1)/n),
// j = 0 .. ceil(n/2)-2, over the roots with phi in [0, pi]. The real root at
// phi = 0 occupies window 0; arguments past the partition are ignored.
bool check_equispacing(const RootSet& rs);

struct DiscrepancyResult {
  int count = 0;          // roots with phi in [angle_lo, angle_hi]
  double expected = 0.0;  // degree * window / (2*pi)
  double deviation = 0.0; // |count - expected|
  double bound = 0.0;     // 16 * sqrt(degree * ln R), R from the coefficients
  bool ok = false;
};

// Erdos-Turan style window count. Requires 0 <= angle_lo < angle_hi <= 2*pi.
DiscrepancyResult erdos_turan_check(const RootSet& rs, double angle_lo, double angle_hi);

// rho(phi) samples of the modulus curve rho^2n = a^2 rho^2k + 2 a rho^k cos(k phi) + 1,
// phi_j = 2*pi*j/samples. Bisection on [alpha/2, 2*beta] refined by Newton,
// evaluated in the cancellation-free form rho^n = hypot(a rho^k cos + 1, a rho^k sin).
// For a > 1 and phi inside the inner loop this returns the smallest modulus branch.
std::vector<PolarRoot> limacon_curve(const TrinomialSpec& spec, int samples = 512);

// Radial distance from (rho0, phi0) to the curve along the fixed-angle ray:
// damped Newton on the cancellation-free curve equation started at rho0.
double limacon_distance(const TrinomialSpec& spec, double rho0, double phi0);

// Planar distance from a point to the curve, first order: |F| / |grad F| with
// F(z) = |z|^n - |a z^k + 1|. The radial metric degenerates for real negative
// roots: rounding phi = pi tilts the ray off the kink of |a rho e^(i phi) + 1|
// and the nearest same-ray branch jumps O(1) away. This form never selects a
// branch, so it is the one the incidence check uses.
double limacon_distance(const TrinomialSpec& spec, cplx z);

// The real root near -1/a for a > 1 (modulus below the annulus). Bisection on
// [-(gamma1+gamma2)/2, 0] plus Newton. Absent for a <= 1 or no annulus.
std::optional<double> exceptional_root(const TrinomialSpec& spec);

struct CheckOutcome {
  bool checked = false;  // false: not defined for this (n, a, k)
  bool ok = false;

  bool failed() const { return checked && !ok; }
};

struct AnalysisOptions {
  double unit_circle_tolerance = 1e-10;
  double monotone_epsilon = 0.0;   // 0 -> 4*pi/n
  double incidence_tolerance = 1e-8;
  int discrepancy_windows = 64;
  SolverConfig solver;
};

struct AnalysisReport {
  TrinomialSpec spec{};
  int nu = 0;
  int dead_band_roots = 0;
  double rate = 0.0;          // nu / n
  double mahler = 0.0;
  double house = 0.0;
  double beta = 0.0;          // containment interval, k-general
  double alpha = 0.0;
  std::optional<std::pair<double, double>> gamma;  // from the k=1 trinomial it reduces to

  bool monotone_ok = false;
  CheckOutcome equispaced;    // on the reduced trinomial when k > 1 (needs k | n)
  CheckOutcome containment;
  CheckOutcome annulus;       // needs gamma; reduced when k > 1
  CheckOutcome trig_residuals;  // k = 1 only; polar identity residuals <= 1e-9
  CheckOutcome incidence;     // every root on its curve within incidence_tolerance
  DiscrepancyResult discrepancy;  // worst window of the 64-window grid
  double max_incidence_error = 0.0;
  double max_trig_residual = 0.0;

  bool all_passed() const;
};

// Solve + classify + run every verifier that is defined for (n, a, k).
AnalysisReport analyze(const TrinomialSpec& spec, const AnalysisOptions& opts = {});

}  // namespace trinomial
