#include "trinomial/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "trinomial/errors.hpp"

namespace trinomial {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

// Cancellation-free curve equation g(rho) = rho^n - |a rho^k e^(ik phi) + 1|
// with cos/sin of k*phi precomputed. The squared form loses half the digits
// where the branch is nearly double; this one keeps an O(1) slope there.
struct CurveEq {
  int n;
  double a;
  int k;
  double c;  // cos(k phi)
  double s;  // sin(k phi)

  double value(double rho) const {
    const double rk = a * pow_int(rho, k);
    return pow_int(rho, n) - std::hypot(rk * c + 1.0, rk * s);
  }

  double slope(double rho) const {
    const double rk = a * pow_int(rho, k);
    const double h = std::hypot(rk * c + 1.0, rk * s);
    const double dh = (h > 0.0) ? a * k * pow_int(rho, k - 1) * (rk + c) / h : 0.0;
    return n * pow_int(rho, n - 1) - dh;
  }
};

void validate_curve_spec(const TrinomialSpec& spec) {
  spec.validate();
  if (!(spec.a > 0.0)) throw DomainError("curve sampling requires a > 0");
}

}  // namespace

OutsideCount count_outside_unit(const RootSet& rs, double tol) {
  if (!(tol >= 0.0) || !std::isfinite(tol)) {
    throw ValidationError("classification tolerance must be finite and >= 0");
  }
  OutsideCount out{};
  for (const auto& pr : rs.polar) {
    if (std::abs(pr.rho - 1.0) <= tol) {
      ++out.dead_band;
    } else if (pr.rho > 1.0) {
      ++out.nu;
    }
  }
  return out;
}

double mahler_measure(const RootSet& rs, double leading) {
  double log_sum = 0.0;
  for (const auto& pr : rs.polar) {
    if (pr.rho > 1.0) log_sum += std::log(pr.rho);
  }
  return std::abs(leading) * std::exp(log_sum);
}

double house(const RootSet& rs) {
  double best = 0.0;
  for (const auto& pr : rs.polar) best = std::max(best, pr.rho);
  return best;
}

bool check_monotone_modulus(const RootSet& rs, int k, double epsilon) {
  if (k < 1) throw ValidationError("k must be >= 1");
  const int n = rs.degree();
  if (n == 0) throw ValidationError("empty root set");
  if (epsilon <= 0.0) epsilon = 4.0 * kPi / n;
  const double hi = kPi / k - epsilon;
  // rs.polar is sorted by phi, so one forward scan suffices.
  double prev = std::numeric_limits<double>::infinity();
  for (const auto& pr : rs.polar) {
    if (pr.phi > hi) break;
    if (pr.rho > prev + 1e-12) return false;
    prev = pr.rho;
  }
  return true;
}

bool check_equispacing(const RootSet& rs) {
  const int n = rs.degree();
  if (n == 0) throw ValidationError("empty root set");
  const int windows = (n + 1) / 2 - 1;  // ceil(n/2) - 1
  if (windows <= 0) return true;
  const double width = kTwoPi / n;
  std::vector<int> counts(static_cast<std::size_t>(windows), 0);
  for (const auto& pr : rs.polar) {
    if (pr.phi > kPi) continue;
    const int idx = static_cast<int>(std::floor(pr.phi / width));
    if (idx < 0 || idx >= windows) continue;
    ++counts[static_cast<std::size_t>(idx)];
  }
  return std::all_of(counts.begin(), counts.end(), [](int c) { return c == 1; });
}

DiscrepancyResult erdos_turan_check(const RootSet& rs, double angle_lo, double angle_hi) {
  if (!(angle_lo >= 0.0 && angle_lo < angle_hi && angle_hi <= kTwoPi + 1e-12)) {
    throw ValidationError("window must satisfy 0 <= lo < hi <= 2*pi");
  }
  const int n = rs.degree();
  if (n == 0 || rs.coeffs.size() != static_cast<std::size_t>(n) + 1) {
    throw ValidationError("root set lacks source coefficients");
  }
  const double c0 = rs.coeffs.front();
  const double cn = rs.coeffs.back();
  if (c0 == 0.0 || cn == 0.0) {
    throw DomainError("discrepancy bound needs nonzero end coefficients");
  }
  double abs_sum = 0.0;
  for (double c : rs.coeffs) abs_sum += std::abs(c);
  const double ratio = abs_sum / std::sqrt(std::abs(c0 * cn));

  DiscrepancyResult r{};
  for (const auto& pr : rs.polar) {
    if (pr.phi >= angle_lo && pr.phi <= angle_hi) ++r.count;
  }
  r.expected = n * (angle_hi - angle_lo) / kTwoPi;
  r.deviation = std::abs(r.count - r.expected);
  r.bound = 16.0 * std::sqrt(n * std::log(ratio));
  r.ok = r.deviation <= r.bound;
  return r;
}

std::vector<PolarRoot> limacon_curve(const TrinomialSpec& spec, int samples) {
  validate_curve_spec(spec);
  if (samples < 1) throw ValidationError("samples must be >= 1");

  const double lo = 0.5 * bracket_alpha(spec);
  const double hi = 2.0 * bracket_beta(spec);

  std::vector<PolarRoot> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) {
    const double phi = kTwoPi * j / samples;
    const CurveEq eq{spec.n, spec.a, spec.k, std::cos(spec.k * phi), std::sin(spec.k * phi)};
    // g(lo) < 0 < g(hi); march to the first sign change so the root returned
    // is the smallest-modulus branch, then refine.
    const int steps = 64;
    double seg_lo = lo;
    double f_lo = eq.value(seg_lo);
    double seg_hi = hi;
    for (int s = 1; s <= steps; ++s) {
      const double x = lo + (hi - lo) * s / steps;
      const double fx = eq.value(x);
      if ((fx < 0.0) != (f_lo < 0.0) || fx == 0.0) {
        seg_hi = x;
        break;
      }
      seg_lo = x;
      f_lo = fx;
    }
    const double rho = detail::refine_root([&](double r) { return eq.value(r); },
                                           [&](double r) { return eq.slope(r); },
                                           seg_lo, seg_hi);
    out.push_back(PolarRoot{rho, phi});
  }
  return out;
}

double limacon_distance(const TrinomialSpec& spec, double rho0, double phi0) {
  validate_curve_spec(spec);
  if (!(rho0 > 0.0) || !std::isfinite(rho0) || !std::isfinite(phi0)) {
    throw ValidationError("point must have finite phi and rho > 0");
  }
  const CurveEq eq{spec.n, spec.a, spec.k, std::cos(spec.k * phi0), std::sin(spec.k * phi0)};
  double r = rho0;
  for (int it = 0; it < 80; ++it) {
    const double g = eq.value(r);
    if (g == 0.0) break;
    const double dg = eq.slope(r);
    if (dg == 0.0) break;
    double step = g / dg;
    // keep the iterate positive; certified roots start within a few ulp anyway
    if (std::abs(step) > 0.5 * r) step = std::copysign(0.5 * r, step);
    r -= step;
    if (std::abs(step) <= 1e-16 * r) break;
  }
  return std::abs(r - rho0);
}

double limacon_distance(const TrinomialSpec& spec, cplx z) {
  validate_curve_spec(spec);
  const double rho = std::abs(z);
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw ValidationError("point must be finite and nonzero");
  }
  const cplx w = spec.a * pow_int(z, spec.k) + cplx(1.0, 0.0);
  const double h = std::abs(w);
  const double f = pow_int(rho, spec.n) - h;
  if (f == 0.0) return 0.0;
  // grad(|z|^n) = n |z|^(n-2) z, grad|w| = w conj(w') / |w|, as F_x + i F_y.
  cplx grad = static_cast<double>(spec.n) * pow_int(rho, spec.n - 2) * z;
  const cplx wp = spec.a * static_cast<double>(spec.k) * pow_int(z, spec.k - 1);
  double gmod;
  if (h > 0.0) {
    gmod = std::abs(grad - w * std::conj(wp) / h);
  } else {
    // w = 0 is a kink of |w|: it grows at rate |w'| in every direction, so
    // the steepest descent of f combines both terms.
    gmod = std::abs(grad) + std::abs(wp);
  }
  if (gmod == 0.0) return std::abs(f);
  return std::abs(f) / gmod;
}

std::optional<double> exceptional_root(const TrinomialSpec& spec) {
  spec.validate();
  if (spec.k != 1) throw DomainError("exceptional root is defined for k = 1");
  const double a = spec.a;
  const int n = spec.n;
  if (!(a > 1.0)) return std::nullopt;

  auto p2 = [&](double x) { return a * x - pow_int(x, n) - 1.0; };
  auto dp2 = [&](double x) { return a - n * pow_int(x, n - 1); };

  const double xs = std::pow(a / n, 1.0 / (n - 1));
  if (!(p2(xs) > 0.0)) return std::nullopt;
  const double g1 = detail::refine_root(p2, dp2, 0.0, xs);

  // Cap between gamma1 and the next sign change of P2; P(-cap) >= P2(cap) > 0
  // for either parity, so [-cap, 0] brackets exactly the root near -1/a.
  double cap;
  if (a < 2.0) {
    const double g2 = detail::refine_root(p2, dp2, xs, 1.0);
    cap = 0.5 * (g1 + g2);
  } else {
    cap = 0.5 * (g1 + 1.0);  // P2 > 0 on (g1, 1] once a >= 2
  }

  auto f = [&](double x) { return spec.eval(x); };
  auto df = [&](double x) { return spec.eval_derivative(x); };
  return detail::refine_root(f, df, -cap, 0.0);
}

bool AnalysisReport::all_passed() const {
  return monotone_ok && discrepancy.ok && !containment.failed() &&
         !equispaced.failed() && !annulus.failed() && !trig_residuals.failed() &&
         !incidence.failed();
}

AnalysisReport analyze(const TrinomialSpec& spec, const AnalysisOptions& opts) {
  spec.validate();
  if (!(spec.a > 0.0)) throw DomainError("analysis requires a > 0");
  if (!(opts.discrepancy_windows >= 1)) {
    throw ValidationError("discrepancy_windows must be >= 1");
  }

  AnalysisReport rep{};
  rep.spec = spec;

  const RootSet rs = solve(spec, opts.solver);
  const OutsideCount oc = count_outside_unit(rs, opts.unit_circle_tolerance);
  rep.nu = oc.nu;
  rep.dead_band_roots = oc.dead_band;
  rep.rate = static_cast<double>(oc.nu) / spec.n;
  rep.mahler = mahler_measure(rs);
  rep.house = house(rs);

  rep.beta = bracket_beta(spec);
  rep.alpha = bracket_alpha(spec);
  rep.containment.checked = true;
  rep.containment.ok = std::all_of(rs.polar.begin(), rs.polar.end(), [&](const PolarRoot& pr) {
    return pr.rho >= rep.alpha - 1e-9 && pr.rho <= rep.beta + 1e-9;
  });

  rep.monotone_ok = check_monotone_modulus(rs, spec.k, opts.monotone_epsilon);

  // Equispacing and the annulus are statements about the k = 1 trinomial; for
  // k > 1 they transfer through t = x^k when k divides n.
  const bool reducible = spec.k == 1 || spec.n % spec.k == 0;
  TrinomialSpec reduced{spec.n / spec.k, spec.a, 1};
  std::optional<std::pair<double, double>> gamma;
  if (reducible && spec.a > 1.0 && spec.a <= 2.0) {
    gamma = bracket_gamma(reduced);
  }
  rep.gamma = gamma;

  if (reducible) {
    const RootSet* base = &rs;
    RootSet reduced_rs;
    if (spec.k > 1) {
      reduced_rs = solve(reduced, opts.solver);
      base = &reduced_rs;
    }
    rep.equispaced.checked = true;
    rep.equispaced.ok = check_equispacing(*base);

    if (gamma) {
      // No modulus in the open annulus (gamma1, gamma2); exactly k roots at or
      // below gamma1 (the lifts of the one exceptional t-root).
      const double g1 = gamma->first;
      const double g2 = gamma->second;
      int inner = 0;
      int strays = 0;
      for (const auto& pr : rs.polar) {
        const double t = (spec.k == 1) ? pr.rho : pow_int(pr.rho, spec.k);
        if (t <= g1 + 1e-9) {
          ++inner;
        } else if (t < g2 - 1e-9) {
          ++strays;
        }
      }
      rep.annulus.checked = true;
      rep.annulus.ok = strays == 0 && inner == spec.k;
    }
  }

  if (spec.k == 1) {
    const auto residuals = verify_polar_residuals(rs, spec);
    double worst = 0.0;
    for (const auto& [m, t] : residuals) worst = std::max(worst, std::max(m, t));
    rep.max_trig_residual = worst;
    rep.trig_residuals.checked = true;
    rep.trig_residuals.ok = worst <= 1e-9;
  }

  double worst_inc = 0.0;
  for (const cplx& z : rs.roots) {
    worst_inc = std::max(worst_inc, limacon_distance(spec, z));
  }
  rep.max_incidence_error = worst_inc;
  rep.incidence.checked = true;
  rep.incidence.ok = worst_inc <= opts.incidence_tolerance;

  const int w = opts.discrepancy_windows;
  bool disc_ok = true;
  DiscrepancyResult worst_window{};
  for (int j = 0; j < w; ++j) {
    const double lo = kTwoPi * j / w;
    const double hi = (j + 1 == w) ? kTwoPi : kTwoPi * (j + 1) / w;
    const DiscrepancyResult r = erdos_turan_check(rs, lo, hi);
    disc_ok = disc_ok && r.ok;
    if (j == 0 || r.deviation > worst_window.deviation) worst_window = r;
  }
  worst_window.ok = disc_ok;
  rep.discrepancy = worst_window;

  return rep;
}

}  // namespace trinomial
