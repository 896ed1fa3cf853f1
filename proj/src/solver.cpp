#include "trinomial/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace trinomial {

namespace {

// Fixed irrational angular offset: breaks the conjugate symmetry of the
// starting circle so the Aberth sweep never stalls on a symmetric saddle.
constexpr double kAngularOffset = 0.5772156649015329;
constexpr double kPi = 3.14159265358979323846;

double coefficient_scale(const std::vector<double>& coeffs) {
  double s = 0.0;
  for (double c : coeffs) s = std::max(s, std::abs(c));
  return s;
}

template <typename Eval>
void aberth_sweeps(const Eval& eval, std::vector<cplx>& z, const SolverConfig& cfg,
                   double clamp_radius, int& iterations_used, bool& step_converged) {
  const std::size_t m = z.size();
  step_converged = false;
  int it = 0;
  for (; it < cfg.max_iterations; ++it) {
    double max_step = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      cplx p, dp;
      eval(z[i], p, dp);
      if (p == cplx(0.0, 0.0)) continue;
      if (dp == cplx(0.0, 0.0)) {
        // Stationary point of p: nudge off it deterministically.
        z[i] += cplx(1e-8, 1e-8) * (1.0 + std::abs(z[i]));
        max_step = 1.0;
        continue;
      }
      const cplx newton = p / dp;
      cplx coupling{0.0, 0.0};
      for (std::size_t j = 0; j < m; ++j) {
        if (j == i) continue;
        cplx d = z[i] - z[j];
        if (d == cplx(0.0, 0.0)) d = cplx(1e-30, 0.0);
        coupling += 1.0 / d;
      }
      const cplx denom = 1.0 - newton * coupling;
      cplx w = (denom == cplx(0.0, 0.0)) ? newton : newton / denom;
      double wmod = std::abs(w);
      if (!std::isfinite(wmod)) {
        max_step = 1.0;
        continue;
      }
      // A near-zero denom can fling an iterate past the overflow horizon of
      // z^degree; cap the step and keep everything inside the Cauchy bound.
      const double cap = 0.2 * (1.0 + std::abs(z[i]));
      if (wmod > cap) w *= cap / wmod;
      z[i] -= w;
      double ratio = std::abs(w) / (1.0 + std::abs(z[i]));
      if (!std::isfinite(ratio)) ratio = 1.0;
      const double zmod = std::abs(z[i]);
      if (!std::isfinite(zmod) || zmod > clamp_radius) {
        cplx dir;
        if (std::isfinite(zmod) && zmod > 0.0) {
          dir = z[i] / zmod;
        } else {
          const double ang = 2.0 * kPi * static_cast<double>(i) / m + kAngularOffset;
          dir = cplx(std::cos(ang), std::sin(ang));
        }
        z[i] = clamp_radius * dir;
        ratio = 1.0;
      }
      max_step = std::max(max_step, ratio);
    }
    if (max_step < 5e-15) {
      step_converged = true;
      ++it;
      break;
    }
  }
  iterations_used = it;
}

template <typename Eval>
void newton_polish(const Eval& eval, std::vector<cplx>& z, const SolverConfig& cfg,
                   double clamp_radius) {
  for (cplx& zi : z) {
    for (int s = 0; s < cfg.polish_steps; ++s) {
      cplx p, dp;
      eval(zi, p, dp);
      if (p == cplx(0.0, 0.0) || dp == cplx(0.0, 0.0)) break;
      const cplx step = p / dp;
      const cplx next = zi - step;
      const double mod = std::abs(next);
      if (!std::isfinite(mod) || mod > clamp_radius) break;  // keep the Aberth iterate
      zi = next;
      if (std::abs(step) <= 1e-17 * (1.0 + std::abs(zi))) break;
    }
  }
}

// Real coefficients: realify near-real iterates, then average conjugate pairs
// so the closure invariant holds exactly.
void symmetrize(std::vector<cplx>& z, double pairing_tol) {
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (std::abs(z[i].imag()) <= pairing_tol * std::max(1.0, std::abs(z[i]))) {
      z[i] = cplx(z[i].real(), 0.0);
    } else if (z[i].imag() > 0.0) {
      pos.push_back(i);
    } else {
      neg.push_back(i);
    }
  }
  if (pos.size() != neg.size()) return;  // residual certification will judge
  auto by_re_then_im = [&z](std::size_t lhs, std::size_t rhs) {
    const double lre = z[lhs].real(), rre = z[rhs].real();
    if (lre != rre) return lre < rre;
    return std::abs(z[lhs].imag()) < std::abs(z[rhs].imag());
  };
  std::sort(pos.begin(), pos.end(), by_re_then_im);
  std::sort(neg.begin(), neg.end(), by_re_then_im);
  for (std::size_t t = 0; t < pos.size(); ++t) {
    const cplx zp = z[pos[t]];
    const cplx zn = std::conj(z[neg[t]]);
    if (std::abs(zp - zn) <= 1e4 * pairing_tol * std::max(1.0, std::abs(zp))) {
      const cplx avg = 0.5 * (zp + zn);
      z[pos[t]] = avg;
      z[neg[t]] = std::conj(avg);
    }
  }
}

double wrap_angle(double phi) {
  if (phi < 0.0) phi += 2.0 * kPi;
  if (phi >= 2.0 * kPi) phi -= 2.0 * kPi;
  return phi;
}

template <typename Eval>
RootSet finish(const Eval& eval, std::vector<cplx> z, std::vector<double> monic,
               const SolverConfig& cfg, int iterations, bool step_converged) {
  const int degree = static_cast<int>(z.size());
  const double scale = coefficient_scale(monic);

  symmetrize(z, cfg.pairing_tolerance);

  std::vector<std::size_t> order(z.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<PolarRoot> polar(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    polar[i] = {std::abs(z[i]), wrap_angle(std::arg(z[i]))};
  }
  std::sort(order.begin(), order.end(), [&polar](std::size_t lhs, std::size_t rhs) {
    if (polar[lhs].phi != polar[rhs].phi) return polar[lhs].phi < polar[rhs].phi;
    return polar[lhs].rho < polar[rhs].rho;
  });

  RootSet rs;
  rs.roots.reserve(z.size());
  rs.polar.reserve(z.size());
  rs.residuals.reserve(z.size());
  double max_residual = 0.0;
  bool certified = true;
  for (std::size_t idx : order) {
    cplx p, dp;
    eval(z[idx], p, dp);
    const double res = std::abs(p);
    const double bound =
        cfg.residual_tolerance * scale * pow_int(std::max(1.0, polar[idx].rho), degree);
    if (!(res <= bound)) certified = false;
    if (res > max_residual || std::isnan(res)) max_residual = res;
    rs.roots.push_back(z[idx]);
    rs.polar.push_back(polar[idx]);
    rs.residuals.push_back(res);
  }
  rs.coeffs = std::move(monic);
  rs.source = {iterations, cfg.residual_tolerance, max_residual, certified};

  if (!certified) {
    char detail[64];
    std::snprintf(detail, sizeof detail, "%.3e", max_residual);
    throw NonConvergenceError(
        "root residuals not certified after " + std::to_string(iterations) +
            " sweeps (max residual " + detail + ")",
        std::move(rs));
  }
  (void)step_converged;
  return rs;
}

template <typename Eval>
RootSet solve_impl(const Eval& eval, std::vector<double> monic, const SolverConfig& cfg) {
  const int degree = static_cast<int>(monic.size()) - 1;
  if (degree == 1) {
    std::vector<cplx> z{cplx(-monic[1], 0.0)};
    return finish(eval, std::move(z), std::move(monic), cfg, 0, true);
  }

  const double tail = std::abs(monic.back());
  const double radius = tail > 0.0 ? std::pow(tail, 1.0 / degree) : 1.0;
  std::vector<cplx> z(static_cast<std::size_t>(degree));
  for (int j = 0; j < degree; ++j) {
    const double ang = 2.0 * kPi * j / degree + kAngularOffset;
    z[static_cast<std::size_t>(j)] = radius * cplx(std::cos(ang), std::sin(ang));
  }

  // Every root sits inside the Cauchy bound 1 + max|coeff|; intersect it with
  // the radius at which z^degree still evaluates ~30 nats below overflow.
  const double clamp_radius =
      std::min(1.0 + coefficient_scale(monic), std::exp(679.0 / degree));

  int iterations = 0;
  bool step_converged = false;
  aberth_sweeps(eval, z, cfg, clamp_radius, iterations, step_converged);
  newton_polish(eval, z, cfg, clamp_radius);
  return finish(eval, std::move(z), std::move(monic), cfg, iterations, step_converged);
}

}  // namespace

RootSet solve(const Polynomial& p, const SolverConfig& cfg) {
  const Polynomial m = p.monic();
  auto eval = [&m](cplx z, cplx& val, cplx& der) { m.eval_with_derivative(z, val, der); };
  return solve_impl(eval, m.coeffs(), cfg);
}

RootSet solve(const TrinomialSpec& spec, const SolverConfig& cfg) {
  spec.validate();
  auto eval = [&spec](cplx z, cplx& val, cplx& der) { spec.eval_with_derivative(z, val, der); };
  return solve_impl(eval, spec.expand().coeffs(), cfg);
}

std::vector<std::pair<double, double>> verify_polar_residuals(const RootSet& rs,
                                                              const TrinomialSpec& spec) {
  spec.validate();
  if (spec.k != 1) throw DomainError("polar identities are stated for k = 1");
  const std::vector<double> expected = spec.expand().coeffs();
  if (rs.coeffs != expected) {
    throw ValidationError("root set does not originate from this trinomial");
  }
  const double a = spec.a;
  const int n = spec.n;
  std::vector<std::pair<double, double>> out;
  out.reserve(rs.polar.size());
  for (const PolarRoot& pr : rs.polar) {
    const double rho = pr.rho;
    const double phi = pr.phi;
    const double lhs = pow_int(rho, 2L * n);
    const double rhs = a * a * rho * rho + 2.0 * a * rho * std::cos(phi) + 1.0;
    const double modulus_residual = std::abs(lhs - rhs);
    const double angle_residual =
        std::abs(a * rho * std::sin((n - 1) * phi) + std::sin(static_cast<double>(n) * phi));
    out.emplace_back(modulus_residual, angle_residual);
  }
  return out;
}

}  // namespace trinomial
