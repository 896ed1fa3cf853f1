#include "trinomial/analysis.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "trinomial/brackets.hpp"
#include "trinomial/errors.hpp"
#include "trinomial/solver.hpp"

using namespace trinomial;

namespace {

RootSet unit_circle_roots() {
  std::vector<double> c(25, 0.0);
  c[0] = 1.0;
  c[24] = -1.0;
  return solve(Polynomial(c));
}

}  // namespace

TEST_CASE("outside-unit counts reproduce the reference cells") {
  CHECK(count_outside_unit(solve(TrinomialSpec{100, 1.0, 1})).nu == 67);
  CHECK(count_outside_unit(solve(TrinomialSpec{150, 0.5, 1})).nu == 87);

  const OutsideCount oc = count_outside_unit(unit_circle_roots());
  CHECK(oc.nu == 0);
  CHECK(oc.dead_band == 24);

  CHECK_THROWS_AS(count_outside_unit(unit_circle_roots(), -1.0), ValidationError);
}

TEST_CASE("no dead-band roots in the working a range") {
  for (double a : {0.1, 1.0, 2.0}) {
    CHECK(count_outside_unit(solve(TrinomialSpec{150, a, 1})).dead_band == 0);
  }
}

TEST_CASE("mahler measure reproduces the reference cells") {
  CHECK(mahler_measure(solve(TrinomialSpec{100, 1.0, 1})) ==
        doctest::Approx(1.3813362).epsilon(1e-6));
  CHECK(mahler_measure(solve(TrinomialSpec{150, 1.9, 1})) ==
        doctest::Approx(1.9131780).epsilon(1e-6));
  CHECK(mahler_measure(unit_circle_roots()) == 1.0);
}

TEST_CASE("Lehmer polynomial measure is the Salem number") {
  const RootSet rs = solve(Polynomial({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}));
  CHECK(mahler_measure(rs) == doctest::Approx(1.176280818).epsilon(1e-8));
}

TEST_CASE("log-space accumulation agrees with the direct product") {
  const RootSet rs = solve(TrinomialSpec{24, 1.0, 1});
  double direct = 1.0;
  for (const auto& pr : rs.polar) direct *= std::max(1.0, pr.rho);
  CHECK(mahler_measure(rs) == doctest::Approx(direct).epsilon(1e-13));
  CHECK(mahler_measure(rs, 2.0) == doctest::Approx(2.0 * direct).epsilon(1e-13));
}

TEST_CASE("measure times the inside-unit product recovers the constant term") {
  const RootSet rs = solve(TrinomialSpec{150, 1.3, 1});
  double log_inside = 0.0;
  for (const auto& pr : rs.polar) {
    if (pr.rho < 1.0) log_inside += std::log(pr.rho);
  }
  CHECK(mahler_measure(rs) * std::exp(log_inside) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("house is the outer positive real root") {
  for (const auto& [n, a] : std::vector<std::pair<int, double>>{{24, 1.0}, {100, 1.5}}) {
    const TrinomialSpec spec{n, a, 1};
    CHECK(house(solve(spec)) == doctest::Approx(bracket_beta(spec)).epsilon(1e-10));
  }
  CHECK(house(solve(Polynomial({1.0, -1.0, -1.0}))) ==
        doctest::Approx(1.6180339887498949).epsilon(1e-12));
  CHECK(house(unit_circle_roots()) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("moduli decrease with the argument away from the excluded band") {
  CHECK(check_monotone_modulus(solve(TrinomialSpec{24, 1.0, 1}), 1, 0.01));
  CHECK(check_monotone_modulus(solve(TrinomialSpec{101, 2.0, 1}), 1, 0.1));
  CHECK(check_monotone_modulus(solve(TrinomialSpec{2, 1.0, 1})));
  CHECK_THROWS_AS(check_monotone_modulus(solve(TrinomialSpec{24, 1.0, 1}), 0), ValidationError);
}

TEST_CASE("upper-half-plane arguments land one per window") {
  CHECK(check_equispacing(solve(TrinomialSpec{100, 1.0, 1})));
  CHECK(check_equispacing(solve(TrinomialSpec{150, 0.1, 1})));
  CHECK(check_equispacing(solve(TrinomialSpec{4, 0.5, 1})));
}

TEST_CASE("angular counts stay within the discrepancy bound") {
  const double pi = 3.14159265358979323846;

  const DiscrepancyResult full = erdos_turan_check(solve(TrinomialSpec{150, 1.0, 1}), 0.0, 2 * pi);
  CHECK(full.count == 150);
  CHECK(full.deviation == 0.0);
  CHECK(full.ok);

  const DiscrepancyResult half = erdos_turan_check(solve(TrinomialSpec{100, 1.0, 1}), 0.0, pi);
  CHECK(half.bound == doctest::Approx(16.0 * std::sqrt(100.0 * std::log(3.0))).epsilon(1e-12));
  CHECK(std::abs(half.count - 50.0) <= 2.0);
  CHECK(half.ok);

  CHECK(erdos_turan_check(solve(TrinomialSpec{150, 2.0, 1}), 0.0, pi / 2).ok);

  const RootSet rs = solve(TrinomialSpec{24, 1.0, 1});
  CHECK_THROWS_AS(erdos_turan_check(rs, -0.1, 1.0), ValidationError);
  CHECK_THROWS_AS(erdos_turan_check(rs, 1.0, 1.0), ValidationError);
  CHECK_THROWS_AS(erdos_turan_check(rs, 1.0, 7.0), ValidationError);
}

TEST_CASE("every solved root lies on its curve") {
  for (int k : {1, 2, 4}) {
    const TrinomialSpec spec{24, 1.0, k};
    const RootSet rs = solve(spec);
    for (const cplx& z : rs.roots) {
      CHECK(limacon_distance(spec, z) < 1e-8);
    }
  }
  // radial form, away from the kink angle
  const TrinomialSpec spec{24, 1.0, 1};
  for (const auto& pr : solve(spec).polar) {
    CHECK(limacon_distance(spec, pr.rho, pr.phi) < 1e-8);
  }
}

TEST_CASE("curve distance is exact at the kink and large off the curve") {
  // a z + 1 underflows to zero at z = -1/a: the kink of the modulus surface
  CHECK(limacon_distance(TrinomialSpec{100, 2.0, 1}, cplx(-0.5, 0.0)) < 1e-12);
  // first-order metric: |F|/|grad F| at z = 2 is 1/12, well off the curve
  CHECK(limacon_distance(TrinomialSpec{24, 1.0, 1}, cplx(2.0, 0.0)) > 0.05);

  const RootSet rs = solve(TrinomialSpec{24, 1.0, 1});
  const cplx off = rs.roots[5] * 1.001;
  CHECK(limacon_distance(TrinomialSpec{24, 1.0, 1}, off) > 1e-6);
}

TEST_CASE("curve sampling brackets every angle") {
  const auto pts = limacon_curve(TrinomialSpec{24, 1.0, 1}, 64);
  REQUIRE(pts.size() == 64);
  for (const auto& pr : pts) {
    CHECK(limacon_distance(TrinomialSpec{24, 1.0, 1}, pr.rho, pr.phi) < 1e-10);
    CHECK(pr.rho > 0.0);
  }
  // the equation degenerates to rho = 1 as a -> 0
  for (const auto& pr : limacon_curve(TrinomialSpec{50, 1e-8, 1}, 32)) {
    CHECK(std::abs(pr.rho - 1.0) < 1e-6);
  }
  CHECK_THROWS_AS(limacon_curve(TrinomialSpec{24, -1.0, 1}, 16), DomainError);
  CHECK_THROWS_AS(limacon_curve(TrinomialSpec{24, 1.0, 1}, 0), ValidationError);
}

TEST_CASE("curve crosses the unit circle exactly at the limiting angle") {
  // rho = 1 solves the curve equation at phi* = arccos(-a/2) for every n,
  // and away from phi* the curve flattens onto the unit circle as n grows
  const double phi_star = std::acos(-0.5);
  double prev = 1.0;
  for (int n : {50, 100, 200}) {
    CHECK(limacon_distance(TrinomialSpec{n, 1.0, 1}, 1.0, phi_star) < 1e-12);
    const double d = limacon_distance(TrinomialSpec{n, 1.0, 1}, 1.0, phi_star - 0.3);
    CHECK(d > 0.0);
    CHECK(d < prev);
    prev = d;
  }
  CHECK(prev < 0.02);
}

TEST_CASE("exceptional root sits next to -1/a") {
  const auto x = exceptional_root(TrinomialSpec{100, 2.0, 1});
  REQUIRE(x.has_value());
  CHECK(*x == -0.5);  // correction term is below one ulp

  const auto y = exceptional_root(TrinomialSpec{51, 1.5, 1});
  REQUIRE(y.has_value());
  CHECK(std::abs(*y + 2.0 / 3.0) < 1e-6);
  CHECK(std::abs(TrinomialSpec{51, 1.5, 1}.eval(*y)) < 1e-12);

  CHECK_FALSE(exceptional_root(TrinomialSpec{100, 1.0, 1}).has_value());
  CHECK_FALSE(exceptional_root(TrinomialSpec{3, 1.1, 1}).has_value());
  CHECK_THROWS_AS(exceptional_root(TrinomialSpec{100, 2.0, 2}), DomainError);
}

TEST_CASE("k-substitution preserves counts, measure, and house") {
  for (const auto& [n, a, k] : std::vector<std::tuple<int, double, int>>{
           {100, 0.7, 2}, {120, 1.3, 4}, {24, 1.9, 2}}) {
    const RootSet lifted = solve(TrinomialSpec{n, a, k});
    const RootSet base = solve(TrinomialSpec{n / k, a, 1});
    CHECK(count_outside_unit(lifted).nu == k * count_outside_unit(base).nu);
    CHECK(mahler_measure(lifted) == doctest::Approx(mahler_measure(base)).epsilon(1e-12));
    CHECK(house(lifted) ==
          doctest::Approx(std::pow(house(base), 1.0 / k)).epsilon(1e-12));
  }
}

TEST_CASE("analyze bundles a full passing report") {
  const AnalysisReport rep = analyze(TrinomialSpec{100, 1.0, 1});
  CHECK(rep.nu == 67);
  CHECK(rep.rate == doctest::Approx(0.67));
  CHECK(rep.dead_band_roots == 0);
  CHECK(rep.mahler == doctest::Approx(1.3813362).epsilon(1e-6));
  CHECK(rep.house == doctest::Approx(bracket_beta({100, 1.0, 1})).epsilon(1e-10));
  CHECK(rep.beta == bracket_beta({100, 1.0, 1}));
  CHECK(rep.alpha == bracket_alpha({100, 1.0, 1}));
  CHECK_FALSE(rep.gamma.has_value());  // a = 1 sits outside (1, 2]
  CHECK(rep.containment.checked);
  CHECK(rep.containment.ok);
  CHECK(rep.monotone_ok);
  CHECK(rep.equispaced.checked);
  CHECK(rep.equispaced.ok);
  CHECK_FALSE(rep.annulus.checked);
  CHECK(rep.trig_residuals.checked);
  CHECK(rep.trig_residuals.ok);
  CHECK(rep.max_trig_residual <= 1e-9);
  CHECK(rep.incidence.checked);
  CHECK(rep.incidence.ok);
  CHECK(rep.max_incidence_error <= 1e-8);
  CHECK(rep.discrepancy.ok);
  CHECK(rep.all_passed());
}

TEST_CASE("analyze checks the annulus once the gamma pair exists") {
  const AnalysisReport rep = analyze(TrinomialSpec{150, 1.9, 1});
  REQUIRE(rep.gamma.has_value());
  CHECK(rep.annulus.checked);
  CHECK(rep.annulus.ok);
  CHECK(rep.all_passed());
}

TEST_CASE("analyze reduces k > 1 through the substitution") {
  const AnalysisReport rep = analyze(TrinomialSpec{24, 1.0, 4});
  CHECK(rep.equispaced.checked);  // 4 divides 24
  CHECK_FALSE(rep.trig_residuals.checked);
  CHECK(rep.incidence.checked);
  CHECK(rep.all_passed());

  const AnalysisReport irred = analyze(TrinomialSpec{150, 1.3, 4});
  CHECK_FALSE(irred.equispaced.checked);  // 4 does not divide 150
  CHECK_FALSE(irred.annulus.checked);
  CHECK(irred.all_passed());
}

TEST_CASE("widening the classification tolerance surfaces dead-band roots") {
  AnalysisOptions opts;
  opts.unit_circle_tolerance = 0.1;
  const AnalysisReport rep = analyze(TrinomialSpec{24, 1.0, 1}, opts);
  CHECK(rep.dead_band_roots > 0);
  CHECK(rep.nu < 24);
}

TEST_CASE("analyze rejects nonpositive a") {
  CHECK_THROWS_AS(analyze(TrinomialSpec{24, -1.0, 1}), DomainError);
  CHECK_THROWS_AS(analyze(TrinomialSpec{24, 0.0, 1}), DomainError);
}

TEST_CASE("rates track the limiting angle fraction") {
  const double pi = 3.14159265358979323846;
  for (int n : {100, 150}) {
    for (double a : {0.5, 1.0, 1.7}) {
      const int nu = count_outside_unit(solve(TrinomialSpec{n, a, 1})).nu;
      const double limit = std::acos(-a / 2.0) / pi;
      CHECK(std::abs(static_cast<double>(nu) / n - limit) <= 2.0 / n + 0.02);
    }
  }
}
