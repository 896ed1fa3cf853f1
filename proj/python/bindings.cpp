#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trinomial/analysis.hpp"
#include "trinomial/limits.hpp"

namespace py = pybind11;

namespace {

using namespace trinomial;

SolverConfig solver_config(double residual_tolerance) {
  SolverConfig cfg;
  cfg.residual_tolerance = residual_tolerance;
  return cfg;
}

py::dict root_set_dict(const RootSet& rs) {
  py::list roots, residuals, rho, phi;
  for (int i = 0; i < rs.degree(); ++i) {
    roots.append(rs.roots[static_cast<std::size_t>(i)]);
    residuals.append(rs.residuals[static_cast<std::size_t>(i)]);
    rho.append(rs.polar[static_cast<std::size_t>(i)].rho);
    phi.append(rs.polar[static_cast<std::size_t>(i)].phi);
  }
  py::dict d;
  d["roots"] = roots;
  d["residuals"] = residuals;
  d["rho"] = rho;
  d["phi"] = phi;
  d["iterations"] = rs.source.iterations;
  d["max_residual"] = rs.source.max_residual;
  d["converged"] = rs.source.converged;
  return d;
}

py::object check_obj(const CheckOutcome& c) {
  if (!c.checked) return py::none();
  return py::bool_(c.ok);
}

py::dict analysis_dict(const AnalysisReport& r) {
  py::dict d;
  d["n"] = r.spec.n;
  d["a"] = r.spec.a;
  d["k"] = r.spec.k;
  d["nu"] = r.nu;
  d["dead_band"] = r.dead_band_roots;
  d["rate"] = r.rate;
  d["mahler"] = r.mahler;
  d["house"] = r.house;
  d["alpha"] = r.alpha;
  d["beta"] = r.beta;
  d["gamma"] = r.gamma ? py::object(py::make_tuple(r.gamma->first, r.gamma->second))
                       : py::object(py::none());
  py::dict checks;
  checks["containment"] = check_obj(r.containment);
  checks["monotone"] = r.monotone_ok;
  checks["equispaced"] = check_obj(r.equispaced);
  checks["annulus"] = check_obj(r.annulus);
  checks["trig_residuals"] = check_obj(r.trig_residuals);
  checks["incidence"] = check_obj(r.incidence);
  checks["discrepancy"] = r.discrepancy.ok;
  d["checks"] = checks;
  d["max_incidence_error"] = r.max_incidence_error;
  d["max_trig_residual"] = r.max_trig_residual;
  py::dict disc;
  disc["count"] = r.discrepancy.count;
  disc["expected"] = r.discrepancy.expected;
  disc["deviation"] = r.discrepancy.deviation;
  disc["bound"] = r.discrepancy.bound;
  d["discrepancy"] = disc;
  d["all_passed"] = r.all_passed();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Roots, Mahler measures, and limit laws of x^n - a x^k - 1";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ValidationError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const NumericalError& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    }
  });

  m.def(
      "solve",
      [](int n, double a, int k, double residual_tolerance) {
        return root_set_dict(solve(TrinomialSpec{n, a, k}, solver_config(residual_tolerance)));
      },
      py::arg("n"), py::arg("a"), py::arg("k") = 1,
      py::arg("residual_tolerance") = 1e-12,
      "All roots of x^n - a x^k - 1 with certified residuals");

  m.def(
      "solve_poly",
      [](const std::vector<double>& coeffs, double residual_tolerance) {
        return root_set_dict(solve(Polynomial(coeffs), solver_config(residual_tolerance)));
      },
      py::arg("coeffs"), py::arg("residual_tolerance") = 1e-12,
      "All roots of a real polynomial, coefficients highest first");

  m.def(
      "analyze",
      [](int n, double a, int k, double classify_tol) {
        AnalysisOptions opts;
        opts.unit_circle_tolerance = classify_tol;
        return analysis_dict(analyze(TrinomialSpec{n, a, k}, opts));
      },
      py::arg("n"), py::arg("a"), py::arg("k") = 1, py::arg("classify_tol") = 1e-10,
      "Counts, measures, and every structural check defined for (n, a, k)");

  m.def(
      "mahler_measure",
      [](int n, double a, int k) { return mahler_measure(solve(TrinomialSpec{n, a, k})); },
      py::arg("n"), py::arg("a"), py::arg("k") = 1);

  m.def(
      "house",
      [](int n, double a, int k) { return house(solve(TrinomialSpec{n, a, k})); },
      py::arg("n"), py::arg("a"), py::arg("k") = 1);

  m.def(
      "count_outside",
      [](int n, double a, int k, double tol) {
        const OutsideCount oc = count_outside_unit(solve(TrinomialSpec{n, a, k}), tol);
        return py::make_tuple(oc.nu, oc.dead_band);
      },
      py::arg("n"), py::arg("a"), py::arg("k") = 1, py::arg("tol") = 1e-10,
      "(outside count, dead-band count) against the unit circle");

  m.def(
      "brackets",
      [](int n, double a, int k) {
        const TrinomialSpec spec{n, a, k};
        py::dict d;
        d["alpha"] = bracket_alpha(spec);
        d["beta"] = bracket_beta(spec);
        py::object gamma = py::none();
        if (k == 1 && a > 1.0 && a <= 2.0) {
          if (const auto g = bracket_gamma(spec)) {
            gamma = py::make_tuple(g->first, g->second);
          }
        }
        d["gamma"] = gamma;
        return d;
      },
      py::arg("n"), py::arg("a"), py::arg("k") = 1,
      "Real modulus brackets: alpha, beta, and the annulus pair when defined");

  m.def(
      "exceptional_root",
      [](int n, double a) -> py::object {
        const auto r = exceptional_root(TrinomialSpec{n, a, 1});
        if (!r) return py::none();
        return py::float_(*r);
      },
      py::arg("n"), py::arg("a"), "The real root near -1/a, when it exists");

  m.def(
      "limacon_curve",
      [](int n, double a, int k, int samples) {
        std::vector<std::pair<double, double>> out;
        for (const PolarRoot& p : limacon_curve(TrinomialSpec{n, a, k}, samples)) {
          out.emplace_back(p.phi, p.rho);
        }
        return out;
      },
      py::arg("n"), py::arg("a"), py::arg("k") = 1, py::arg("samples") = 512,
      "(phi, rho) samples of the modulus curve through the roots");

  m.def("rate_limit", &rate_limit, py::arg("a"),
        "Limit of the outside-rate nu/n as n grows");
  m.def("measure_limit_quadrature", &measure_limit_quadrature, py::arg("a"),
        py::arg("tol") = 1e-12, "Mahler measure limit by adaptive quadrature");
  m.def("measure_limit_dilog", &measure_limit_maillot, py::arg("a"),
        "Mahler measure limit in the Clausen/dilogarithm closed form");
  m.def("clausen2", &clausen2, py::arg("theta"), "Clausen function Cl2");
  m.def(
      "measure_limit_extended",
      [](std::complex<double> a) {
        const ExtendedLimit e = measure_limit_extended(a);
        py::dict d;
        d["value"] = e.value;
        d["degenerate"] = e.degenerate;
        d["angle_assumed_rational"] = e.angle_assumed_rational;
        return d;
      },
      py::arg("a"), "Measure limit for complex a: |a| > 2 exact, else via |a|");
}
