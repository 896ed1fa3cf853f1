#include "trinomial/report.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <mutex>
#include <thread>

#include "json.hpp"
#include "trinomial/errors.hpp"

namespace trinomial {

namespace {

using nlohmann::json;

// Cells are independent; fill preallocated slots so output order never
// depends on scheduling. The first worker exception is rethrown after join.
template <typename Fn>
void parallel_cells(std::size_t count, const Fn& fn) {
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min(hw, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  std::exception_ptr first_error;
  auto drain = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(drain);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

void validate_grid(const GridJob& job) {
  if (job.n_values.empty()) throw ValidationError("at least one n is required");
  if (job.a_values.empty()) throw ValidationError("at least one a is required");
  for (int n : job.n_values) TrinomialSpec{n, 1.0, job.k}.validate();
  for (double a : job.a_values) {
    if (!std::isfinite(a) || !(a > 0.0)) {
      throw ValidationError("grid values of a must be finite and > 0");
    }
  }
  if (!std::isfinite(job.classify_tol) || job.classify_tol < 0.0) {
    throw ValidationError("classification tolerance must be finite and >= 0");
  }
  if (!std::isfinite(job.quad_tol) || !(job.quad_tol > 0.0)) {
    throw ValidationError("quadrature tolerance must be finite and > 0");
  }
}

std::string fmt(double v, bool full_precision, int decimals) {
  return full_precision ? format_double(v) : format_fixed(v, decimals);
}

const char* outcome_cell(const CheckOutcome& c) {
  if (!c.checked) return "skip";
  return c.ok ? "pass" : "fail";
}

json check_json(const CheckOutcome& c) {
  if (!c.checked) return nullptr;
  return c.ok;
}

json polar_json(const std::vector<PolarRoot>& pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back({{"phi", p.phi}, {"rho", p.rho}});
  return arr;
}

const char* classification_of(double rho, double tol) {
  if (std::abs(rho - 1.0) <= tol) return "band";
  return rho > 1.0 ? "outside" : "inside";
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return std::string(buf);
}

TableResult run_table(const GridJob& job) {
  validate_grid(job);
  TableResult result;
  result.job = job;

  const std::size_t na = job.a_values.size();
  const std::size_t nn = job.n_values.size();
  result.rows.resize(na);
  for (std::size_t i = 0; i < na; ++i) {
    TableRow& row = result.rows[i];
    row.a = job.a_values[i];
    row.rates.assign(nn, 0.0);
    row.mahler.assign(nn, 0.0);
    if (row.a <= 2.0) {
      row.rate_limit = rate_limit(row.a);
      row.measure_limit = measure_limit_quadrature(row.a, job.quad_tol);
    } else {
      row.rate_limit = std::numeric_limits<double>::quiet_NaN();
      row.measure_limit = measure_limit_extended({row.a, 0.0}).value;
    }
  }

  parallel_cells(na * nn, [&](std::size_t cell) {
    const std::size_t i = cell / nn;
    const std::size_t j = cell % nn;
    const TrinomialSpec spec{job.n_values[j], job.a_values[i], job.k};
    const RootSet rs = solve(spec);
    const OutsideCount oc = count_outside_unit(rs, job.classify_tol);
    result.rows[i].rates[j] = static_cast<double>(oc.nu) / spec.n;
    result.rows[i].mahler[j] = mahler_measure(rs);
  });
  return result;
}

std::string render_table(const TableResult& result) {
  const GridJob& job = result.job;
  if (job.format == OutputFormat::json) {
    json doc;
    doc["k"] = job.k;
    doc["n"] = job.n_values;
    doc["classify_tol"] = job.classify_tol;
    json rows = json::array();
    for (const TableRow& r : result.rows) {
      rows.push_back({{"a", r.a},
                      {"rate", r.rates},
                      {"rate_limit", std::isnan(r.rate_limit) ? json(nullptr) : json(r.rate_limit)},
                      {"mahler", r.mahler},
                      {"measure_limit", r.measure_limit}});
    }
    doc["rows"] = rows;
    return doc.dump(2) + "\n";
  }

  std::string out = "a";
  for (int n : job.n_values) out += ",nu_rate_n" + std::to_string(n);
  out += ",rate_limit";
  for (int n : job.n_values) out += ",mahler_n" + std::to_string(n);
  out += ",measure_limit\n";
  const bool fp = job.full_precision;
  for (const TableRow& r : result.rows) {
    out += format_double(r.a);
    for (double v : r.rates) out += "," + fmt(v, fp, 5);
    out += ",";
    if (!std::isnan(r.rate_limit)) out += fmt(r.rate_limit, fp, 5);
    for (double v : r.mahler) out += "," + fmt(v, fp, 7);
    out += "," + fmt(r.measure_limit, fp, 7) + "\n";
  }
  return out;
}

VerifyResult run_verify(const GridJob& job) {
  validate_grid(job);
  VerifyResult result;
  result.job = job;

  const std::size_t na = job.a_values.size();
  const std::size_t nn = job.n_values.size();
  result.rows.resize(na * nn);

  AnalysisOptions opts;
  opts.unit_circle_tolerance = job.classify_tol;
  parallel_cells(na * nn, [&](std::size_t cell) {
    const std::size_t i = cell / nn;
    const std::size_t j = cell % nn;
    const TrinomialSpec spec{job.n_values[j], job.a_values[i], job.k};
    result.rows[cell].report = analyze(spec, opts);
  });

  for (const VerifyRow& row : result.rows) {
    result.all_passed = result.all_passed && row.report.all_passed();
    result.dead_band_total += row.report.dead_band_roots;
  }
  return result;
}

std::string render_verify(const VerifyResult& result) {
  if (result.job.format == OutputFormat::json) {
    json doc;
    doc["k"] = result.job.k;
    doc["classify_tol"] = result.job.classify_tol;
    json rows = json::array();
    for (const VerifyRow& row : result.rows) {
      const AnalysisReport& r = row.report;
      json item{{"n", r.spec.n},
                {"a", r.spec.a},
                {"k", r.spec.k},
                {"nu", r.nu},
                {"dead_band", r.dead_band_roots},
                {"rate", r.rate},
                {"mahler", r.mahler},
                {"house", r.house},
                {"alpha", r.alpha},
                {"beta", r.beta},
                {"gamma", r.gamma ? json({r.gamma->first, r.gamma->second}) : json(nullptr)},
                {"checks",
                 {{"containment", check_json(r.containment)},
                  {"monotone", r.monotone_ok},
                  {"equispaced", check_json(r.equispaced)},
                  {"annulus", check_json(r.annulus)},
                  {"trig_residuals", check_json(r.trig_residuals)},
                  {"incidence", check_json(r.incidence)},
                  {"discrepancy", r.discrepancy.ok}}},
                {"max_incidence_error", r.max_incidence_error},
                {"max_trig_residual", r.max_trig_residual},
                {"discrepancy",
                 {{"count", r.discrepancy.count},
                  {"expected", r.discrepancy.expected},
                  {"deviation", r.discrepancy.deviation},
                  {"bound", r.discrepancy.bound}}},
                {"all_passed", r.all_passed()}};
      rows.push_back(std::move(item));
    }
    doc["rows"] = rows;
    doc["all_passed"] = result.all_passed;
    doc["dead_band_total"] = result.dead_band_total;
    return doc.dump(2) + "\n";
  }

  std::string out =
      "n,a,k,nu,dead_band,rate,mahler,house,alpha,beta,gamma1,gamma2,"
      "containment,monotone,equispaced,annulus,trig_residuals,incidence,"
      "discrepancy,max_incidence_error,max_trig_residual,all_passed\n";
  for (const VerifyRow& row : result.rows) {
    const AnalysisReport& r = row.report;
    out += std::to_string(r.spec.n) + "," + format_double(r.spec.a) + "," +
           std::to_string(r.spec.k) + "," + std::to_string(r.nu) + "," +
           std::to_string(r.dead_band_roots) + "," + format_double(r.rate) + "," +
           format_double(r.mahler) + "," + format_double(r.house) + "," +
           format_double(r.alpha) + "," + format_double(r.beta) + ",";
    if (r.gamma) {
      out += format_double(r.gamma->first) + "," + format_double(r.gamma->second);
    } else {
      out += ",";
    }
    out += std::string(",") + outcome_cell(r.containment) + "," +
           (r.monotone_ok ? "pass" : "fail") + "," + outcome_cell(r.equispaced) + "," +
           outcome_cell(r.annulus) + "," + outcome_cell(r.trig_residuals) + "," +
           outcome_cell(r.incidence) + "," + (r.discrepancy.ok ? "pass" : "fail") + "," +
           format_double(r.max_incidence_error) + "," +
           format_double(r.max_trig_residual) + "," +
           (r.all_passed() ? "pass" : "fail") + "\n";
  }
  return out;
}

RootsResult run_roots(const TrinomialSpec& spec, double classify_tol, int curve_samples) {
  spec.validate();
  if (!(spec.a > 0.0)) throw ValidationError("roots dump requires a > 0");
  RootsResult result;
  result.spec = spec;
  result.classify_tol = classify_tol;
  result.roots = solve(spec);
  result.outside = count_outside_unit(result.roots, classify_tol);
  result.curve = limacon_curve(spec, curve_samples);
  result.circle_samples = curve_samples;
  return result;
}

std::string render_roots(const RootsResult& result, OutputFormat format, bool full_precision) {
  (void)full_precision;  // root dumps are always shortest round-trip
  const RootSet& rs = result.roots;
  if (format == OutputFormat::json) {
    json doc;
    doc["n"] = result.spec.n;
    doc["a"] = result.spec.a;
    doc["k"] = result.spec.k;
    doc["classify_tol"] = result.classify_tol;
    doc["nu"] = result.outside.nu;
    doc["dead_band"] = result.outside.dead_band;
    doc["solver"] = {{"iterations", rs.source.iterations},
                     {"tolerance", rs.source.tolerance},
                     {"max_residual", rs.source.max_residual},
                     {"converged", rs.source.converged}};
    json roots = json::array();
    for (int i = 0; i < rs.degree(); ++i) {
      roots.push_back({{"re", rs.roots[i].real()},
                       {"im", rs.roots[i].imag()},
                       {"rho", rs.polar[i].rho},
                       {"phi", rs.polar[i].phi},
                       {"residual", rs.residuals[i]},
                       {"classification", classification_of(rs.polar[i].rho, result.classify_tol)}});
    }
    doc["roots"] = roots;
    doc["curve"] = polar_json(result.curve);
    json circle = json::array();
    for (const auto& p : result.curve) circle.push_back({{"phi", p.phi}, {"rho", 1.0}});
    doc["circle"] = circle;
    return doc.dump(2) + "\n";
  }

  std::string out = "kind,re,im,rho,phi,residual,classification\n";
  for (int i = 0; i < rs.degree(); ++i) {
    out += "root," + format_double(rs.roots[i].real()) + "," +
           format_double(rs.roots[i].imag()) + "," + format_double(rs.polar[i].rho) + "," +
           format_double(rs.polar[i].phi) + "," + format_double(rs.residuals[i]) + "," +
           classification_of(rs.polar[i].rho, result.classify_tol) + "\n";
  }
  for (const auto& p : result.curve) {
    out += "curve," + format_double(p.rho * std::cos(p.phi)) + "," +
           format_double(p.rho * std::sin(p.phi)) + "," + format_double(p.rho) + "," +
           format_double(p.phi) + ",,\n";
  }
  for (const auto& p : result.curve) {
    out += "circle," + format_double(std::cos(p.phi)) + "," + format_double(std::sin(p.phi)) +
           ",1," + format_double(p.phi) + ",,\n";
  }
  return out;
}

LimitsResult run_limits(const std::vector<double>& a_values, double tol) {
  if (a_values.empty()) throw ValidationError("at least one a is required");
  LimitsResult result;
  result.rows.reserve(a_values.size());
  for (double a : a_values) result.rows.push_back(limit_report(a, tol));
  return result;
}

std::string render_limits(const LimitsResult& result, OutputFormat format, bool full_precision) {
  (void)full_precision;  // limit rows are always shortest round-trip
  if (format == OutputFormat::json) {
    json rows = json::array();
    for (const LimitReport& r : result.rows) {
      rows.push_back({{"a", r.a},
                      {"rate_limit", r.rate},
                      {"measure_quadrature", r.measure_quadrature},
                      {"measure_dilog", r.measure_dilog},
                      {"cross_delta", r.cross_delta},
                      {"quadrature_panels", r.quadrature_panels},
                      {"clausen_terms", r.clausen_terms}});
    }
    return json{{"rows", rows}}.dump(2) + "\n";
  }
  std::string out =
      "a,rate_limit,measure_quadrature,measure_dilog,cross_delta,"
      "quadrature_panels,clausen_terms\n";
  for (const LimitReport& r : result.rows) {
    out += format_double(r.a) + "," + format_double(r.rate) + "," +
           format_double(r.measure_quadrature) + "," + format_double(r.measure_dilog) + "," +
           format_double(r.cross_delta) + "," + std::to_string(r.quadrature_panels) + "," +
           std::to_string(r.clausen_terms) + "\n";
  }
  return out;
}

}  // namespace trinomial
