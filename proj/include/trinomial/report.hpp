#pragma once

#include <string>
#include <vector>

#include "trinomial/analysis.hpp"
#include "trinomial/limits.hpp"

namespace trinomial {

enum class OutputFormat { csv, json };

// One reproducible grid run. Cells are independent and evaluated concurrently;
// rows are always emitted in (a, n) order, so re-runs are byte-identical.
struct GridJob {
  std::vector<int> n_values;
  std::vector<double> a_values;
  int k = 1;
  double classify_tol = 1e-10;
  double quad_tol = 1e-12;
  bool full_precision = false;
  OutputFormat format = OutputFormat::csv;
};

struct TableRow {
  double a = 0.0;
  std::vector<double> rates;    // nu/n per n, in n_values order
  double rate_limit = 0.0;      // NaN when a > 2 (undefined)
  std::vector<double> mahler;   // M per n
  double measure_limit = 0.0;   // quadrature; extended reduction for a > 2
};

struct TableResult {
  GridJob job;
  std::vector<TableRow> rows;
};

TableResult run_table(const GridJob& job);
std::string render_table(const TableResult& result);

struct VerifyRow {
  AnalysisReport report;
};

struct VerifyResult {
  GridJob job;
  std::vector<VerifyRow> rows;   // (a, n) order
  bool all_passed = true;
  int dead_band_total = 0;
};

VerifyResult run_verify(const GridJob& job);
std::string render_verify(const VerifyResult& result);

struct RootsResult {
  TrinomialSpec spec{};
  RootSet roots;
  OutsideCount outside;
  std::vector<PolarRoot> curve;
  int circle_samples = 0;
  double classify_tol = 1e-10;
};

RootsResult run_roots(const TrinomialSpec& spec, double classify_tol, int curve_samples);
std::string render_roots(const RootsResult& result, OutputFormat format, bool full_precision);

struct LimitsResult {
  std::vector<LimitReport> rows;
};

LimitsResult run_limits(const std::vector<double>& a_values, double tol);
std::string render_limits(const LimitsResult& result, OutputFormat format, bool full_precision);

// Shortest round-trip formatting (std::to_chars); fixed-precision helper.
std::string format_double(double v);
std::string format_fixed(double v, int decimals);

}  // namespace trinomial
