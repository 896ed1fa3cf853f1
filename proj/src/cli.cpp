#include "trinomial/cli.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "trinomial/report.hpp"

namespace trinomial {

namespace {

double parse_number(const std::string& s) {
  if (s.empty()) throw ValidationError("empty number");
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
    throw ValidationError("invalid number: '" + s + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = text.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(text.substr(pos));
      return out;
    }
    out.push_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
}

// Grid values snap to 12 significant digits so accumulated step error cannot
// push an endpoint over a domain boundary (0.1 * 20 must be exactly 2).
double snap_decimal(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::vector<double> parse_a_values(const std::string& text) {
  if (text.rfind("range:", 0) == 0) {
    const auto parts = split(text.substr(6), ':');
    if (parts.size() != 3) {
      throw ValidationError("range syntax is range:start:stop:step");
    }
    const double start = parse_number(parts[0]);
    const double stop = parse_number(parts[1]);
    const double step = parse_number(parts[2]);
    if (!(step > 0.0)) throw ValidationError("range step must be > 0");
    if (stop < start) throw ValidationError("range stop must be >= start");
    const double span = (stop - start) / step;
    if (span > 1e6) throw ValidationError("range produces too many values");
    const int count = static_cast<int>(std::floor(span + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(snap_decimal(start + i * step));
    return out;
  }
  std::vector<double> out;
  for (const std::string& tok : split(text, ',')) out.push_back(parse_number(tok));
  return out;
}

std::vector<int> parse_n_values(const std::string& text) {
  std::vector<int> out;
  for (const std::string& tok : split(text, ',')) {
    const double v = parse_number(tok);
    const int n = static_cast<int>(v);
    if (v != n) throw ValidationError("n must be an integer: '" + tok + "'");
    out.push_back(n);
  }
  return out;
}

void write_output(const std::string& payload, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot open output file: " + path);
  f << payload;
  f.flush();
  if (!f) throw std::runtime_error("failed writing output file: " + path);
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw ValidationError("format must be csv or json");
}

struct CommonArgs {
  std::string n_arg;
  std::string a_arg;
  int k = 1;
  double tol = 1e-10;
  std::string out_path;
  std::string format = "csv";
  bool full_precision = false;
};

void add_output_flags(CLI::App* cmd, CommonArgs& c) {
  cmd->add_option("--out", c.out_path, "Output path ('-' or empty for stdout)");
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_flag("--full-precision", c.full_precision,
                "Shortest round-trip floats instead of table precision");
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Trinomial root geometry: grids, verifiers, and limit laws"};
  app.set_version_flag("--version", "trinomial 0.1.0");
  app.require_subcommand(1);

  CommonArgs table_args;
  table_args.n_arg = "100,150";
  table_args.a_arg = "range:0.1:2.0:0.1";
  CLI::App* table_cmd =
      app.add_subcommand("table", "Outside-rate and Mahler measure grid with limit columns");
  table_cmd->add_option("--n", table_args.n_arg, "Degrees, comma separated")
      ->capture_default_str();
  table_cmd->add_option("--a", table_args.a_arg, "Coefficients: list or range:start:stop:step")
      ->capture_default_str();
  table_cmd->add_option("--k", table_args.k, "Middle exponent")
      ->check(CLI::IsMember({1, 2, 4}))
      ->capture_default_str();
  table_cmd->add_option("--tol", table_args.tol, "Unit-circle classification dead band")
      ->capture_default_str();
  add_output_flags(table_cmd, table_args);

  CommonArgs roots_args;
  int roots_n = 0;
  double roots_a = 0.0;
  int roots_samples = 512;
  CLI::App* roots_cmd =
      app.add_subcommand("roots", "Root dump for one (n, a, k) with curve samples");
  roots_cmd->add_option("--n", roots_n, "Degree")->required();
  roots_cmd->add_option("--a", roots_a, "Coefficient")->required();
  roots_cmd->add_option("--k", roots_args.k, "Middle exponent")
      ->check(CLI::IsMember({1, 2, 4}))
      ->capture_default_str();
  roots_cmd->add_option("--tol", roots_args.tol, "Unit-circle classification dead band")
      ->capture_default_str();
  roots_cmd->add_option("--samples", roots_samples, "Curve sample count")
      ->capture_default_str();
  add_output_flags(roots_cmd, roots_args);

  CommonArgs verify_args;
  verify_args.n_arg = "24,100,150,300";
  verify_args.a_arg = "range:0.1:2.0:0.1";
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run every structural check over a grid; exit 3 on failure");
  verify_cmd->add_option("--n", verify_args.n_arg, "Degrees, comma separated")
      ->capture_default_str();
  verify_cmd->add_option("--a", verify_args.a_arg, "Coefficients: list or range:start:stop:step")
      ->capture_default_str();
  verify_cmd->add_option("--k", verify_args.k, "Middle exponent")
      ->check(CLI::IsMember({1, 2, 4}))
      ->capture_default_str();
  verify_cmd->add_option("--tol", verify_args.tol, "Unit-circle classification dead band")
      ->capture_default_str();
  add_output_flags(verify_cmd, verify_args);

  CommonArgs limits_args;
  limits_args.a_arg = "range:0.1:2.0:0.1";
  limits_args.tol = 1e-12;
  CLI::App* limits_cmd =
      app.add_subcommand("limits", "Closed-form rate plus both measure-limit evaluations");
  limits_cmd->add_option("--a", limits_args.a_arg, "Coefficients: list or range:start:stop:step")
      ->capture_default_str();
  limits_cmd->add_option("--tol", limits_args.tol, "Quadrature tolerance")
      ->capture_default_str();
  add_output_flags(limits_cmd, limits_args);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("trinomial");
  for (const std::string& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (table_cmd->parsed()) {
      GridJob job;
      job.n_values = parse_n_values(table_args.n_arg);
      job.a_values = parse_a_values(table_args.a_arg);
      job.k = table_args.k;
      job.classify_tol = table_args.tol;
      job.full_precision = table_args.full_precision;
      job.format = parse_format(table_args.format);
      write_output(render_table(run_table(job)), table_args.out_path);
      return 0;
    }
    if (roots_cmd->parsed()) {
      const TrinomialSpec spec{roots_n, roots_a, roots_args.k};
      const RootsResult result = run_roots(spec, roots_args.tol, roots_samples);
      write_output(render_roots(result, parse_format(roots_args.format),
                                roots_args.full_precision),
                   roots_args.out_path);
      return 0;
    }
    if (verify_cmd->parsed()) {
      GridJob job;
      job.n_values = parse_n_values(verify_args.n_arg);
      job.a_values = parse_a_values(verify_args.a_arg);
      job.k = verify_args.k;
      job.classify_tol = verify_args.tol;
      job.full_precision = verify_args.full_precision;
      job.format = parse_format(verify_args.format);
      const VerifyResult result = run_verify(job);
      write_output(render_verify(result), verify_args.out_path);
      std::cerr << "verify: " << result.rows.size() << " cells, "
                << (result.all_passed ? "all checks passed" : "CHECK FAILURES") << ", dead-band roots: "
                << result.dead_band_total << "\n";
      return result.all_passed ? 0 : 3;
    }
    if (limits_cmd->parsed()) {
      const LimitsResult result = run_limits(parse_a_values(limits_args.a_arg), limits_args.tol);
      write_output(render_limits(result, parse_format(limits_args.format),
                                 limits_args.full_precision),
                   limits_args.out_path);
      return 0;
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace trinomial
