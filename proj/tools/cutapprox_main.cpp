// Command-line surface for the cell-under-test distribution toolkit.
// Every subcommand is a thin adapter over the library: numbers printed
// here are bit-identical to direct library calls.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cutapprox/analysis.hpp"
#include "cutapprox/approximation.hpp"
#include "cutapprox/exact_cut.hpp"
#include "cutapprox/monte_carlo.hpp"
#include "cutapprox/text_io.hpp"

namespace {

using namespace cutapprox;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

struct CommonOpts {
  double alpha = 4.7;
  double beta = 0.3;
  double lambda = 1000.0;
  double mu = 1.0;
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_subdivisions = 200;
  std::string out;
  std::string format;

  Scenario scenario() const { return {alpha, beta, lambda, mu}; }
  QuadratureConfig quadrature() const {
    QuadratureConfig cfg;
    cfg.abs_tol = abs_tol;
    cfg.rel_tol = rel_tol;
    cfg.max_subdivisions = max_subdivisions;
    return cfg;
  }
};

void add_scenario_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--alpha", opts.alpha, "Pareto shape");
  cmd->add_option("--beta", opts.beta, "Pareto scale");
  cmd->add_option("--lambda", opts.lambda, "reciprocal of mean signal power");
  cmd->add_option("--mu", opts.mu, "reciprocal of mean speckle intensity");
}

void add_quadrature_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--abs-tol", opts.abs_tol, "quadrature absolute tolerance");
  cmd->add_option("--rel-tol", opts.rel_tol, "quadrature relative tolerance");
  cmd->add_option("--max-subdivisions", opts.max_subdivisions, "adaptive subdivision budget");
}

// "lo:hi:count" for the grid mini-language.
struct GridToken {
  double lo, hi;
  int count;
};

GridToken parse_grid_token(const std::string& text, const std::string& flag) {
  GridToken tok{};
  char c1, c2;
  std::istringstream is(text);
  if (!(is >> tok.lo >> c1 >> tok.hi >> c2 >> tok.count) || c1 != ':' || c2 != ':' || !is.eof())
    throw std::invalid_argument(flag + ": expected lo:hi:count, got '" + text + "'");
  if (tok.count < 1) throw std::invalid_argument(flag + ": count must be >= 1");
  if (!(tok.lo <= tok.hi)) throw std::invalid_argument(flag + ": lo must be <= hi");
  return tok;
}

int write_text(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return std::cout.good() ? kExitOk : kExitIo;
  }
  std::ofstream os(path);
  if (!os) {
    std::cerr << "cannot open output file: " << path << "\n";
    return kExitIo;
  }
  os << content;
  os.flush();
  if (!os.good()) {
    std::cerr << "write failed: " << path << "\n";
    return kExitIo;
  }
  return kExitOk;
}

// ---- cdf ----

struct CdfOpts {
  CommonOpts common;
  std::string grid_q;
  std::string grid_t;
};

int run_cdf(const CdfOpts& o) {
  const Scenario s = o.common.scenario();
  s.validate();
  const QuadratureConfig cfg = o.common.quadrature();
  cfg.validate();

  GridSpec grid;
  if (!o.grid_q.empty() && !o.grid_t.empty())
    throw std::invalid_argument("--grid-q and --grid-t are mutually exclusive");
  if (!o.grid_t.empty()) {
    const GridToken tok = parse_grid_token(o.grid_t, "--grid-t");
    if (!(tok.lo >= 0.0)) throw std::invalid_argument("--grid-t: lo must be >= 0");
    std::vector<double> ts(tok.count);
    for (int i = 0; i < tok.count; ++i)
      ts[i] = (tok.count == 1) ? tok.lo
                               : tok.lo + (tok.hi - tok.lo) * static_cast<double>(i) / (tok.count - 1);
    grid = GridSpec::explicit_points(std::move(ts));
  } else {
    GridToken tok{0.001, 0.999, 201};
    if (!o.grid_q.empty()) tok = parse_grid_token(o.grid_q, "--grid-q");
    if (!(tok.lo >= 0.0) || !(tok.hi < 1.0))
      throw std::invalid_argument("--grid-q: quantiles must lie in [0, 1)");
    grid = GridSpec::quantiles(tok.lo, tok.hi, tok.count, GridSpec::Base::effective);
  }

  const std::vector<double> ts = grid.materialize(s);
  const ExactCutEvaluator eval(s, cfg);

  struct Row {
    double t, exact, a_exp, a_pareto, lim, err;
    bool failed;
  };
  std::vector<Row> rows(ts.size());
  bool any_failed = false;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    Row& r = rows[i];
    r.t = ts[i];
    r.a_exp = approx_cdf_exp(ts[i], s);
    r.a_pareto = approx_cdf_pareto(ts[i], s);
    r.lim = limit_cdf(ts[i], s);
    try {
      const Estimate e = eval.cdf(ts[i]);
      r.exact = e.value;
      r.err = e.error;
      r.failed = false;
    } catch (const QuadratureError&) {
      r.exact = std::numeric_limits<double>::quiet_NaN();
      r.err = std::numeric_limits<double>::quiet_NaN();
      r.failed = true;
      any_failed = true;
    }
  }

  std::ostringstream os;
  if (o.common.format == "json") {
    os << "{\n  \"meta\": {\"alpha\": " << format_g17(s.alpha) << ", \"beta\": " << format_g17(s.beta)
       << ", \"lambda\": " << format_g17(s.lambda) << ", \"mu\": " << format_g17(s.mu)
       << ", \"grid\": \"" << json_escape(grid.describe()) << "\"},\n  \"rows\": [\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Row& r = rows[i];
      os << "    {\"t\": " << format_g17(r.t) << ", \"exact\": " << format_g17_or(r.exact, "null")
         << ", \"approx_exp\": " << format_g17(r.a_exp)
         << ", \"approx_pareto\": " << format_g17(r.a_pareto)
         << ", \"limit\": " << format_g17(r.lim)
         << ", \"exact_error_estimate\": " << format_g17_or(r.err, "null");
      if (any_failed) os << ", \"status\": \"" << (r.failed ? "quadrature_failed" : "ok") << "\"";
      os << "}" << (i + 1 < rows.size() ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
  } else {
    os << "t,exact,approx_exp,approx_pareto,limit,exact_error_estimate";
    if (any_failed) os << ",status";
    os << "\n";
    for (const Row& r : rows) {
      os << format_g17(r.t) << ',' << format_g17_or(r.exact, "") << ',' << format_g17(r.a_exp)
         << ',' << format_g17(r.a_pareto) << ',' << format_g17(r.lim) << ','
         << format_g17_or(r.err, "");
      if (any_failed) os << ',' << (r.failed ? "quadrature_failed" : "ok");
      os << '\n';
    }
  }

  const int io = write_text(o.common.out, os.str());
  if (io != kExitOk) return io;
  return any_failed ? kExitNumerical : kExitOk;
}

// ---- sample ----

struct SampleOpts {
  CommonOpts common;
  std::uint64_t seed = 1;
  std::uint64_t n = 100000;
};

int run_sample(const SampleOpts& o) {
  const Scenario s = o.common.scenario();
  s.validate();
  if (o.n < 1) throw std::invalid_argument("--n must be >= 1");

  const SampleBatch batch = sample_cut(s, o.seed, static_cast<std::size_t>(o.n));

  if (o.common.format == "bin") {
    if (o.common.out.empty()) {
      write_batch_binary(batch, std::cout);
      return std::cout.good() ? kExitOk : kExitIo;
    }
    std::ofstream os(o.common.out, std::ios::binary);
    if (!os) {
      std::cerr << "cannot open output file: " << o.common.out << "\n";
      return kExitIo;
    }
    write_batch_binary(batch, os);
    os.flush();
    return os.good() ? kExitOk : kExitIo;
  }

  std::ostringstream os;
  write_batch_csv(batch, os);
  return write_text(o.common.out, os.str());
}

// ---- compare ----

struct CompareOpts {
  CommonOpts common;
  std::uint64_t seed = 1;
  std::uint64_t n = 100000;
};

int run_compare(const CompareOpts& o) {
  const Scenario s = o.common.scenario();
  s.validate();
  if (o.n < 1) throw std::invalid_argument("--n must be >= 1");
  const QuadratureConfig cfg = o.common.quadrature();
  cfg.validate();

  const SampleBatch batch = sample_cut(s, o.seed, static_cast<std::size_t>(o.n));
  const EmpiricalCdf ecdf = EmpiricalCdf::from_batch(batch);
  const ExactCutEvaluator eval(s, cfg);
  const double ks = ks_distance(ecdf, [&](double t) { return eval.cdf(t).value; });

  const GridSpec grid = GridSpec::analysis_default();
  const double sup_pareto = sup_distance(s, CdfKind::exact, CdfKind::approx_pareto, grid, cfg);
  const double sup_exp = sup_distance(s, CdfKind::exact, CdfKind::approx_exp, grid, cfg);
  const GContext ctx = GContext::from_scenario(s);
  const double vr = validity_ratio(ctx);
  const double scr = (s.alpha > 1.0) ? scr_db(s) : std::numeric_limits<double>::quiet_NaN();

  std::ostringstream os;
  os << "{\n"
     << "  \"ks_emp_vs_exact\": " << format_g17(ks) << ",\n"
     << "  \"sup_exact_vs_pareto\": " << format_g17(sup_pareto) << ",\n"
     << "  \"sup_exact_vs_exp\": " << format_g17(sup_exp) << ",\n"
     << "  \"validity_ratio\": " << format_g17(vr) << ",\n"
     << "  \"scr_db\": " << format_g17_or(scr, "null") << ",\n"
     << "  \"n\": " << o.n << ",\n"
     << "  \"seed\": " << o.seed << "\n"
     << "}\n";
  return write_text(o.common.out, os.str());
}

// ---- sweep ----

struct SweepOpts {
  CommonOpts common;
  std::string ratios = "0.1,1,10,100,1000";
};

std::vector<double> parse_ratio_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    double v;
    try {
      v = std::stod(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("--ratios: cannot parse '" + item + "'");
    }
    if (pos != item.size()) throw std::invalid_argument("--ratios: cannot parse '" + item + "'");
    out.push_back(v);
  }
  return out;
}

int run_sweep(const SweepOpts& o) {
  const Scenario base = o.common.scenario();
  base.validate();
  const QuadratureConfig cfg = o.common.quadrature();

  const std::vector<double> ratios = parse_ratio_list(o.ratios);
  const ValidityReport report = sweep(base, ratios, cfg);

  const std::string content =
      (o.common.format == "csv") ? report_to_csv(report) : report_to_json(report);
  const int io = write_text(o.common.out, content);
  if (io != kExitOk) return io;

  // Verdict lines: stdout when the report went to a file, stderr otherwise.
  std::ostream& vs = o.common.out.empty() ? std::cerr : std::cout;
  std::size_t ok_rows = 0;
  for (const ValidityRow& row : report.rows) {
    if (!row.error.empty()) {
      vs << "lambda/mu=" << format_g17(row.lambda_over_mu) << " FAILED: " << row.error << "\n";
      continue;
    }
    ++ok_rows;
    vs << "lambda/mu=" << format_g17(row.lambda_over_mu)
       << " sup_dist_pareto=" << format_g17(row.sup_dist_pareto)
       << " scr_db=" << format_g17_or(row.scr_db, "n/a") << ' '
       << (row.valid ? "VALID" : "INVALID") << "\n";
  }
  return ok_rows > 0 ? kExitOk : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distribution of the radar cell under test: exact quadrature, "
               "Pareto-type approximations, Monte Carlo validation.\n"
               "Set CUTAPPROX_THREADS to cap worker threads (0 = auto)."};
  app.require_subcommand(1);

  CdfOpts cdf_opts;
  CLI::App* cdf_cmd = app.add_subcommand("cdf", "Tabulate exact and approximate CDFs over a grid");
  add_scenario_flags(cdf_cmd, cdf_opts.common);
  add_quadrature_flags(cdf_cmd, cdf_opts.common);
  cdf_cmd->add_option("--grid-q", cdf_opts.grid_q,
                      "quantile-spaced grid lo:hi:count (effective-Pareto quantiles, default 0.001:0.999:201)");
  cdf_cmd->add_option("--grid-t", cdf_opts.grid_t, "linear grid lo:hi:count in intensity units");
  cdf_cmd->add_option("--out", cdf_opts.common.out, "output path (default stdout)");
  cdf_opts.common.format = "csv";
  cdf_cmd->add_option("--format", cdf_opts.common.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  SampleOpts sample_opts;
  CLI::App* sample_cmd = app.add_subcommand("sample", "Draw Monte Carlo CUT intensities");
  add_scenario_flags(sample_cmd, sample_opts.common);
  sample_cmd->add_option("--seed", sample_opts.seed, "RNG seed");
  sample_cmd->add_option("--n", sample_opts.n, "number of draws");
  sample_cmd->add_option("--out", sample_opts.common.out, "output path (default stdout)");
  sample_opts.common.format = "csv";
  sample_cmd->add_option("--format", sample_opts.common.format, "csv or bin (little-endian doubles)")
      ->check(CLI::IsMember({"csv", "bin"}));

  CompareOpts compare_opts;
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "Empirical vs exact vs approximations, JSON summary");
  add_scenario_flags(compare_cmd, compare_opts.common);
  add_quadrature_flags(compare_cmd, compare_opts.common);
  compare_cmd->add_option("--seed", compare_opts.seed, "RNG seed");
  compare_cmd->add_option("--n", compare_opts.n, "number of draws");
  compare_cmd->add_option("--out", compare_opts.common.out, "output path (default stdout)");
  compare_opts.common.format = "json";
  compare_cmd->add_option("--format", compare_opts.common.format, "json")
      ->check(CLI::IsMember({"json"}));

  SweepOpts sweep_opts;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Validity sweep over lambda/mu ratios, report + verdicts");
  add_scenario_flags(sweep_cmd, sweep_opts.common);
  add_quadrature_flags(sweep_cmd, sweep_opts.common);
  sweep_cmd->add_option("--ratios", sweep_opts.ratios, "comma-separated lambda/mu ratios");
  sweep_cmd->add_option("--out", sweep_opts.common.out, "output path (default stdout)");
  sweep_opts.common.format = "json";
  sweep_cmd->add_option("--format", sweep_opts.common.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (cdf_cmd->parsed()) return run_cdf(cdf_opts);
    if (sample_cmd->parsed()) return run_sample(sample_opts);
    if (compare_cmd->parsed()) return run_compare(compare_opts);
    if (sweep_cmd->parsed()) return run_sweep(sweep_opts);
  } catch (const QuadratureError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o failure: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitConfig;
}
