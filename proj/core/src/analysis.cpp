#include "cutapprox/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "cutapprox/approximation.hpp"
#include "cutapprox/parallel.hpp"
#include "cutapprox/text_io.hpp"

namespace cutapprox {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

struct RowDistances {
  double exp;
  double pareto;
  double limit;
};

// All three sup distances against the exact CDF in one grid pass.
RowDistances distances_to_exact(const Scenario& s, const GridSpec& grid,
                                const QuadratureConfig& cfg) {
  const std::vector<double> ts = grid.materialize(s);
  const ExactCutEvaluator eval(s, cfg);

  std::vector<double> exact(ts.size());
  detail::parallel_for(ts.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) exact[i] = eval.cdf(ts[i]).value;
  });

  RowDistances d{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < ts.size(); ++i) {
    d.exp = std::max(d.exp, std::fabs(exact[i] - approx_cdf_exp(ts[i], s)));
    d.pareto = std::max(d.pareto, std::fabs(exact[i] - approx_cdf_pareto(ts[i], s)));
    d.limit = std::max(d.limit, std::fabs(exact[i] - limit_cdf(ts[i], s)));
  }
  return d;
}

}  // namespace

double sup_distance(const Scenario& s, CdfKind kind_a, CdfKind kind_b, const GridSpec& grid,
                    const QuadratureConfig& cfg) {
  s.validate();
  if (kind_a == CdfKind::empirical || kind_b == CdfKind::empirical)
    throw std::invalid_argument("sup_distance: empirical curves are compared via ks_distance");
  if (kind_a == kind_b) return 0.0;

  const std::vector<double> ts = grid.materialize(s);

  auto closed_form = [&](CdfKind kind, double t) -> double {
    switch (kind) {
      case CdfKind::approx_exp: return approx_cdf_exp(t, s);
      case CdfKind::approx_pareto: return approx_cdf_pareto(t, s);
      case CdfKind::limit: return limit_cdf(t, s);
      default: throw std::logic_error("sup_distance: unexpected kind");
    }
  };

  std::vector<double> fa(ts.size()), fb(ts.size());
  const bool need_exact = (kind_a == CdfKind::exact || kind_b == CdfKind::exact);
  if (need_exact) {
    const ExactCutEvaluator eval(s, cfg);
    const CdfKind other = (kind_a == CdfKind::exact) ? kind_b : kind_a;
    std::vector<double>& ex = (kind_a == CdfKind::exact) ? fa : fb;
    std::vector<double>& cf = (kind_a == CdfKind::exact) ? fb : fa;
    detail::parallel_for(ts.size(), [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        ex[i] = eval.cdf(ts[i]).value;
        cf[i] = closed_form(other, ts[i]);
      }
    });
  } else {
    for (std::size_t i = 0; i < ts.size(); ++i) {
      fa[i] = closed_form(kind_a, ts[i]);
      fb[i] = closed_form(kind_b, ts[i]);
    }
  }

  double d = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) d = std::max(d, std::fabs(fa[i] - fb[i]));
  return d;
}

double scr_db(const Scenario& s) {
  s.validate();
  if (!(s.alpha > 1.0))
    throw std::domain_error("scr_db: clutter mean power is infinite for alpha <= 1");
  // mean signal power (1/lambda) over mean clutter power (beta/((alpha-1) mu))
  return 10.0 * std::log10((s.alpha - 1.0) * s.mu / (s.lambda * s.beta));
}

ValidityReport sweep(const Scenario& base, const std::vector<double>& lambda_over_mu,
                     const QuadratureConfig& cfg) {
  base.validate();
  cfg.validate();
  if (lambda_over_mu.empty()) throw std::invalid_argument("sweep: ratio list must be nonempty");
  for (double r : lambda_over_mu)
    if (!(r > 0.0) || !std::isfinite(r))
      throw std::invalid_argument("sweep: ratios must be positive finite reals");

  std::vector<double> ratios = lambda_over_mu;
  std::sort(ratios.begin(), ratios.end());

  ValidityReport report;
  report.alpha = base.alpha;
  report.beta = base.beta;
  report.mu = base.mu;
  report.grid_desc = GridSpec::analysis_default().describe();
  report.config = cfg;
  if (!(base.alpha > 1.0)) report.note = "scr_db unavailable: clutter mean is infinite for alpha <= 1";

  for (double ratio : ratios) {
    ValidityRow row;
    row.lambda_over_mu = ratio;
    const Scenario s{base.alpha, base.beta, ratio * base.mu, base.mu};
    row.validity_ratio = s.mu / (s.lambda + s.mu);
    row.scr_db = (base.alpha > 1.0) ? scr_db(s) : kNan;
    try {
      const RowDistances d = distances_to_exact(s, GridSpec::analysis_default(), cfg);
      row.sup_dist_exp = d.exp;
      row.sup_dist_pareto = d.pareto;
      row.sup_dist_limit = d.limit;
      row.valid = d.pareto < kSupDistParetoThreshold;
    } catch (const std::exception& e) {
      row.sup_dist_exp = kNan;
      row.sup_dist_pareto = kNan;
      row.sup_dist_limit = kNan;
      row.valid = false;
      row.error = e.what();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string report_to_json(const ValidityReport& r) {
  std::ostringstream os;
  os << "{\n  \"meta\": {\n";
  os << "    \"tool\": \"cutapprox\",\n";
  os << "    \"alpha\": " << format_g17(r.alpha) << ",\n";
  os << "    \"beta\": " << format_g17(r.beta) << ",\n";
  os << "    \"mu\": " << format_g17(r.mu) << ",\n";
  os << "    \"grid\": \"" << json_escape(r.grid_desc) << "\",\n";
  os << "    \"metric\": \"sup-norm (Kolmogorov) distance on the evaluation grid\",\n";
  os << "    \"sup_truncation_bound\": " << format_g17(r.sup_truncation_bound) << ",\n";
  os << "    \"quadrature\": {\"abs_tol\": " << format_g17(r.config.abs_tol)
     << ", \"rel_tol\": " << format_g17(r.config.rel_tol)
     << ", \"max_subdivisions\": " << r.config.max_subdivisions
     << ", \"truncation_quantile\": " << format_g17(r.config.truncation_quantile) << "},\n";
  os << "    \"thresholds\": {\"sup_dist_pareto\": " << format_g17(r.sup_dist_pareto_threshold)
     << ", \"scr_db\": " << format_g17(r.scr_db_threshold)
     << ", \"note\": \"artifact conventions for the VALID flag\"}";
  if (!r.note.empty()) os << ",\n    \"note\": \"" << json_escape(r.note) << "\"";
  os << "\n  },\n  \"rows\": [\n";
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const ValidityRow& row = r.rows[i];
    os << "    {\"lambda_over_mu\": " << format_g17(row.lambda_over_mu)
       << ", \"scr_db\": " << format_g17_or(row.scr_db, "null")
       << ", \"validity_ratio\": " << format_g17(row.validity_ratio)
       << ", \"sup_dist_exp\": " << format_g17_or(row.sup_dist_exp, "null")
       << ", \"sup_dist_pareto\": " << format_g17_or(row.sup_dist_pareto, "null")
       << ", \"sup_dist_limit\": " << format_g17_or(row.sup_dist_limit, "null")
       << ", \"valid\": " << (row.valid ? "true" : "false");
    if (!row.error.empty()) os << ", \"error\": \"" << json_escape(row.error) << "\"";
    os << "}" << (i + 1 < r.rows.size() ? "," : "") << "\n";
  }
  os << "  ]\n}\n";
  return os.str();
}

std::string report_to_csv(const ValidityReport& r) {
  std::ostringstream os;
  os << "lambda_over_mu,scr_db,validity_ratio,sup_dist_exp,sup_dist_pareto,sup_dist_limit,valid\n";
  for (const ValidityRow& row : r.rows) {
    os << format_g17(row.lambda_over_mu) << ',' << format_g17_or(row.scr_db, "") << ','
       << format_g17(row.validity_ratio) << ',' << format_g17_or(row.sup_dist_exp, "") << ','
       << format_g17_or(row.sup_dist_pareto, "") << ',' << format_g17_or(row.sup_dist_limit, "")
       << ',' << (row.valid ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace cutapprox
