#ifndef CUTAPPROX_ANALYSIS_HPP
#define CUTAPPROX_ANALYSIS_HPP

#include <string>
#include <vector>

#include "cutapprox/exact_cut.hpp"
#include "cutapprox/scenario.hpp"

namespace cutapprox {

/// Pass/fail thresholds for the VALID flag.  These are conventions of
/// this tool, not properties of the model; reports label them as such.
inline constexpr double kSupDistParetoThreshold = 0.01;
inline constexpr double kScrDbThreshold = -10.0;

/// Max over the grid of |F_a(t) - F_b(t)| for two CDF kinds; `empirical`
/// is not a valid kind here.  The sup-norm (Kolmogorov) distance is the
/// primary approximation-quality metric: it is threshold-relevant for
/// detection and robust to the grid placement.
double sup_distance(const Scenario& s, CdfKind kind_a, CdfKind kind_b, const GridSpec& grid,
                    const QuadratureConfig& cfg = {});

/// Signal-to-clutter ratio 10*log10((alpha-1)*mu/(lambda*beta)) in dB.
/// Throws std::domain_error for alpha <= 1 (infinite clutter mean).
double scr_db(const Scenario& s);

struct ValidityRow {
  double lambda_over_mu = 0.0;
  double scr_db = 0.0;          // NaN when alpha <= 1
  double validity_ratio = 0.0;  // mu/(lambda+mu)
  double sup_dist_exp = 0.0;    // NaN on per-row failure
  double sup_dist_pareto = 0.0;
  double sup_dist_limit = 0.0;
  bool valid = false;           // sup_dist_pareto < kSupDistParetoThreshold
  std::string error;            // nonempty when the row failed
};

struct ValidityReport {
  double alpha = 0.0;
  double beta = 0.0;
  double mu = 0.0;
  std::string grid_desc;
  QuadratureConfig config;
  double sup_dist_pareto_threshold = kSupDistParetoThreshold;
  double scr_db_threshold = kScrDbThreshold;
  double sup_truncation_bound = 0.001;  // grid stops at quantile 0.999
  std::string note;                     // e.g. scr_db unavailable for alpha <= 1
  std::vector<ValidityRow> rows;        // sorted by lambda_over_mu
};

/// One row per lambda/mu ratio: mu fixed at base.mu, lambda = ratio*mu.
/// Rows are sorted ascending; a failing row records its error and the
/// sweep continues.  Reports are byte-reproducible for identical inputs.
ValidityReport sweep(const Scenario& base, const std::vector<double>& lambda_over_mu,
                     const QuadratureConfig& cfg = {});

/// JSON serialization: {meta, rows[]}, stable key order, 17-digit floats,
/// NaN distances as null.
std::string report_to_json(const ValidityReport& report);

/// CSV serialization: mandatory header, one row per ratio, failed rows
/// leave their distance fields empty.
std::string report_to_csv(const ValidityReport& report);

}  // namespace cutapprox

#endif
