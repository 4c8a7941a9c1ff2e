#ifndef CUTAPPROX_EXACT_CUT_HPP
#define CUTAPPROX_EXACT_CUT_HPP

#include <string>
#include <vector>

#include "cutapprox/quadrature.hpp"
#include "cutapprox/scenario.hpp"

namespace cutapprox {

enum class CdfKind { exact, approx_exp, approx_pareto, limit, empirical };

const char* cdf_kind_name(CdfKind kind);

/// Evaluation grid: either explicit intensities or quantile levels of a
/// reference Pareto (the clutter Pareto or the effective Pareto of the
/// linearized approximation).
struct GridSpec {
  enum class Base { clutter, effective };

  std::vector<double> t_points;  // explicit grid, used when non-empty
  std::vector<double> q_points;  // quantile levels in [0, 1)
  Base base = Base::effective;

  static GridSpec explicit_points(std::vector<double> ts);
  static GridSpec quantiles(double qlo, double qhi, int count, Base base = Base::effective);
  /// Clutter-Pareto quantiles, q in [0.01, 0.999], 200 points.
  static GridSpec clutter_default();
  /// Effective-Pareto quantiles {0.001, 0.005, 0.01, 0.015, ..., 0.995, 0.999},
  /// 201 points; both tails resolved, truncation of a sup estimate <= 0.001.
  static GridSpec analysis_default();

  /// Strictly increasing nonnegative intensity grid for the scenario.
  std::vector<double> materialize(const Scenario& s) const;
  std::string describe() const;
};

/// A CDF sampled on a grid, tagged with how it was produced.
struct CdfCurve {
  std::vector<double> grid;
  std::vector<double> values;
  std::vector<double> errors;  // per-point quadrature error estimates (empty for closed forms)
  CdfKind kind = CdfKind::exact;
  double max_error = 0.0;

  /// Checks strictly increasing grid, values in [0,1] and nondecreasing
  /// within slack; throws std::logic_error on violation.
  void validate(double slack) const;
};

/// Evaluates the distribution of the cell under test,
///   F(t) = 1 - (beta^alpha/Gamma(alpha)) int_0^inf u^(alpha-1) e^(-beta u)
///          e^(-g(u) t) du,
/// as the gamma expectation E[-expm1(-g(W) t)] with W ~ Gamma(alpha, beta),
/// which is exact at t = 0 and free of cancellation in both tails.
/// Construction precomputes the per-node decay rates for the Gauss ladder,
/// so repeated evaluations on the same scenario are cheap.
class ExactCutEvaluator {
 public:
  ExactCutEvaluator(const Scenario& s, const QuadratureConfig& cfg = {});

  /// Distribution function with error estimate; clamped to [0, 1].
  /// For t beyond the clutter quantile at 1 - 1e-10 (inflated by
  /// 1 + mu/lambda) returns {1, 1e-10} without integrating.
  Estimate cdf(double t) const;

  /// Density (beta^alpha/Gamma(alpha)) int u^(alpha-1) e^(-beta u) g(u)
  /// e^(-g(u) t) du.
  Estimate pdf(double t) const;

  const Scenario& scenario() const { return scenario_; }
  const QuadratureConfig& config() const { return config_; }

 private:
  double rate_at(double u) const;
  Estimate expectation(const std::function<double(double)>& h, double tail_bound) const;

  Scenario scenario_;
  QuadratureConfig config_;
  double saturation_t_;
  struct Rung {
    const GaussRule* rule;
    std::vector<double> rates;  // g(node/beta) per node
  };
  std::vector<Rung> rungs_;
};

/// One-shot wrappers.
Estimate exact_cdf(double t, const Scenario& s, const QuadratureConfig& cfg = {});
Estimate exact_pdf(double t, const Scenario& s, const QuadratureConfig& cfg = {});

/// Evaluates the exact CDF over a grid (points run concurrently, assembled
/// in grid order).  Verifies the values are nondecreasing within
/// 2*abs_tol; a violation or a non-convergent point raises QuadratureError
/// naming the offending grid point.
CdfCurve exact_curve(const Scenario& s, const GridSpec& grid, const QuadratureConfig& cfg = {});

}  // namespace cutapprox

#endif
