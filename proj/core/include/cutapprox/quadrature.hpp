#ifndef CUTAPPROX_QUADRATURE_HPP
#define CUTAPPROX_QUADRATURE_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cutapprox {

/// Tolerances and budgets for the semi-infinite integrals.
struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_subdivisions = 200;
  double truncation_quantile = 1.0 - 1e-12;

  void validate() const {
    if (!(abs_tol > 0.0)) throw std::invalid_argument("QuadratureConfig: abs_tol must be > 0");
    if (!(rel_tol > 0.0)) throw std::invalid_argument("QuadratureConfig: rel_tol must be > 0");
    if (max_subdivisions < 1) throw std::invalid_argument("QuadratureConfig: max_subdivisions must be >= 1");
    if (!(truncation_quantile > 0.0) || !(truncation_quantile < 1.0))
      throw std::invalid_argument("QuadratureConfig: truncation_quantile must be in (0, 1)");
  }
};

/// A value with its estimated absolute error.
struct Estimate {
  double value;
  double error;
};

/// Thrown when the subdivision budget is exhausted before the tolerance is
/// met; carries the best value and the achieved error estimate.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& msg, double value, double error_estimate)
      : std::runtime_error(msg), value_(value), error_(error_estimate) {}

  double value() const { return value_; }
  double error_estimate() const { return error_; }

 private:
  double value_;
  double error_;
};

/// Nodes and weights of a quadrature rule on [0, inf).
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point generalized Gauss-Laguerre rule normalized against the
/// Gamma(shape, 1) density: sum w_i h(x_i) ~ E[h(X)], X ~ Gamma(shape, 1).
/// Weights sum to 1 by construction.  Golub-Welsch on the Jacobi matrix,
/// eigenvalues by implicit-shift QL.
GaussRule gamma_gauss_rule(double shape, int n);

/// Process-wide cache of gamma_gauss_rule results keyed by (shape, n).
const GaussRule& cached_gamma_gauss_rule(double shape, int n);

struct AdaptiveResult {
  double value;
  double error;
  bool converged;
  int subdivisions;
};

/// Globally adaptive Gauss-Kronrod 7/15 over [a, b].  Splits the worst
/// panel until the summed error estimate meets max(abs_tol, rel_tol*|I|)
/// or the subdivision budget runs out.
AdaptiveResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                                  double abs_tol, double rel_tol, int max_subdivisions);

/// E[h(W)] for W ~ Gamma(shape, rate) and h bounded on [0, inf).
///
/// Uses the generalized Gauss-Laguerre ladder (25..200 nodes) when
/// shape >= 0.5, falling back to adaptive subdivision on [0, u_max] with
/// u_max at the truncation_quantile of W; the truncated tail contributes
/// at most (1 - truncation_quantile) * tail_bound, which is added to the
/// reported error.  tail_bound must bound |h| beyond u_max.
/// Throws QuadratureError if neither path reaches tolerance.
Estimate gamma_expectation(const std::function<double(double)>& h, double shape, double rate,
                           const QuadratureConfig& cfg, double tail_bound);

}  // namespace cutapprox

#endif
