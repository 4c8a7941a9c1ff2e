#ifndef CUTAPPROX_APPROXIMATION_HPP
#define CUTAPPROX_APPROXIMATION_HPP

#include "cutapprox/pareto.hpp"
#include "cutapprox/scenario.hpp"

namespace cutapprox {

/// Parameter context for the conditional decay rate of the cell under
/// test.  Caches g(1); always computed as lambda*mu/(lambda+mu), which is
/// cancellation-free when lambda >> mu.
struct GContext {
  double lambda;
  double mu;
  double g1;

  GContext(double lambda_, double mu_);
  static GContext from_scenario(const Scenario& s) { return {s.lambda, s.mu}; }
};

/// Conditional decay rate g(u) = lambda*mu*u / (mu*u + lambda) of the CUT
/// intensity at texture value u.  g(0) = 0, strictly increasing,
/// sup over u is lambda.
double g(double u, const GContext& ctx);

/// nth derivative of g: (-1)^(n+1) n! lambda^2 mu^n / (mu*u + lambda)^(n+1),
/// n >= 1.
double g_derivative(int n, double u, const GContext& ctx);

/// Partial sum of the Taylor expansion of g about u = 1.  The series
/// converges for |u-1| < (lambda+mu)/mu; outside that radius the result is
/// flagged, not rejected, so divergence can be demonstrated.
struct TaylorSum {
  double value;
  bool inside_radius;
};
TaylorSum taylor_partial_sum(double u, int order, const GContext& ctx);

/// First-order linearization g(1)^2 * (u/mu + 1/lambda); algebraically
/// identical to taylor_partial_sum(u, 1).
double linearized_g(double u, const GContext& ctx);

/// g(1)/lambda = mu/(lambda+mu).  Small iff lambda >> mu; the
/// linearization is trustworthy only when this is << 1.
double validity_ratio(const GContext& ctx);

/// g(1)/mu = lambda/(lambda+mu); approaches 1 in the regime where the
/// linearization is valid.
double companion_ratio(const GContext& ctx);

/// Pareto parameters matched by the linearized CDF: shape alpha, scale
/// beta*(lambda+mu)^2/(lambda^2*mu).  Scale is > beta/mu for finite
/// lambda and converges to beta/mu as lambda grows.
ParetoParams effective_pareto(const Scenario& s);

/// Linearized CDF with the exponential factor retained:
/// 1 - (beta/(beta + g(1)^2 t/mu))^alpha * exp(-t g(1)^2/lambda).
double approx_cdf_exp(double t, const Scenario& s);

/// Linearized CDF with the exponential factor dropped: exactly the Pareto
/// Type II CDF with the effective_pareto parameters.
double approx_cdf_pareto(double t, const Scenario& s);

/// lambda -> infinity limit: clutter-only Pareto, 1 - (beta/(beta+mu t))^alpha.
double limit_cdf(double t, const Scenario& s);

}  // namespace cutapprox

#endif
