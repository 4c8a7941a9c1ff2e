#include "cutapprox/approximation.hpp"

#include <cmath>
#include <stdexcept>

namespace cutapprox {

GContext::GContext(double lambda_, double mu_) : lambda(lambda_), mu(mu_) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("GContext: lambda must be a positive finite real");
  if (!(mu > 0.0) || !std::isfinite(mu))
    throw std::invalid_argument("GContext: mu must be a positive finite real");
  g1 = lambda * mu / (lambda + mu);
}

double g(double u, const GContext& ctx) {
  if (!(u >= 0.0)) throw std::domain_error("g: u must be >= 0");
  return ctx.lambda * ctx.mu * u / (ctx.mu * u + ctx.lambda);
}

double g_derivative(int n, double u, const GContext& ctx) {
  if (n < 1) throw std::domain_error("g_derivative: n must be >= 1 (n = 0 is g itself)");
  if (!(u >= 0.0)) throw std::domain_error("g_derivative: u must be >= 0");

  const double sign = (n % 2 == 1) ? 1.0 : -1.0;
  double factorial = 1.0;
  for (int k = 2; k <= n && k <= 170; ++k) factorial *= k;

  const double denom = ctx.mu * u + ctx.lambda;
  double result = sign * factorial * ctx.lambda * ctx.lambda * std::pow(ctx.mu, n) /
                  std::pow(denom, n + 1);
  if (!std::isfinite(result) || n > 170) {
    // Log-space fallback when a factor over/underflows.
    const double logmag = std::lgamma(n + 1.0) + 2.0 * std::log(ctx.lambda) +
                          n * std::log(ctx.mu) - (n + 1.0) * std::log(denom);
    result = sign * std::exp(logmag);
  }
  return result;
}

TaylorSum taylor_partial_sum(double u, int order, const GContext& ctx) {
  if (order < 0) throw std::domain_error("taylor_partial_sum: order must be >= 0");

  const double d = u - 1.0;
  const double ratio = validity_ratio(ctx) * d;  // (g(1)/lambda)(u-1), the geometric ratio
  // sum_{k=1}^{order} (-1)^(k+1) ratio^k = -sum (-ratio)^k
  double term = ratio;
  double sum = 0.0;
  for (int k = 1; k <= order; ++k) {
    sum += term;
    term *= -ratio;
  }
  const double value = ctx.g1 + ctx.g1 * (ctx.lambda / ctx.mu) * sum;
  return {value, std::fabs(ratio) < 1.0};
}

double linearized_g(double u, const GContext& ctx) {
  if (!(u >= 0.0)) throw std::domain_error("linearized_g: u must be >= 0");
  return ctx.g1 * ctx.g1 * (u / ctx.mu + 1.0 / ctx.lambda);
}

double validity_ratio(const GContext& ctx) { return ctx.mu / (ctx.lambda + ctx.mu); }

double companion_ratio(const GContext& ctx) { return ctx.lambda / (ctx.lambda + ctx.mu); }

ParetoParams effective_pareto(const Scenario& s) {
  s.validate();
  const double r = (s.lambda + s.mu) / s.lambda;
  return {s.alpha, s.beta * r * r / s.mu};
}

double approx_cdf_exp(double t, const Scenario& s) {
  if (!(t >= 0.0)) throw std::domain_error("approx_cdf_exp: t must be >= 0");
  s.validate();
  const GContext ctx = GContext::from_scenario(s);
  // g(1)^2/lambda and g(1)^2/mu via the overflow-safe ratios.
  const double exp_rate = validity_ratio(ctx) * ctx.g1;
  const double pareto_rate = companion_ratio(ctx) * ctx.g1;
  return -std::expm1(-s.alpha * std::log1p(pareto_rate * t / s.beta) - exp_rate * t);
}

double approx_cdf_pareto(double t, const Scenario& s) {
  if (!(t >= 0.0)) throw std::domain_error("approx_cdf_pareto: t must be >= 0");
  s.validate();
  const GContext ctx = GContext::from_scenario(s);
  const double pareto_rate = companion_ratio(ctx) * ctx.g1;  // g(1)^2/mu = lambda^2 mu/(lambda+mu)^2
  return -std::expm1(-s.alpha * std::log1p(pareto_rate * t / s.beta));
}

double limit_cdf(double t, const Scenario& s) {
  s.validate();
  return pareto_cdf(t, clutter_pareto(s));
}

}  // namespace cutapprox
