#include "cutapprox/pareto.hpp"

#include <cmath>
#include <stdexcept>

namespace cutapprox {

namespace {
void require_nonnegative(double t, const char* fn) {
  if (!(t >= 0.0)) throw std::domain_error(std::string(fn) + ": t must be >= 0");
}
}  // namespace

double pareto_pdf(double t, const ParetoParams& p) {
  require_nonnegative(t, "pareto_pdf");
  // alpha/beta * exp(-(alpha+1)*log1p(t/beta)) stays finite for large t.
  return p.shape / p.scale * std::exp(-(p.shape + 1.0) * std::log1p(t / p.scale));
}

double pareto_cdf(double t, const ParetoParams& p) {
  require_nonnegative(t, "pareto_cdf");
  return -std::expm1(-p.shape * std::log1p(t / p.scale));
}

double pareto_survival(double t, const ParetoParams& p) {
  require_nonnegative(t, "pareto_survival");
  return std::exp(-p.shape * std::log1p(t / p.scale));
}

double pareto_quantile(double q, const ParetoParams& p) {
  if (!(q >= 0.0) || q >= 1.0) throw std::domain_error("pareto_quantile: q must be in [0, 1)");
  // beta*((1-q)^(-1/alpha) - 1) = beta*expm1(-log1p(-q)/alpha)
  return p.scale * std::expm1(-std::log1p(-q) / p.shape);
}

}  // namespace cutapprox
