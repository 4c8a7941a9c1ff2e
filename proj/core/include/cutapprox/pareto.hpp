#ifndef CUTAPPROX_PARETO_HPP
#define CUTAPPROX_PARETO_HPP

#include "cutapprox/scenario.hpp"

namespace cutapprox {

/// Density alpha*beta^alpha / (t+beta)^(alpha+1) for t >= 0.
double pareto_pdf(double t, const ParetoParams& p);

/// Distribution function 1 - (beta/(t+beta))^alpha for t >= 0.
/// Evaluated as -expm1(-alpha*log1p(t/beta)) so both tails keep full
/// relative accuracy.
double pareto_cdf(double t, const ParetoParams& p);

/// Survival function (beta/(t+beta))^alpha for t >= 0.
double pareto_survival(double t, const ParetoParams& p);

/// Quantile beta*((1-q)^(-1/alpha) - 1) for q in [0, 1).
double pareto_quantile(double q, const ParetoParams& p);

}  // namespace cutapprox

#endif
