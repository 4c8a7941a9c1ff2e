#ifndef CUTAPPROX_GAMMA_FUNCTIONS_HPP
#define CUTAPPROX_GAMMA_FUNCTIONS_HPP

namespace cutapprox {

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
/// Series for x < a+1, Lentz continued fraction otherwise.
double reg_gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double reg_gamma_q(double a, double x);

/// Inverse of P(a, .): the x with P(a, x) = p, for p in [0, 1).
/// Bracketed bisection with a Newton polish; accurate enough for
/// tail truncation points at p up to 1 - 1e-12.
double inv_reg_gamma_p(double a, double p);

/// Density of Gamma(a, rate b) at x > 0, computed in log space.
double gamma_pdf(double a, double rate, double x);

}  // namespace cutapprox

#endif
