#include "cutapprox/gamma_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cutapprox {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min() / kEps;

// Lower series: P(a,x) = x^a e^-x / Gamma(a+1) * sum_k x^k / ((a+1)...(a+k)).
double gamma_p_series(double a, double x) {
  double ap = a;
  double term = 1.0 / a;
  double sum = term;
  for (int i = 0; i < 1000; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kEps) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper continued fraction (modified Lentz): Q(a,x).
double gamma_q_cf(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 1000; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) <= kEps) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double reg_gamma_p(double a, double x) {
  if (!(a > 0.0)) throw std::domain_error("reg_gamma_p: a must be > 0");
  if (!(x >= 0.0)) throw std::domain_error("reg_gamma_p: x must be >= 0");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_cf(a, x);
}

double reg_gamma_q(double a, double x) {
  if (!(a > 0.0)) throw std::domain_error("reg_gamma_q: a must be > 0");
  if (!(x >= 0.0)) throw std::domain_error("reg_gamma_q: x must be >= 0");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double gamma_pdf(double a, double rate, double x) {
  if (!(x > 0.0)) return 0.0;
  return std::exp(a * std::log(rate) + (a - 1.0) * std::log(x) - rate * x - std::lgamma(a));
}

double inv_reg_gamma_p(double a, double p) {
  if (!(a > 0.0)) throw std::domain_error("inv_reg_gamma_p: a must be > 0");
  if (!(p >= 0.0) || p >= 1.0) throw std::domain_error("inv_reg_gamma_p: p must be in [0, 1)");
  if (p == 0.0) return 0.0;

  // Bracket the root; P is strictly increasing in x.
  double lo = 0.0;
  double hi = std::fmax(a, 1.0);
  while (reg_gamma_p(a, hi) < p) {
    hi *= 2.0;
    if (hi > 1e300) break;
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (reg_gamma_p(a, mid) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);

  // Newton polish with the gamma density as derivative.
  for (int i = 0; i < 4; ++i) {
    const double f = reg_gamma_p(a, x) - p;
    const double df = gamma_pdf(a, 1.0, x);
    if (df <= 0.0) break;
    const double step = f / df;
    const double next = x - step;
    if (!(next > 0.0) || next < lo || next > hi) break;
    x = next;
    if (std::fabs(step) <= 4.0 * kEps * x) break;
  }
  return x;
}

}  // namespace cutapprox
