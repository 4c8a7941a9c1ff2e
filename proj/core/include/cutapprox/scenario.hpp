#ifndef CUTAPPROX_SCENARIO_HPP
#define CUTAPPROX_SCENARIO_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace cutapprox {

/// The four parameters of the signal-plus-clutter model.
///
/// The target return is bivariate Gaussian with per-component variance
/// 1/(2*lambda), so the mean signal power is 1/lambda.  The clutter is
/// compound Gaussian: a bivariate Gaussian speckle with per-component
/// variance 1/(2*mu) scaled by an inverse-gamma texture with shape alpha
/// and scale beta.  The clutter intensity is then Pareto Type II with
/// shape alpha and scale beta/mu.
struct Scenario {
  double alpha;   ///< Pareto shape (tail heaviness), > 0
  double beta;    ///< Pareto scale, intensity units, > 0
  double lambda;  ///< reciprocal of mean target signal power, > 0
  double mu;      ///< reciprocal of mean Gaussian-speckle intensity, > 0

  /// Throws std::invalid_argument naming the offending field.
  void validate() const {
    auto bad = [](double v) { return !(v > 0.0) || !std::isfinite(v); };
    if (bad(alpha)) throw std::invalid_argument("Scenario: alpha must be a positive finite real, got " + std::to_string(alpha));
    if (bad(beta)) throw std::invalid_argument("Scenario: beta must be a positive finite real, got " + std::to_string(beta));
    if (bad(lambda)) throw std::invalid_argument("Scenario: lambda must be a positive finite real, got " + std::to_string(lambda));
    if (bad(mu)) throw std::invalid_argument("Scenario: mu must be a positive finite real, got " + std::to_string(mu));
  }
};

/// Shape/scale pair of a Pareto Type II (Lomax) distribution.
struct ParetoParams {
  double shape;
  double scale;

  void validate() const {
    if (!(shape > 0.0) || !std::isfinite(shape)) throw std::invalid_argument("ParetoParams: shape must be a positive finite real");
    if (!(scale > 0.0) || !std::isfinite(scale)) throw std::invalid_argument("ParetoParams: scale must be a positive finite real");
  }
};

/// One complex return, in-phase and quadrature components in amplitude units.
struct ComplexSample {
  double re;
  double im;

  double intensity() const { return re * re + im * im; }
};

/// Pareto parameters of the clutter intensity |C|^2 implied by a scenario.
inline ParetoParams clutter_pareto(const Scenario& s) {
  return {s.alpha, s.beta / s.mu};
}

}  // namespace cutapprox

#endif
