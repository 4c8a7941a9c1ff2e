#include "cutapprox/sampling.hpp"

#include <cmath>

namespace cutapprox {

double gamma_draw(rng::Stream& stream, double shape, double rate) {
  if (shape < 1.0) {
    // Boost: Gamma(a) = Gamma(a+1) * U^(1/a).
    const double g = gamma_draw(stream, shape + 1.0, 1.0);
    return g * std::pow(stream.uniform_pos(), 1.0 / shape) / rate;
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / (3.0 * std::sqrt(d));
  for (;;) {
    double x, v;
    do {
      x = stream.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = stream.uniform_pos();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v / rate;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v / rate;
  }
}

double sample_speckle(const Scenario& s, rng::Stream& stream) {
  s.validate();
  const double w = gamma_draw(stream, s.alpha, s.beta);
  return 1.0 / std::sqrt(w);
}

ComplexSample sample_clutter(const Scenario& s, rng::Stream& stream) {
  const double k = sample_speckle(s, stream);
  const double sigma = 1.0 / std::sqrt(2.0 * s.mu);
  return {k * sigma * stream.normal(), k * sigma * stream.normal()};
}

ComplexSample sample_signal(const Scenario& s, rng::Stream& stream) {
  s.validate();
  const double sigma = 1.0 / std::sqrt(2.0 * s.lambda);
  return {sigma * stream.normal(), sigma * stream.normal()};
}

double sample_cut_value(const Scenario& s, rng::Stream& stream) {
  const ComplexSample c = sample_clutter(s, stream);
  const ComplexSample sig = sample_signal(s, stream);
  const double re = sig.re + c.re;
  const double im = sig.im + c.im;
  return re * re + im * im;
}

}  // namespace cutapprox
