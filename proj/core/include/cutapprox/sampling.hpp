#ifndef CUTAPPROX_SAMPLING_HPP
#define CUTAPPROX_SAMPLING_HPP

#include "cutapprox/rng.hpp"
#include "cutapprox/scenario.hpp"

namespace cutapprox {

/// Gamma(shape, rate) draw, Marsaglia-Tsang squeeze method.
double gamma_draw(rng::Stream& stream, double shape, double rate);

/// Texture draw K > 0.  K^2 is inverse-gamma(alpha, beta): K = W^(-1/2)
/// with W ~ Gamma(alpha, rate beta), so E[K^2] = beta/(alpha-1) for
/// alpha > 1.
double sample_speckle(const Scenario& s, rng::Stream& stream);

/// Clutter return K*G with G bivariate Gaussian, independent components,
/// mean 0, variance 1/(2*mu) each.  The intensity |C|^2 is Pareto Type II
/// with shape alpha and scale beta/mu.
ComplexSample sample_clutter(const Scenario& s, rng::Stream& stream);

/// Target return, bivariate Gaussian with independent components, mean 0,
/// variance 1/(2*lambda) each; E|S|^2 = 1/lambda.
ComplexSample sample_signal(const Scenario& s, rng::Stream& stream);

/// One cell-under-test intensity draw |S + C|^2, clutter drawn before
/// signal on the given stream.
double sample_cut_value(const Scenario& s, rng::Stream& stream);

}  // namespace cutapprox

#endif
