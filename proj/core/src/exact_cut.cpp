#include "cutapprox/exact_cut.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cutapprox/approximation.hpp"
#include "cutapprox/parallel.hpp"
#include "cutapprox/pareto.hpp"

namespace cutapprox {

const char* cdf_kind_name(CdfKind kind) {
  switch (kind) {
    case CdfKind::exact: return "exact";
    case CdfKind::approx_exp: return "approx_exp";
    case CdfKind::approx_pareto: return "approx_pareto";
    case CdfKind::limit: return "limit";
    case CdfKind::empirical: return "empirical";
  }
  return "unknown";
}

GridSpec GridSpec::explicit_points(std::vector<double> ts) {
  GridSpec spec;
  spec.t_points = std::move(ts);
  return spec;
}

GridSpec GridSpec::quantiles(double qlo, double qhi, int count, Base base) {
  if (!(qlo >= 0.0) || !(qhi < 1.0) || !(qlo <= qhi))
    throw std::invalid_argument("GridSpec: quantile range must satisfy 0 <= qlo <= qhi < 1");
  if (count < 1) throw std::invalid_argument("GridSpec: count must be >= 1");
  GridSpec spec;
  spec.base = base;
  spec.q_points.resize(count);
  if (count == 1) {
    spec.q_points[0] = qlo;
  } else {
    for (int i = 0; i < count; ++i)
      spec.q_points[i] = qlo + (qhi - qlo) * static_cast<double>(i) / (count - 1);
  }
  return spec;
}

GridSpec GridSpec::clutter_default() { return quantiles(0.01, 0.999, 200, Base::clutter); }

GridSpec GridSpec::analysis_default() {
  GridSpec spec;
  spec.base = Base::effective;
  spec.q_points.push_back(0.001);
  spec.q_points.push_back(0.005);
  for (int k = 0; k <= 197; ++k) spec.q_points.push_back((10.0 + 5.0 * k) / 1000.0);
  spec.q_points.push_back(0.999);
  return spec;
}

std::vector<double> GridSpec::materialize(const Scenario& s) const {
  s.validate();
  std::vector<double> ts;
  if (!t_points.empty()) {
    ts = t_points;
  } else if (!q_points.empty()) {
    const ParetoParams ref = (base == Base::clutter) ? clutter_pareto(s) : effective_pareto(s);
    ts.reserve(q_points.size());
    for (double q : q_points) ts.push_back(pareto_quantile(q, ref));
  } else {
    throw std::invalid_argument("GridSpec: empty grid");
  }
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (!(ts[i] >= 0.0) || !std::isfinite(ts[i]))
      throw std::invalid_argument("GridSpec: grid points must be finite and nonnegative");
    if (i > 0 && !(ts[i] > ts[i - 1]))
      throw std::invalid_argument("GridSpec: grid must be strictly increasing");
  }
  return ts;
}

std::string GridSpec::describe() const {
  std::ostringstream os;
  if (!t_points.empty()) {
    os << "explicit grid, " << t_points.size() << " points";
  } else {
    os << (base == Base::clutter ? "clutter" : "effective") << "-pareto quantiles q in ["
       << q_points.front() << ", " << q_points.back() << "], " << q_points.size() << " points";
  }
  return os.str();
}

void CdfCurve::validate(double slack) const {
  if (grid.size() != values.size()) throw std::logic_error("CdfCurve: grid/values size mismatch");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i > 0 && !(grid[i] > grid[i - 1])) throw std::logic_error("CdfCurve: grid not strictly increasing");
    if (!(values[i] >= 0.0 - slack) || !(values[i] <= 1.0 + slack))
      throw std::logic_error("CdfCurve: value outside [0, 1]");
    if (i > 0 && values[i] < values[i - 1] - slack)
      throw std::logic_error("CdfCurve: values decrease beyond tolerance");
  }
}

ExactCutEvaluator::ExactCutEvaluator(const Scenario& s, const QuadratureConfig& cfg)
    : scenario_(s), config_(cfg) {
  s.validate();
  cfg.validate();
  // Survival bound: splitting the texture range at u = 1,
  //   E[e^(-g(W)t)] <= (beta/(beta + mu t/(1+mu/lambda)))^alpha + e^(-g(1)t),
  // since g(u) >= mu u/(1+mu/lambda) below u = 1 and g is increasing above
  // it.  Past the point where each term is <= 5e-11 the cdf is 1 within
  // 1e-10; a clutter-quantile cutoff alone misses the signal term when
  // lambda is small.
  const double t_texture =
      pareto_quantile(1.0 - 5e-11, clutter_pareto(s)) * (1.0 + s.mu / s.lambda);
  const double g1 = s.lambda * s.mu / (s.lambda + s.mu);
  const double t_signal = std::log(2e10) / g1;
  saturation_t_ = std::max(t_texture, t_signal);

  if (s.alpha >= 0.5) {
    constexpr int kLadder[] = {25, 50, 100, 200};
    rungs_.reserve(4);
    for (int n : kLadder) {
      Rung rung;
      rung.rule = &cached_gamma_gauss_rule(s.alpha, n);
      rung.rates.resize(n);
      for (int i = 0; i < n; ++i) rung.rates[i] = rate_at(rung.rule->nodes[i] / s.beta);
      rungs_.push_back(std::move(rung));
    }
  }
}

double ExactCutEvaluator::rate_at(double u) const {
  return scenario_.lambda * scenario_.mu * u / (scenario_.mu * u + scenario_.lambda);
}

Estimate ExactCutEvaluator::expectation(const std::function<double(double)>& h,
                                        double tail_bound) const {
  return gamma_expectation(h, scenario_.alpha, scenario_.beta, config_, tail_bound);
}

Estimate ExactCutEvaluator::cdf(double t) const {
  if (!(t >= 0.0)) throw std::domain_error("exact_cdf: t must be >= 0");
  if (t == 0.0) return {0.0, 0.0};
  if (t > saturation_t_) return {1.0, 1e-10};

  // Ladder over the precomputed rate tables.
  double prev = 0.0;
  bool have_prev = false;
  for (const Rung& rung : rungs_) {
    double sum = 0.0;
    const std::size_t n = rung.rates.size();
    for (std::size_t i = 0; i < n; ++i)
      sum += rung.rule->weights[i] * (-std::expm1(-rung.rates[i] * t));
    if (have_prev) {
      const double err = std::fabs(sum - prev);
      if (err <= std::max(config_.abs_tol, config_.rel_tol * std::fabs(sum)))
        return {std::clamp(sum, 0.0, 1.0), err};
    }
    prev = sum;
    have_prev = true;
  }

  const double tail_bound = -std::expm1(-scenario_.lambda * t);  // h is increasing in u
  const Estimate e = expectation([&](double u) { return -std::expm1(-rate_at(u) * t); }, tail_bound);
  return {std::clamp(e.value, 0.0, 1.0), e.error};
}

Estimate ExactCutEvaluator::pdf(double t) const {
  if (!(t >= 0.0)) throw std::domain_error("exact_pdf: t must be >= 0");

  double prev = 0.0;
  bool have_prev = false;
  for (const Rung& rung : rungs_) {
    double sum = 0.0;
    const std::size_t n = rung.rates.size();
    for (std::size_t i = 0; i < n; ++i)
      sum += rung.rule->weights[i] * rung.rates[i] * std::exp(-rung.rates[i] * t);
    if (have_prev) {
      const double err = std::fabs(sum - prev);
      if (err <= std::max(config_.abs_tol, config_.rel_tol * std::fabs(sum)))
        return {std::max(sum, 0.0), err};
    }
    prev = sum;
    have_prev = true;
  }

  // sup of x e^(-x t) over the rate range reachable beyond any truncation
  // point: the rates live in [0, lambda).
  double tail_bound;
  if (t == 0.0) {
    tail_bound = scenario_.lambda;
  } else if (scenario_.lambda * t < 1.0) {
    tail_bound = scenario_.lambda * std::exp(-scenario_.lambda * t);
  } else {
    tail_bound = 1.0 / (std::exp(1.0) * t);
  }
  const Estimate e = expectation(
      [&](double u) {
        const double r = rate_at(u);
        return r * std::exp(-r * t);
      },
      tail_bound);
  return {std::max(e.value, 0.0), e.error};
}

Estimate exact_cdf(double t, const Scenario& s, const QuadratureConfig& cfg) {
  return ExactCutEvaluator(s, cfg).cdf(t);
}

Estimate exact_pdf(double t, const Scenario& s, const QuadratureConfig& cfg) {
  return ExactCutEvaluator(s, cfg).pdf(t);
}

CdfCurve exact_curve(const Scenario& s, const GridSpec& grid, const QuadratureConfig& cfg) {
  const std::vector<double> ts = grid.materialize(s);
  const ExactCutEvaluator eval(s, cfg);

  CdfCurve curve;
  curve.kind = CdfKind::exact;
  curve.grid = ts;
  curve.values.resize(ts.size());
  curve.errors.resize(ts.size());

  detail::parallel_for(ts.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        const Estimate e = eval.cdf(ts[i]);
        curve.values[i] = e.value;
        curve.errors[i] = e.error;
      } catch (const QuadratureError& err) {
        std::ostringstream os;
        os << "exact_curve: quadrature failed at grid point t = " << ts[i] << ": " << err.what();
        throw QuadratureError(os.str(), err.value(), err.error_estimate());
      }
    }
  });

  for (std::size_t i = 1; i < ts.size(); ++i) {
    if (curve.values[i] < curve.values[i - 1] - 2.0 * cfg.abs_tol) {
      std::ostringstream os;
      os << "exact_curve: values decrease beyond 2*abs_tol at t = " << ts[i];
      throw QuadratureError(os.str(), curve.values[i], curve.errors[i]);
    }
  }
  curve.max_error = curve.errors.empty() ? 0.0 : *std::max_element(curve.errors.begin(), curve.errors.end());
  return curve;
}

}  // namespace cutapprox
