#include "cutapprox/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "cutapprox/gamma_functions.hpp"

namespace cutapprox {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Implicit-shift QL for a symmetric tridiagonal matrix, updating only the
// first components of the eigenvectors (EISPACK imtql2 restricted to the
// first row).  d: diagonal, e: subdiagonal (e[n-1] ignored), z: first-row
// vector.  On return d holds ascending eigenvalues and z the matching
// first components.
void imtqlx(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  if (n == 1) return;
  e.resize(n);
  e[n - 1] = 0.0;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    for (;;) {
      int m = l;
      while (m < n - 1) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= kEps * dd) break;
        ++m;
      }
      if (m == l) break;
      if (++iter > 50) throw std::runtime_error("gamma_gauss_rule: eigenvalue iteration failed");

      double gshift = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(gshift, 1.0);
      gshift = d[m] - d[l] + e[l] / (gshift + std::copysign(r, gshift));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool underflow = false;
      for (int i = m - 1; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, gshift);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = gshift / r;
        gshift = d[i + 1] - p;
        r = (d[i] - gshift) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = gshift + p;
        gshift = c * r - b;
        f = z[i + 1];
        z[i + 1] = s * z[i] + c * f;
        z[i] = c * z[i] - s * f;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = gshift;
      e[m] = 0.0;
    }
  }

  // Sort ascending, carrying the first components along.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });
  std::vector<double> ds(n), zs(n);
  for (int i = 0; i < n; ++i) {
    ds[i] = d[order[i]];
    zs[i] = z[order[i]];
  }
  d = std::move(ds);
  z = std::move(zs);
}

// Gauss-Kronrod 7/15 pair on [-1, 1] (QUADPACK values).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Panel {
  double a, b;
  double value;
  double error;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(center);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  double resabs = kWgk[7] * std::fabs(fc);

  double fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    fv1[j] = f(center - half * kXgk[j]);
    fv2[j] = f(center + half * kXgk[j]);
    const double sum = fv1[j] + fv2[j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::fabs(fv1[j]) + std::fabs(fv2[j]));
    if (j % 2 == 1) resg += kWg[(j - 1) / 2] * sum;
  }

  const double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::fabs(fc - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));

  double err = std::fabs((resk - resg) * half);
  resasc *= std::fabs(half);
  resabs *= std::fabs(half);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  err = std::max(err, 50.0 * kEps * resabs);

  return {a, b, resk * half, err};
}

std::uint64_t double_key(double x) {
  std::uint64_t k;
  static_assert(sizeof(k) == sizeof(x));
  std::memcpy(&k, &x, sizeof(k));
  return k;
}

}  // namespace

GaussRule gamma_gauss_rule(double shape, int n) {
  if (!(shape > 0.0)) throw std::invalid_argument("gamma_gauss_rule: shape must be > 0");
  if (n < 1) throw std::invalid_argument("gamma_gauss_rule: n must be >= 1");

  // Jacobi matrix of the Laguerre polynomials with weight exponent shape-1.
  const double a = shape - 1.0;
  std::vector<double> diag(n), sub(n), first(n, 0.0);
  for (int k = 0; k < n; ++k) diag[k] = 2.0 * k + a + 1.0;
  for (int k = 0; k + 1 < n; ++k) sub[k] = std::sqrt((k + 1.0) * (k + 1.0 + a));
  first[0] = 1.0;

  imtqlx(diag, sub, first);

  GaussRule rule;
  rule.nodes = std::move(diag);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) rule.weights[i] = first[i] * first[i];
  return rule;
}

const GaussRule& cached_gamma_gauss_rule(double shape, int n) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, int>, std::unique_ptr<GaussRule>> cache;

  const auto key = std::make_pair(double_key(shape), n);
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<GaussRule>(gamma_gauss_rule(shape, n))).first;
  return *it->second;
}

AdaptiveResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                                  double abs_tol, double rel_tol, int max_subdivisions) {
  std::vector<Panel> panels;
  panels.push_back(gk15(f, a, b));

  int splits = 0;
  for (;;) {
    double total = 0.0;
    double err = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      total += panels[i].value;
      err += panels[i].error;
      if (panels[i].error > panels[worst].error) worst = i;
    }
    const double tol = std::max(abs_tol, rel_tol * std::fabs(total));
    if (err <= tol || splits >= max_subdivisions) {
      // Deterministic assembly: sum in left-to-right order.
      std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
      double value = 0.0;
      double error = 0.0;
      for (const Panel& p : panels) {
        value += p.value;
        error += p.error;
      }
      return {value, error, error <= std::max(abs_tol, rel_tol * std::fabs(value)), splits};
    }
    const Panel p = panels[worst];
    const double mid = 0.5 * (p.a + p.b);
    if (!(mid > p.a) || !(mid < p.b)) {
      // Interval no longer splittable at double precision.
      panels[worst].error = 0.0;
      continue;
    }
    panels[worst] = gk15(f, p.a, mid);
    panels.push_back(gk15(f, mid, p.b));
    ++splits;
  }
}

Estimate gamma_expectation(const std::function<double(double)>& h, double shape, double rate,
                           const QuadratureConfig& cfg, double tail_bound) {
  cfg.validate();
  if (!(shape > 0.0) || !(rate > 0.0))
    throw std::invalid_argument("gamma_expectation: shape and rate must be > 0");

  // Gauss-Laguerre ladder.
  if (shape >= 0.5) {
    constexpr int kLadder[] = {25, 50, 100, 200};
    double prev = 0.0;
    bool have_prev = false;
    for (int n : kLadder) {
      const GaussRule& rule = cached_gamma_gauss_rule(shape, n);
      double sum = 0.0;
      for (int i = 0; i < n; ++i) sum += rule.weights[i] * h(rule.nodes[i] / rate);
      if (have_prev) {
        const double err = std::fabs(sum - prev);
        if (err <= std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(sum))) return {sum, err};
      }
      prev = sum;
      have_prev = true;
    }
  }

  // Adaptive fallback on the truncated interval.
  const double tq = cfg.truncation_quantile;
  const double u_max = inv_reg_gamma_p(shape, tq) / rate;
  const double tail_err = (1.0 - tq) * std::fabs(tail_bound);
  const double u_break = std::min(0.5 * u_max, inv_reg_gamma_p(shape, 0.5) / rate);

  const double piece_abs = 0.5 * cfg.abs_tol;
  const double piece_rel = 0.5 * cfg.rel_tol;
  const int piece_budget = std::max(1, cfg.max_subdivisions / 2);

  AdaptiveResult head{};
  if (shape < 1.0) {
    // Substitute u = u_break * w^(1/shape); the weight singularity at zero
    // is absorbed exactly: integral = prefac * int_0^1 e^(-rate*u(w)) h(u(w)) dw.
    const double prefac =
        std::exp(shape * std::log(rate * u_break) - std::lgamma(shape) - std::log(shape));
    auto fw = [&](double w) {
      const double u = u_break * std::pow(w, 1.0 / shape);
      return prefac * std::exp(-rate * u) * h(u);
    };
    head = adaptive_integrate(fw, 0.0, 1.0, piece_abs, piece_rel, piece_budget);
  } else {
    auto fu = [&](double u) { return gamma_pdf(shape, rate, u) * h(u); };
    head = adaptive_integrate(fu, 0.0, u_break, piece_abs, piece_rel, piece_budget);
  }

  auto fu = [&](double u) { return gamma_pdf(shape, rate, u) * h(u); };
  const AdaptiveResult body =
      adaptive_integrate(fu, u_break, u_max, piece_abs, piece_rel, piece_budget);

  const double value = head.value + body.value;
  const double error = head.error + body.error + tail_err;
  if (error > std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(value)))
    throw QuadratureError("gamma_expectation: subdivision budget exhausted (achieved error " +
                              std::to_string(error) + ")",
                          value, error);
  return {value, error};
}

}  // namespace cutapprox
