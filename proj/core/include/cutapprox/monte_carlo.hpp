#ifndef CUTAPPROX_MONTE_CARLO_HPP
#define CUTAPPROX_MONTE_CARLO_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "cutapprox/scenario.hpp"

namespace cutapprox {

/// Seeded draws of the cell-under-test intensity Z = |S + C|^2.
/// Bit-for-bit reproducible from (scenario, seed, n) for any worker count:
/// generation runs in fixed-size chunks, chunk i on stream id i of the
/// seed, assembled by chunk index.
struct SampleBatch {
  Scenario scenario;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::vector<double> values;
};

SampleBatch sample_cut(const Scenario& s, std::uint64_t seed, std::size_t n);

/// Immutable ECDF; evaluation at t returns (#values <= t)/n.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(std::vector<double> values);
  static EmpiricalCdf from_batch(const SampleBatch& batch) { return EmpiricalCdf(batch.values); }

  double operator()(double t) const;
  const std::vector<double>& sorted_values() const { return sorted_; }
  std::size_t size() const { return sorted_.size(); }

 private:
  std::vector<double> sorted_;
};

/// sup_t |F_emp(t) - f(t)| for a continuous CDF evaluator f, computed
/// exactly at the jump points (both one-sided gaps per sorted value).
/// f is evaluated concurrently; results do not depend on the worker count.
double ks_distance(const EmpiricalCdf& e, const std::function<double(double)>& f);

/// Exact sup distance between two empirical CDFs (step functions).
double ks_distance(const EmpiricalCdf& a, const EmpiricalCdf& b);

/// CSV export: header "z", one value per line, 17 significant digits.
void write_batch_csv(const SampleBatch& batch, std::ostream& os);

/// Binary export: a column of 64-bit little-endian IEEE doubles, no header.
void write_batch_binary(const SampleBatch& batch, std::ostream& os);

}  // namespace cutapprox

#endif
