#include "cutapprox/monte_carlo.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <ostream>
#include <stdexcept>

#include "cutapprox/parallel.hpp"
#include "cutapprox/rng.hpp"
#include "cutapprox/sampling.hpp"
#include "cutapprox/text_io.hpp"

namespace cutapprox {

namespace {
constexpr std::size_t kChunk = 1 << 16;
}

SampleBatch sample_cut(const Scenario& s, std::uint64_t seed, std::size_t n) {
  s.validate();
  if (n < 1) throw std::invalid_argument("sample_cut: n must be >= 1");

  SampleBatch batch{s, seed, n, std::vector<double>(n)};
  const std::size_t chunks = (n + kChunk - 1) / kChunk;

  detail::parallel_for(chunks, [&](std::size_t begin, std::size_t end) {
    for (std::size_t c = begin; c < end; ++c) {
      rng::Stream stream(seed, static_cast<std::uint64_t>(c));
      const std::size_t lo = c * kChunk;
      const std::size_t hi = std::min(n, lo + kChunk);
      for (std::size_t i = lo; i < hi; ++i) batch.values[i] = sample_cut_value(s, stream);
    }
  });
  return batch;
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> values) : sorted_(std::move(values)) {
  if (sorted_.empty()) throw std::invalid_argument("EmpiricalCdf: values must be nonempty");
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double t) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), t);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double ks_distance(const EmpiricalCdf& e, const std::function<double(double)>& f) {
  const std::vector<double>& xs = e.sorted_values();
  const std::size_t n = xs.size();
  std::vector<double> fx(n);
  detail::parallel_for(n, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) fx[i] = f(xs[i]);
  });

  const double dn = static_cast<double>(n);
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double hi = static_cast<double>(i + 1) / dn - fx[i];  // gap at x_i
    const double lo = fx[i] - static_cast<double>(i) / dn;      // gap just below x_i
    d = std::max({d, hi, lo});
  }
  return d;
}

double ks_distance(const EmpiricalCdf& a, const EmpiricalCdf& b) {
  const std::vector<double>& xa = a.sorted_values();
  const std::vector<double>& xb = b.sorted_values();
  const double na = static_cast<double>(xa.size());
  const double nb = static_cast<double>(xb.size());

  // Merge scan over the union of jump points.
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < xa.size() || j < xb.size()) {
    double x;
    if (j >= xb.size() || (i < xa.size() && xa[i] <= xb[j])) {
      x = xa[i];
    } else {
      x = xb[j];
    }
    while (i < xa.size() && xa[i] <= x) ++i;
    while (j < xb.size() && xb[j] <= x) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

void write_batch_csv(const SampleBatch& batch, std::ostream& os) {
  os << "z\n";
  for (double v : batch.values) os << format_g17(v) << '\n';
}

void write_batch_binary(const SampleBatch& batch, std::ostream& os) {
  for (double v : batch.values) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof(bits));
    if constexpr (std::endian::native == std::endian::big) {
      std::uint64_t swapped = 0;
      for (int k = 0; k < 8; ++k) swapped |= ((bits >> (8 * k)) & 0xFFu) << (8 * (7 - k));
      bits = swapped;
    }
    char buf[8];
    std::memcpy(buf, &bits, sizeof(buf));
    os.write(buf, sizeof(buf));
  }
}

}  // namespace cutapprox
