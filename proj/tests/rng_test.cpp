#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "cutapprox/rng.hpp"

using namespace cutapprox;

TEST_CASE("philox4x64-10 known-answer vectors") {
  // Reference words generated with an independent Philox 4x64-10
  // implementation (numpy.random.Philox raw output).
  const auto zeros1 = rng::philox4x64({1, 0, 0, 0}, {0, 0});
  CHECK(zeros1[0] == 0x02f4ba6408e4d89bULL);
  CHECK(zeros1[1] == 0x3dd62b0b9ca8c5b2ULL);
  CHECK(zeros1[2] == 0x1c8667a55d902e79ULL);
  CHECK(zeros1[3] == 0x907d7a052fd5b4dcULL);

  const auto zeros2 = rng::philox4x64({2, 0, 0, 0}, {0, 0});
  CHECK(zeros2[0] == 0x809bf322883987c3ULL);
  CHECK(zeros2[1] == 0x471128b9e807f7ddULL);
  CHECK(zeros2[2] == 0xf250ba0dbec065b7ULL);
  CHECK(zeros2[3] == 0xfc6ed66767a457bcULL);

  const auto zeros3 = rng::philox4x64({3, 0, 0, 0}, {0, 0});
  CHECK(zeros3[0] == 0x40fa86f0f781945dULL);
  CHECK(zeros3[1] == 0x31eed5a366689e12ULL);
  CHECK(zeros3[2] == 0xb6329ed9f2a1cebaULL);
  CHECK(zeros3[3] == 0x219a8fa4c23828e2ULL);

  const auto keyed = rng::philox4x64({1, 0, 0, 0}, {0xdeadbeefULL, 0xfaceb00cULL});
  CHECK(keyed[0] == 0x5346472091524187ULL);
  CHECK(keyed[1] == 0x904aa6ad56b9f8edULL);
  CHECK(keyed[2] == 0x9d4977cef936e148ULL);
  CHECK(keyed[3] == 0xd0617320a02576ceULL);

  const std::uint64_t ff = 0xffffffffffffffffULL;
  const auto allff = rng::philox4x64({0, 0, 0, 0}, {ff, ff});
  CHECK(allff[0] == 0x44b7493d1acfc229ULL);
  CHECK(allff[1] == 0x6636af8e997921ddULL);
  CHECK(allff[2] == 0x3f73e132b5b3780eULL);
  CHECK(allff[3] == 0x605644dde03b01b1ULL);
}

TEST_CASE("stream reproducibility and word layout") {
  rng::Stream a(42, 7);
  rng::Stream b(42, 7);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());

  // First block equals the raw Philox output for counter 0.
  rng::Stream c(42, 7);
  const auto block = rng::philox4x64({0, 0, 0, 0}, {42, 7});
  for (int i = 0; i < 4; ++i) CHECK(c.next_u64() == block[i]);
}

TEST_CASE("distinct streams and seeds differ") {
  rng::Stream base(42, 0);
  rng::Stream other_stream(42, 1);
  rng::Stream other_seed(43, 0);
  int same1 = 0, same2 = 0;
  for (int i = 0; i < 64; ++i) {
    const std::uint64_t x = base.next_u64();
    if (x == other_stream.next_u64()) ++same1;
    if (x == other_seed.next_u64()) ++same2;
  }
  CHECK(same1 == 0);
  CHECK(same2 == 0);
}

TEST_CASE("uniform range and moments") {
  rng::Stream s(7, 0);
  const int n = 200000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = s.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    sum += u;
    sum2 += u * u;
  }
  const double mean = sum / n;
  const double var = sum2 / n - mean * mean;
  CHECK(std::fabs(mean - 0.5) < 0.005);       // ~17 sd
  CHECK(std::fabs(var - 1.0 / 12.0) < 0.005);

  rng::Stream p(7, 1);
  for (int i = 0; i < 10000; ++i) {
    const double u = p.uniform_pos();
    CHECK(u > 0.0);
    CHECK(u <= 1.0);
  }
}

TEST_CASE("normal moments") {
  rng::Stream s(11, 0);
  const int n = 400000;
  double sum = 0.0, sum2 = 0.0, sum4 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = s.normal();
    sum += z;
    const double z2 = z * z;
    sum2 += z2;
    sum4 += z2 * z2;
  }
  CHECK(std::fabs(sum / n) < 0.01);
  CHECK(std::fabs(sum2 / n - 1.0) < 0.02);
  CHECK(std::fabs(sum4 / n - 3.0) < 0.1);  // Gaussian kurtosis
}
