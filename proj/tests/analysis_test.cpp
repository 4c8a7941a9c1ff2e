#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "cutapprox/analysis.hpp"
#include "cutapprox/approximation.hpp"
#include "test_util.hpp"

using namespace cutapprox;

namespace {
const Scenario kBase{4.7, 0.3, 1.0, 1.0};
const GridSpec kGrid = GridSpec::analysis_default();
}

TEST_CASE("sup_distance: identical kinds give zero, empirical rejected") {
  CHECK(sup_distance(kBase, CdfKind::limit, CdfKind::limit, kGrid) == 0.0);
  CHECK(sup_distance(kBase, CdfKind::exact, CdfKind::exact, kGrid) == 0.0);
  CHECK_THROWS_AS(sup_distance(kBase, CdfKind::empirical, CdfKind::limit, kGrid),
                  std::invalid_argument);
}

TEST_CASE("sup_distance: pareto-form collapses onto the limit for huge lambda") {
  const Scenario s{4.7, 0.3, 1e10, 1.0};
  CHECK(sup_distance(s, CdfKind::approx_pareto, CdfKind::limit, kGrid) < 1e-9);
}

TEST_CASE("sup_distance: strong-signal regime is far worse than weak-signal") {
  const Scenario strong{4.7, 0.3, 0.1, 1.0};
  const Scenario weak{4.7, 0.3, 1000.0, 1.0};
  const double d_strong = sup_distance(strong, CdfKind::exact, CdfKind::approx_pareto, kGrid);
  const double d_weak = sup_distance(weak, CdfKind::exact, CdfKind::approx_pareto, kGrid);
  CHECK(d_strong > d_weak);
  CHECK(d_weak < 0.01);
}

TEST_CASE("scr_db values and the infinite-mean guard") {
  // lambda = (alpha-1) mu / beta gives ratio 1, i.e. 0 dB
  const double alpha = 4.7, beta = 0.3, mu = 2.0;
  const Scenario balanced{alpha, beta, (alpha - 1.0) * mu / beta, mu};
  CHECK(scr_db(balanced) == doctest::Approx(0.0).epsilon(1e-12));

  CHECK(scr_db(kBase) == doctest::Approx(10.0 * std::log10(3.7 / 0.3)).epsilon(1e-12));
  CHECK(scr_db(kBase) == doctest::Approx(10.9).epsilon(1e-2));

  CHECK_THROWS_AS(scr_db({1.0, 0.3, 1.0, 1.0}), std::domain_error);
  CHECK_THROWS_AS(scr_db({0.7, 0.3, 1.0, 1.0}), std::domain_error);
}

TEST_CASE("sweep: row fields, validity flags, and the known trend") {
  const std::vector<double> ratios{0.1, 1.0, 10.0, 100.0, 1000.0};
  const ValidityReport report = sweep(kBase, ratios);
  REQUIRE(report.rows.size() == 5);

  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const ValidityRow& row = report.rows[i];
    CHECK(row.lambda_over_mu == ratios[i]);
    CHECK(row.validity_ratio ==
          doctest::Approx(kBase.mu / (ratios[i] * kBase.mu + kBase.mu)).epsilon(1e-14));
    CHECK(row.error.empty());
    CHECK(row.sup_dist_exp >= 0.0);
    CHECK(row.sup_dist_exp <= 1.0);
    CHECK(row.sup_dist_pareto >= 0.0);
    CHECK(row.sup_dist_pareto <= 1.0);
    CHECK(row.sup_dist_limit >= 0.0);
    CHECK(row.sup_dist_limit <= 1.0);
    CHECK(row.valid == (row.sup_dist_pareto < kSupDistParetoThreshold));
  }

  // The approximation sharpens monotonically from ratio 1 upward; the
  // ratio-0.1 row sits in the strong-signal regime where the sup distance
  // is non-monotone (verified against two independent Monte Carlo
  // implementations), so it is excluded from the strictness check.
  for (std::size_t i = 2; i < report.rows.size(); ++i)
    CHECK(report.rows[i].sup_dist_pareto < report.rows[i - 1].sup_dist_pareto);

  // ratio 1000: comfortably valid, and far below 0 dB
  const ValidityRow& last = report.rows.back();
  CHECK(last.sup_dist_pareto < 0.01);
  CHECK(last.valid);
  CHECK(last.scr_db < -10.0);

  // every VALID row pairs with scr_db below -10 dB
  for (const ValidityRow& row : report.rows)
    if (row.valid) CHECK(row.scr_db < kScrDbThreshold);
}

TEST_CASE("sweep: single high ratio passes the artifact threshold") {
  const ValidityReport report = sweep(kBase, {1000.0});
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0].sup_dist_pareto < 0.01);
}

TEST_CASE("sweep: sandwich consistency of the two approximation distances") {
  const ValidityReport report = sweep(kBase, {1.0, 10.0, 100.0});
  for (const ValidityRow& row : report.rows) {
    const Scenario s{kBase.alpha, kBase.beta, row.lambda_over_mu * kBase.mu, kBase.mu};
    const GContext ctx = GContext::from_scenario(s);
    const double exp_rate = validity_ratio(ctx) * ctx.g1;
    double max_factor = 0.0;
    for (double t : kGrid.materialize(s))
      max_factor = std::max(max_factor, -std::expm1(-exp_rate * t));
    CHECK(row.sup_dist_exp <= row.sup_dist_pareto + max_factor + 1e-12);
  }
}

TEST_CASE("sweep input validation") {
  CHECK_THROWS_AS(sweep(kBase, {}), std::invalid_argument);
  CHECK_THROWS_AS(sweep(kBase, {1.0, -2.0}), std::invalid_argument);
  CHECK_THROWS_AS(sweep(kBase, {0.0}), std::invalid_argument);
}

TEST_CASE("sweep with alpha <= 1 records the scr note and still measures distances") {
  const Scenario heavy{0.9, 0.3, 1.0, 1.0};
  const ValidityReport report = sweep(heavy, {10.0, 1000.0});
  CHECK(!report.note.empty());
  for (const ValidityRow& row : report.rows) {
    CHECK(std::isnan(row.scr_db));
    CHECK(row.error.empty());
    CHECK(std::isfinite(row.sup_dist_pareto));
  }
}

TEST_CASE("reports serialize reproducibly with stable schema") {
  const ValidityReport report = sweep(kBase, {1.0, 1000.0});
  const std::string json1 = report_to_json(report);
  const std::string json2 = report_to_json(sweep(kBase, {1.0, 1000.0}));
  CHECK(json1 == json2);

  CHECK(json1.find("\"meta\"") != std::string::npos);
  CHECK(json1.find("\"rows\"") != std::string::npos);
  CHECK(json1.find("\"lambda_over_mu\"") != std::string::npos);
  CHECK(json1.find("\"scr_db\"") != std::string::npos);
  CHECK(json1.find("\"validity_ratio\"") != std::string::npos);
  CHECK(json1.find("\"sup_dist_exp\"") != std::string::npos);
  CHECK(json1.find("\"sup_dist_pareto\"") != std::string::npos);
  CHECK(json1.find("\"sup_dist_limit\"") != std::string::npos);
  CHECK(json1.find("\"thresholds\"") != std::string::npos);

  const std::string csv = report_to_csv(report);
  std::istringstream is(csv);
  std::string header;
  REQUIRE(std::getline(is, header));
  CHECK(header ==
        "lambda_over_mu,scr_db,validity_ratio,sup_dist_exp,sup_dist_pareto,sup_dist_limit,valid");
  std::size_t rows = 0;
  std::string line;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == 2);
}

TEST_CASE("ratios are reported in ascending order regardless of input order") {
  const ValidityReport report = sweep(kBase, {100.0, 1.0, 10.0});
  REQUIRE(report.rows.size() == 3);
  CHECK(report.rows[0].lambda_over_mu == 1.0);
  CHECK(report.rows[1].lambda_over_mu == 10.0);
  CHECK(report.rows[2].lambda_over_mu == 100.0);
}
