#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "fqt/errors.hpp"
#include "fqt/regression.hpp"
#include "fqt/synth.hpp"

using namespace fqt;

namespace {

std::string serialize(const Dataset& ds) {
  std::ostringstream out;
  write_processed_csv(ds, out);
  return out.str();
}

double recovered_weight(const Dataset& ds, const RampMembership& ramp, const std::string& group) {
  std::vector<double> mu;
  std::vector<double> g;
  std::vector<double> y;
  for (const auto& r : ds.records) {
    mu.push_back(ramp.eval(r.covariate_x));
    g.push_back(r.memberships.at(group));
    y.push_back(r.response_y);
  }
  return fqt_fit(DesignMatrix::column(mu), WeightVector(g), ResponseVector(y))[0];
}

SynthConfig single(std::size_t n, double sigma, double a, std::uint64_t seed) {
  SynthConfig cfg;
  cfg.n = n;
  cfg.noise_sigma = sigma;
  cfg.true_a = {{"competence", a}};
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("generator matches the reference xoshiro256** stream") {
  // SplitMix64(0) seeding; values from an independent implementation.
  Xoshiro256 rng(0);
  CHECK(rng.next() == 0x99ec5f36cb75f2b4ULL);
  CHECK(rng.next() == 0xbf6e1f784956452aULL);
  CHECK(rng.next() == 0x1a5f849d4933e6e0ULL);

  Xoshiro256 u(1);
  for (int i = 0; i < 10000; ++i) {
    const double v = u.uniform();
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
  }
}

TEST_CASE("gaussian draws have unit scale") {
  Xoshiro256 rng(99);
  double sum = 0.0;
  double sq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double z = rng.gaussian();
    sum += z;
    sq += z * z;
  }
  CHECK(std::abs(sum / n) < 0.01);
  CHECK(std::abs(sq / n - 1.0) < 0.01);
}

TEST_CASE("zero noise responses follow the model exactly") {
  const auto result = generate(single(3, 0.0, 80.0, 42));
  const RampMembership ramp;
  REQUIRE(result.dataset.size() == 3);
  for (const auto& r : result.dataset.records) CHECK(r.response_y == 80.0 * ramp.eval(r.covariate_x));
  CHECK(result.clamped == 0);
}

TEST_CASE("identical seeds give identical datasets") {
  SynthConfig cfg = single(500, 5.0, 90.0, 17);
  cfg.true_a = {{"pedagogic", 85}, {"professional", 92}};
  CHECK(serialize(generate(cfg).dataset) == serialize(generate(cfg).dataset));
  auto other = cfg;
  other.seed = 18;
  CHECK(serialize(generate(cfg).dataset) != serialize(generate(other).dataset));
}

TEST_CASE("records respect the configured ranges") {
  SynthConfig cfg = single(2000, 5.0, 90.0, 3);
  cfg.membership_range = {0.3, 0.6};
  cfg.covariate_range = {2.0, 9.0};
  const auto ds = generate(cfg).dataset;
  for (const auto& r : ds.records) {
    CHECK(r.covariate_x >= 2.0);
    CHECK(r.covariate_x <= 9.0);
    CHECK(r.memberships.at("competence") >= 0.3);
    CHECK(r.memberships.at("competence") <= 0.6);
    CHECK(r.response_y >= 0.0);
    CHECK(r.response_y <= 100.0);
  }
}

TEST_CASE("recovery under noise") {
  const RampMembership ramp;
  CHECK(std::abs(recovered_weight(generate(single(1000, 5.0, 90.0, 7)).dataset, ramp, "competence") - 90.0) <= 1.0);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto result = generate(single(1000, 5.0, 90.0, seed));
    CHECK(std::abs(recovered_weight(result.dataset, ramp, "competence") - 90.0) <= 1.0);
    CHECK(result.clamped < 10);  // under 1% of samples
  }
}

TEST_CASE("zero-noise recovery is exact") {
  const RampMembership ramp;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    CHECK(std::abs(recovered_weight(generate(single(1000, 0.0, 80.0, seed)).dataset, ramp, "competence") - 80.0) <=
          1e-8);
  }
}

TEST_CASE("median recovery error does not grow with n") {
  const RampMembership ramp;
  double previous = 1e300;
  for (std::size_t n : {100, 1000, 10000}) {
    std::vector<double> errors;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      errors.push_back(std::abs(recovered_weight(generate(single(n, 5.0, 90.0, seed)).dataset, ramp, "competence") - 90.0));
    }
    std::sort(errors.begin(), errors.end());
    const double median = (errors[9] + errors[10]) / 2.0;
    CHECK(median <= previous);
    previous = median;
  }
}

TEST_CASE("clamped responses are counted") {
  auto cfg = single(1000, 0.0, 150.0, 1);
  cfg.covariate_range = {16.0, 20.0};
  const auto result = generate(cfg);
  CHECK(result.clamped == 1000);
  for (const auto& r : result.dataset.records) CHECK(r.response_y == 100.0);
}

TEST_CASE("multi-group weights keep their ordering") {
  SynthConfig cfg;
  cfg.n = 5000;
  cfg.true_a = {{"pedagogic", 85}, {"professional", 95}, {"personality", 90}, {"social", 80}};
  cfg.noise_sigma = 2;
  cfg.membership_range = {0.2, 1.0};
  cfg.seed = 4;
  const auto ds = generate(cfg).dataset;
  const RampMembership ramp;
  const double ped = recovered_weight(ds, ramp, "pedagogic");
  const double pro = recovered_weight(ds, ramp, "professional");
  const double per = recovered_weight(ds, ramp, "personality");
  const double soc = recovered_weight(ds, ramp, "social");
  CHECK(pro > per);
  CHECK(per > ped);
  CHECK(ped > soc);
}

TEST_CASE("invalid configurations") {
  auto cfg = single(0, 1.0, 80.0, 1);
  CHECK_THROWS_AS(generate(cfg), DomainError);
  cfg = single(10, -1.0, 80.0, 1);
  CHECK_THROWS_AS(generate(cfg), DomainError);
  cfg = single(10, 1.0, 80.0, 1);
  cfg.membership_range = {0.5, 1.5};
  CHECK_THROWS_AS(generate(cfg), DomainError);
  cfg = single(10, 1.0, 80.0, 1);
  cfg.covariate_range = {5, 2};
  CHECK_THROWS_AS(generate(cfg), DomainError);
  cfg = single(10, 1.0, 80.0, 1);
  cfg.true_a = {{"a", 1}, {"a", 2}};
  CHECK_THROWS_AS(generate(cfg), DomainError);
  cfg.true_a = {{"x", 1}};
  CHECK_THROWS_AS(generate(cfg), DomainError);
}
