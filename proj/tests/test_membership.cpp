#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fqt/errors.hpp"
#include "fqt/membership.hpp"
#include "fqt/synth.hpp"

using fqt::RampMembership;

TEST_CASE("ramp evaluates the attendance membership") {
  const RampMembership ramp;
  CHECK(ramp.lower() == 0.0);
  CHECK(ramp.upper() == 16.0);
  CHECK(ramp.eval(8) == 0.5);
  CHECK(ramp.eval(16) == 1.0);
  CHECK(ramp.eval(20) == 1.0);
  CHECK(ramp.eval(0) == 0.0);
  CHECK(ramp.eval(13) == 0.8125);
}

TEST_CASE("ramp with a shifted lower bound") {
  const RampMembership ramp(4, 12);
  CHECK(ramp.eval(2) == 0.0);
  CHECK(ramp.eval(8) == 0.5);
  CHECK(ramp.invert(0.25) == 6.0);
  CHECK(ramp.width() == 8.0);
}

TEST_CASE("invert maps degrees back to covariate values") {
  const RampMembership ramp;
  CHECK(ramp.invert(0.7765) == doctest::Approx(12.424).epsilon(1e-12));
  CHECK(ramp.invert(1.0) == 16.0);
  // Professional group threshold; multiplier 16, not 4.
  CHECK(ramp.invert(0.7741) == doctest::Approx(12.3856).epsilon(1e-12));
  CHECK(ramp.invert(0.0) == 0.0);
}

TEST_CASE("invalid bounds and degrees are domain errors") {
  CHECK_THROWS_AS(RampMembership(16, 16), fqt::DomainError);
  CHECK_THROWS_AS(RampMembership(16, 0), fqt::DomainError);
  const RampMembership ramp;
  CHECK_THROWS_AS(ramp.invert(-0.01), fqt::DomainError);
  CHECK_THROWS_AS(ramp.invert(1.01), fqt::DomainError);
}

TEST_CASE("property: round trip, monotonicity and clamping") {
  fqt::Xoshiro256 rng(2024);
  for (int i = 0; i < 2000; ++i) {
    const double lower = rng.uniform(0.0, 10.0);
    const RampMembership ramp(lower, lower + rng.uniform(0.5, 30.0));

    const double mu = rng.uniform();
    CHECK(std::abs(ramp.eval(ramp.invert(mu)) - mu) <= 1e-12);

    const double x1 = rng.uniform(0.0, 50.0);
    const double x2 = rng.uniform(0.0, 50.0);
    if (x1 <= x2) {
      CHECK(ramp.eval(x1) <= ramp.eval(x2));
    } else {
      CHECK(ramp.eval(x2) <= ramp.eval(x1));
    }
    const double v = ramp.eval(x1);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);

    CHECK(ramp.eval(ramp.upper() + rng.uniform(1e-9, 100.0)) == 1.0);
  }
}
