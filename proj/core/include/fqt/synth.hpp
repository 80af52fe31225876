#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fqt/dataset.hpp"
#include "fqt/membership.hpp"

namespace fqt {

/// xoshiro256** (Blackman & Vigna, public domain) seeded through SplitMix64.
/// Output is fully specified, so a seed yields the same stream on every
/// platform and in any language that implements the two algorithms.
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform in [0,1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal via Box-Muller (cosine branch only; one draw = two uniforms).
  double gaussian();

 private:
  std::array<std::uint64_t, 4> s_{};
};

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

struct SynthConfig {
  std::size_t n = 100;
  /// Ground-truth weight per fuzzy group, in output column order.
  std::vector<std::pair<std::string, double>> true_a = {{"group", 80.0}};
  double noise_sigma = 0.0;
  Interval membership_range{0.5, 1.0};
  Interval covariate_range{6.0, 16.0};
  RampMembership ramp;
  std::uint64_t seed = 0;
};

struct SynthResult {
  Dataset dataset;
  /// Responses that fell outside [0,100] and were clamped.
  std::size_t clamped = 0;
};

/// Throws DomainError when n == 0, sigma < 0, a range is empty or leaves its
/// legal domain, or group names repeat.
void check_config(const SynthConfig& cfg);

/// Per record, in this order: covariate x ~ U(covariate_range), one degree per
/// group ~ U(membership_range), noise e ~ N(0, sigma). The response is
///   y = (sum_g mu_g a_g / sum_g mu_g) * ramp(x) + e, clamped to [0,100],
/// which reduces to y = a * ramp(x) + e for a single group.
SynthResult generate(const SynthConfig& cfg);

}  // namespace fqt
