#include "fqt/synth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include "fqt/errors.hpp"

namespace fqt {
namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

void check_interval(const Interval& r, double lo, double hi, const char* what) {
  if (!(r.lo <= r.hi) || !(r.lo >= lo) || !(r.hi <= hi)) {
    throw DomainError(std::string(what) + " [" + std::to_string(r.lo) + ", " + std::to_string(r.hi) +
                      "] is not a valid sub-interval of [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  }
}

}  // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed) {
  for (auto& word : s_) word = splitmix64(seed);
}

std::uint64_t Xoshiro256::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Xoshiro256::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Xoshiro256::gaussian() {
  const double u1 = 1.0 - uniform();  // (0,1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

void check_config(const SynthConfig& cfg) {
  if (cfg.n == 0) throw DomainError("synth: n must be >= 1");
  if (!(cfg.noise_sigma >= 0.0) || !std::isfinite(cfg.noise_sigma)) {
    throw DomainError("synth: noise sigma must be a finite value >= 0");
  }
  check_interval(cfg.membership_range, 0.0, 1.0, "synth: membership range");
  check_interval(cfg.covariate_range, 0.0, std::numeric_limits<double>::max(), "synth: covariate range");
  std::set<std::string> names;
  for (const auto& [name, a] : cfg.true_a) {
    if (name.empty() || name == "id" || name == "x" || name == "y") {
      throw DomainError("synth: invalid group name '" + name + "'");
    }
    if (!names.insert(name).second) throw DomainError("synth: duplicate group '" + name + "'");
    if (!std::isfinite(a)) throw DomainError("synth: weight for '" + name + "' is not finite");
  }
}

SynthResult generate(const SynthConfig& cfg) {
  check_config(cfg);
  Xoshiro256 rng(cfg.seed);
  SynthResult out;
  auto& ds = out.dataset;
  for (const auto& [name, a] : cfg.true_a) ds.group_names.push_back(name);
  ds.records.reserve(cfg.n);

  double mean_a = 0.0;
  for (const auto& [name, a] : cfg.true_a) mean_a += a;
  if (!cfg.true_a.empty()) mean_a /= static_cast<double>(cfg.true_a.size());

  for (std::size_t k = 0; k < cfg.n; ++k) {
    SampleRecord rec;
    rec.id = std::to_string(k + 1);
    rec.covariate_x = rng.uniform(cfg.covariate_range.lo, cfg.covariate_range.hi);

    double weight_sum = 0.0;
    double weighted_a = 0.0;
    for (const auto& [name, a] : cfg.true_a) {
      const double mu = rng.uniform(cfg.membership_range.lo, cfg.membership_range.hi);
      rec.memberships.emplace(name, mu);
      weight_sum += mu;
      weighted_a += mu * a;
    }
    double effective_a = mean_a;
    if (cfg.true_a.size() == 1) {
      effective_a = cfg.true_a.front().second;
    } else if (weight_sum > 0.0) {
      effective_a = weighted_a / weight_sum;
    }
    const double noise = cfg.noise_sigma * rng.gaussian();

    double y = effective_a * cfg.ramp.eval(rec.covariate_x) + noise;
    if (y < 0.0 || y > 100.0) {
      y = std::clamp(y, 0.0, 100.0);
      ++out.clamped;
    }
    rec.response_y = y;
    ds.records.push_back(std::move(rec));
  }
  return out;
}

}  // namespace fqt
