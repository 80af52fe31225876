#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fqt/dataset.hpp"
#include "fqt/membership.hpp"
#include "fqt/regression.hpp"

namespace fqt {

/// Point where the no-intercept group line y = a*mu meets the baseline.
struct Intersection {
  double mu = 0.0;
  double y = 0.0;
  /// Set when mu lies outside [0,1]; the crossing is then an extrapolation.
  bool out_of_range = false;
};

/// Slope difference below which two lines are treated as parallel.
inline constexpr double kParallelTolerance = 1e-12;

/// a_mu - baseline_mu.slope. Throws DomainError unless the baseline is in
/// membership units.
double contribution(double a_mu, const LinearFit& baseline_mu);

/// mu* = intercept / (a_mu - slope), y* = a_mu * mu*.
/// Throws NoCrossingError for parallel lines, DomainError for a raw-x baseline.
Intersection intersection(double a_mu, const LinearFit& baseline_mu);

struct GroupFlags {
  bool no_crossing = false;
  bool crossing_above_one = false;
  bool crossing_below_zero = false;
  /// p > 1: weights are reported but the single-line crossing is undefined.
  bool multi_category = false;

  std::vector<std::string> names() const;
  friend bool operator==(const GroupFlags&, const GroupFlags&) = default;
};

struct GroupAnalysis {
  std::string group_name;
  CategoryWeights weights;
  /// Weight of the first category per unit membership.
  double a_mu = 0.0;
  /// a_mu / (upper - lower): the same weight per covariate unit.
  double a_x = 0.0;
  double contribution_mu = 0.0;
  std::optional<double> intersection_mu;
  std::optional<double> intersection_y;
  /// ramp.invert(mu*), present only when mu* lies in [0,1].
  std::optional<double> threshold_x;
  GroupFlags flags;
};

/// Derives a GroupAnalysis from already-fitted weights.
GroupAnalysis analyze_weights(std::string name, CategoryWeights weights, const LinearFit& baseline_mu,
                              const RampMembership& ramp);

/// fqt_fit followed by analyze_weights. Fit errors are rethrown with the
/// group name prefixed; a missing crossing is reported through the flags.
GroupAnalysis analyze_group(std::string name, const DesignMatrix& x, const WeightVector& g,
                            const ResponseVector& y, const LinearFit& baseline_mu,
                            const RampMembership& ramp);

/// Group names by contribution_mu descending, ties broken by name.
std::vector<std::string> rank_groups(std::span<const GroupAnalysis> groups);

struct AnalysisReport {
  LinearFit baseline_x{0.0, 0.0, CovariateUnit::kRawX};
  LinearFit baseline_mu{0.0, 0.0, CovariateUnit::kMembership};
  std::vector<GroupAnalysis> groups;
  std::vector<std::string> ranking;
  /// Empty when there are no groups.
  std::optional<std::string> dominant;

  RampMembership ramp;
  /// Scheme that produced the degrees, when they came from raw questionnaires.
  std::optional<NormalizationScheme> normalization;

  /// a_x - baseline_x.slope, the per-covariate-unit counterpart of contribution_mu.
  double contribution_x(const GroupAnalysis& group) const noexcept { return group.a_x - baseline_x.slope; }
  const GroupAnalysis* find(const std::string& name) const;
};

AnalysisReport build_report(const LinearFit& baseline_x, const LinearFit& baseline_mu,
                            std::vector<GroupAnalysis> groups);

/// Full pipeline over a dataset: both baselines, then one single-category
/// fit per fuzzy group with the ramp-transformed covariate as the category.
/// Throws DomainError if a record lacks a degree for a declared group.
AnalysisReport analyze_dataset(const Dataset& dataset, const RampMembership& ramp);

}  // namespace fqt
