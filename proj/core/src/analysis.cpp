#include "fqt/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "fqt/errors.hpp"

namespace fqt {
namespace {

void require_membership_unit(const LinearFit& baseline) {
  if (baseline.unit != CovariateUnit::kMembership) {
    throw DomainError("baseline must be fitted in membership units, got " +
                      std::string(to_string(baseline.unit)));
  }
}

}  // namespace

double contribution(double a_mu, const LinearFit& baseline_mu) {
  require_membership_unit(baseline_mu);
  return a_mu - baseline_mu.slope;
}

Intersection intersection(double a_mu, const LinearFit& baseline_mu) {
  require_membership_unit(baseline_mu);
  const double gap = a_mu - baseline_mu.slope;
  if (std::abs(gap) < kParallelTolerance) {
    throw NoCrossingError("group line and baseline are parallel (slope " + std::to_string(a_mu) + ")");
  }
  Intersection out;
  out.mu = baseline_mu.intercept / gap;
  out.y = a_mu * out.mu;
  out.out_of_range = !(out.mu >= 0.0 && out.mu <= 1.0);
  return out;
}

std::vector<std::string> GroupFlags::names() const {
  std::vector<std::string> out;
  if (no_crossing) out.emplace_back("no_crossing");
  if (crossing_above_one) out.emplace_back("crossing_above_full_membership");
  if (crossing_below_zero) out.emplace_back("crossing_below_zero_membership");
  if (multi_category) out.emplace_back("multi_category");
  return out;
}

GroupAnalysis analyze_weights(std::string name, CategoryWeights weights, const LinearFit& baseline_mu,
                              const RampMembership& ramp) {
  if (weights.size() == 0) throw DomainError("group '" + name + "' has no category weights");
  GroupAnalysis out;
  out.group_name = std::move(name);
  out.a_mu = weights[0];
  out.a_x = out.a_mu / ramp.width();
  out.contribution_mu = contribution(out.a_mu, baseline_mu);
  out.weights = std::move(weights);

  if (out.weights.size() > 1) {
    out.flags.multi_category = true;
    return out;
  }
  try {
    const auto cross = intersection(out.a_mu, baseline_mu);
    out.intersection_mu = cross.mu;
    out.intersection_y = cross.y;
    if (cross.out_of_range) {
      out.flags.crossing_above_one = cross.mu > 1.0;
      out.flags.crossing_below_zero = cross.mu < 0.0;
    } else {
      out.threshold_x = ramp.invert(cross.mu);
    }
  } catch (const NoCrossingError&) {
    out.flags.no_crossing = true;
  }
  return out;
}

GroupAnalysis analyze_group(std::string name, const DesignMatrix& x, const WeightVector& g,
                            const ResponseVector& y, const LinearFit& baseline_mu,
                            const RampMembership& ramp) {
  CategoryWeights weights;
  try {
    weights = fqt_fit(x, g, y);
  } catch (const SingularityError& e) {
    throw SingularityError(e.category(), e.category_name(), "group '" + name + "': " + e.what());
  } catch (const FitError& e) {
    throw FitError("group '" + name + "': " + e.what());
  } catch (const DomainError& e) {
    throw DomainError("group '" + name + "': " + e.what());
  }
  return analyze_weights(std::move(name), std::move(weights), baseline_mu, ramp);
}

std::vector<std::string> rank_groups(std::span<const GroupAnalysis> groups) {
  std::vector<const GroupAnalysis*> order;
  order.reserve(groups.size());
  for (const auto& g : groups) order.push_back(&g);
  std::sort(order.begin(), order.end(), [](const GroupAnalysis* l, const GroupAnalysis* r) {
    if (l->contribution_mu != r->contribution_mu) return l->contribution_mu > r->contribution_mu;
    return l->group_name < r->group_name;
  });
  std::vector<std::string> names;
  names.reserve(order.size());
  for (const auto* g : order) names.push_back(g->group_name);
  return names;
}

const GroupAnalysis* AnalysisReport::find(const std::string& name) const {
  for (const auto& g : groups) {
    if (g.group_name == name) return &g;
  }
  return nullptr;
}

AnalysisReport build_report(const LinearFit& baseline_x, const LinearFit& baseline_mu,
                            std::vector<GroupAnalysis> groups) {
  AnalysisReport report;
  report.baseline_x = baseline_x;
  report.baseline_mu = baseline_mu;
  report.groups = std::move(groups);
  report.ranking = rank_groups(report.groups);
  if (!report.ranking.empty()) report.dominant = report.ranking.front();
  return report;
}

AnalysisReport analyze_dataset(const Dataset& dataset, const RampMembership& ramp) {
  const auto n = dataset.size();
  std::vector<double> xs(n);
  std::vector<double> mus(n);
  std::vector<double> ys(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& rec = dataset.records[k];
    xs[k] = rec.covariate_x;
    mus[k] = ramp.eval(rec.covariate_x);
    ys[k] = rec.response_y;
  }

  const auto baseline_x = ols_fit(xs, ys, CovariateUnit::kRawX);
  const auto baseline_mu = ols_fit(mus, ys, CovariateUnit::kMembership);

  const auto design = DesignMatrix::column(mus, "membership");
  const ResponseVector response(ys);
  std::vector<GroupAnalysis> groups;
  groups.reserve(dataset.group_names.size());
  std::vector<double> degrees(n);
  for (const auto& name : dataset.group_names) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto& memberships = dataset.records[k].memberships;
      const auto it = memberships.find(name);
      if (it == memberships.end()) {
        throw DomainError("record '" + dataset.records[k].id + "' has no degree for group '" + name + "'");
      }
      degrees[k] = it->second;
    }
    groups.push_back(analyze_group(name, design, WeightVector(degrees), response, baseline_mu, ramp));
  }

  auto report = build_report(baseline_x, baseline_mu, std::move(groups));
  report.ramp = ramp;
  return report;
}

}  // namespace fqt
