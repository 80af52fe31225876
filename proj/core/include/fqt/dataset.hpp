#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fqt {

/// One observation: raw covariate, percentage response and the degree of the
/// sample in each fuzzy group.
struct SampleRecord {
  std::string id;
  double covariate_x = 0.0;
  double response_y = 0.0;
  std::map<std::string, double> memberships;

  friend bool operator==(const SampleRecord&, const SampleRecord&) = default;
};

/// Ordered records plus the ordered fuzzy-group names they are expected to cover.
struct Dataset {
  std::vector<std::string> group_names;
  std::vector<SampleRecord> records;

  std::size_t size() const noexcept { return records.size(); }
  bool empty() const noexcept { return records.empty(); }

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

/// Raw questionnaire row, before aggregation into membership degrees.
struct QuestionnaireRow {
  std::string id;
  std::map<std::string, std::vector<int>> item_scores;
  double covariate_x = 0.0;
  double response_y = 0.0;
};

/// How a mean 1-5 questionnaire score becomes a membership degree.
enum class NormalizationScheme {
  kDiv5,    // mean / 5, range [0.2, 1]
  kAffine,  // (mean - 1) / 4, range [0, 1]
};

std::string_view to_string(NormalizationScheme scheme) noexcept;
/// Accepts "div5" and "affine"; throws DomainError otherwise.
NormalizationScheme parse_normalization_scheme(std::string_view name);

/// Throws DomainError unless 1 <= mean_score <= 5.
double normalize_score(double mean_score, NormalizationScheme scheme);

/// Mean of the group's items followed by normalize_score.
/// Throws DomainError on an empty list or an item outside the 1-5 scale.
double aggregate_items(const std::vector<int>& items, NormalizationScheme scheme);

struct ParseOptions {
  /// When false, only syntax errors throw: out-of-range values are kept and
  /// empty membership cells become absent groups, so validate() can list them.
  bool check_ranges = true;
};

/// Processed CSV: header `id,<group...>,x,y`.
Dataset parse_processed_csv(std::istream& source, const ParseOptions& options = {});

/// Raw questionnaire CSV: header `id,<group>_q<k>...,x,y`. Items are averaged
/// per group and normalized with `scheme`.
Dataset parse_raw_csv(std::istream& source, NormalizationScheme scheme,
                      const ParseOptions& options = {});

/// Writes the processed format with shortest round-trip number formatting.
void write_processed_csv(const Dataset& dataset, std::ostream& sink);

struct Violation {
  std::string record_id;
  std::string field;
  std::string rule;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// `row=<id> field=<name> rule=<text>`
std::string format_violation(const Violation& violation);

/// Every broken record invariant, in record order. Empty iff the dataset is clean.
std::vector<Violation> validate(const Dataset& dataset);

}  // namespace fqt
