#include "fqt/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>

#include "fqt/errors.hpp"

namespace fqt {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      return fields;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

/// Reads the next non-blank line; false at end of stream.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!trim(line).empty()) return true;
  }
  return false;
}

double parse_number(std::string_view cell, std::size_t row, const std::string& column) {
  if (cell.empty()) throw ParseError(row, column, "missing value");
  if (cell.front() == '+') cell.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(value)) {
    throw ParseError(row, column, "malformed number '" + std::string(cell) + "'");
  }
  return value;
}

int parse_score(std::string_view cell, std::size_t row, const std::string& column) {
  if (cell.empty()) throw ParseError(row, column, "missing score");
  int value = 0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size()) {
    throw ParseError(row, column, "score '" + std::string(cell) + "' is not an integer");
  }
  if (value < 1 || value > 5) {
    throw ParseError(row, column, "score " + std::to_string(value) + " is outside the 1-5 scale");
  }
  return value;
}

struct Header {
  std::vector<std::string> names;
  std::size_t x_col = 0;
  std::size_t y_col = 0;
};

/// Shared header handling: `id` first, `x` and `y` present, everything else
/// is returned as a middle column.
Header read_header(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw ParseError(0, "id", "missing header row");
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);

  Header header;
  std::set<std::string> seen;
  for (auto field : split_fields(line)) {
    std::string name(field);
    if (name.empty()) throw ParseError(0, name, "empty column name");
    if (!seen.insert(name).second) throw ParseError(0, name, "duplicate column");
    header.names.push_back(std::move(name));
  }
  if (header.names.front() != "id") throw ParseError(0, "id", "missing column (must be first)");
  bool has_x = false;
  bool has_y = false;
  for (std::size_t c = 0; c < header.names.size(); ++c) {
    if (header.names[c] == "x") {
      header.x_col = c;
      has_x = true;
    } else if (header.names[c] == "y") {
      header.y_col = c;
      has_y = true;
    }
  }
  if (!has_x) throw ParseError(0, "x", "missing column");
  if (!has_y) throw ParseError(0, "y", "missing column");
  return header;
}

void check_covariate_response(double x, double y, std::size_t row) {
  if (x < 0.0) throw ParseError(row, "x", "covariate must be >= 0");
  if (y < 0.0 || y > 100.0) throw ParseError(row, "y", "response must lie in [0,100]");
}

/// Group name of a raw item column `<group>_q<digits>`, or empty if malformed.
std::string item_group(const std::string& column) {
  const auto pos = column.rfind("_q");
  if (pos == std::string::npos || pos == 0 || pos + 2 == column.size()) return {};
  for (std::size_t i = pos + 2; i < column.size(); ++i) {
    if (column[i] < '0' || column[i] > '9') return {};
  }
  return column.substr(0, pos);
}

void append_number(std::string& out, double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  out.append(buf, ptr);
}

}  // namespace

std::string_view to_string(NormalizationScheme scheme) noexcept {
  switch (scheme) {
    case NormalizationScheme::kDiv5:
      return "div5";
    case NormalizationScheme::kAffine:
      return "affine";
  }
  return "unknown";
}

NormalizationScheme parse_normalization_scheme(std::string_view name) {
  if (name == "div5") return NormalizationScheme::kDiv5;
  if (name == "affine") return NormalizationScheme::kAffine;
  throw DomainError("unknown normalization scheme '" + std::string(name) + "'");
}

double normalize_score(double mean_score, NormalizationScheme scheme) {
  if (!(mean_score >= 1.0 && mean_score <= 5.0)) {
    throw DomainError("mean score " + std::to_string(mean_score) + " is outside [1,5]");
  }
  switch (scheme) {
    case NormalizationScheme::kDiv5:
      return mean_score / 5.0;
    case NormalizationScheme::kAffine:
      return (mean_score - 1.0) / 4.0;
  }
  throw DomainError("unknown normalization scheme");
}

double aggregate_items(const std::vector<int>& items, NormalizationScheme scheme) {
  if (items.empty()) throw DomainError("a group needs at least one item score");
  long sum = 0;
  for (int score : items) {
    if (score < 1 || score > 5) {
      throw DomainError("item score " + std::to_string(score) + " is outside the 1-5 scale");
    }
    sum += score;
  }
  return normalize_score(static_cast<double>(sum) / static_cast<double>(items.size()), scheme);
}

Dataset parse_processed_csv(std::istream& source, const ParseOptions& options) {
  const Header header = read_header(source);
  Dataset dataset;
  std::vector<std::size_t> group_cols;
  for (std::size_t c = 1; c < header.names.size(); ++c) {
    if (c == header.x_col || c == header.y_col) continue;
    group_cols.push_back(c);
    dataset.group_names.push_back(header.names[c]);
  }

  std::string line;
  std::size_t row = 0;
  while (next_line(source, line)) {
    ++row;
    const auto fields = split_fields(line);
    if (fields.size() != header.names.size()) {
      throw ParseError(row, fields.size() < header.names.size() ? header.names[fields.size()] : "",
                       "expected " + std::to_string(header.names.size()) + " fields, found " +
                           std::to_string(fields.size()));
    }
    SampleRecord rec;
    rec.id = std::string(fields[0]);
    if (rec.id.empty()) throw ParseError(row, "id", "missing value");
    rec.covariate_x = parse_number(fields[header.x_col], row, "x");
    rec.response_y = parse_number(fields[header.y_col], row, "y");
    if (options.check_ranges) check_covariate_response(rec.covariate_x, rec.response_y, row);
    for (std::size_t g = 0; g < group_cols.size(); ++g) {
      const auto& name = dataset.group_names[g];
      const auto cell = fields[group_cols[g]];
      if (cell.empty() && !options.check_ranges) continue;
      const double mu = parse_number(cell, row, name);
      if (options.check_ranges && !(mu >= 0.0 && mu <= 1.0)) {
        throw ParseError(row, name, "membership degree " + std::string(cell) + " is outside [0,1]");
      }
      rec.memberships.emplace(name, mu);
    }
    dataset.records.push_back(std::move(rec));
  }
  return dataset;
}

Dataset parse_raw_csv(std::istream& source, NormalizationScheme scheme, const ParseOptions& options) {
  const Header header = read_header(source);
  Dataset dataset;
  std::vector<std::pair<std::size_t, std::string>> item_cols;  // column -> group
  for (std::size_t c = 1; c < header.names.size(); ++c) {
    if (c == header.x_col || c == header.y_col) continue;
    auto group = item_group(header.names[c]);
    if (group.empty()) {
      throw ParseError(0, header.names[c], "item columns must be named <group>_q<number>");
    }
    if (std::find(dataset.group_names.begin(), dataset.group_names.end(), group) ==
        dataset.group_names.end()) {
      dataset.group_names.push_back(group);
    }
    item_cols.emplace_back(c, std::move(group));
  }

  std::string line;
  std::size_t row = 0;
  while (next_line(source, line)) {
    ++row;
    const auto fields = split_fields(line);
    if (fields.size() != header.names.size()) {
      throw ParseError(row, fields.size() < header.names.size() ? header.names[fields.size()] : "",
                       "expected " + std::to_string(header.names.size()) + " fields, found " +
                           std::to_string(fields.size()));
    }
    QuestionnaireRow q;
    q.id = std::string(fields[0]);
    if (q.id.empty()) throw ParseError(row, "id", "missing value");
    q.covariate_x = parse_number(fields[header.x_col], row, "x");
    q.response_y = parse_number(fields[header.y_col], row, "y");
    if (options.check_ranges) check_covariate_response(q.covariate_x, q.response_y, row);
    for (const auto& [col, group] : item_cols) {
      q.item_scores[group].push_back(parse_score(fields[col], row, header.names[col]));
    }

    SampleRecord rec{q.id, q.covariate_x, q.response_y, {}};
    for (const auto& [group, items] : q.item_scores) {
      rec.memberships.emplace(group, aggregate_items(items, scheme));
    }
    dataset.records.push_back(std::move(rec));
  }
  return dataset;
}

void write_processed_csv(const Dataset& dataset, std::ostream& sink) {
  std::string out = "id";
  for (const auto& g : dataset.group_names) out += "," + g;
  out += ",x,y\n";
  for (const auto& rec : dataset.records) {
    out += rec.id;
    for (const auto& g : dataset.group_names) {
      out += ',';
      if (auto it = rec.memberships.find(g); it != rec.memberships.end()) append_number(out, it->second);
    }
    out += ',';
    append_number(out, rec.covariate_x);
    out += ',';
    append_number(out, rec.response_y);
    out += '\n';
  }
  sink << out;
}

std::string format_violation(const Violation& violation) {
  return "row=" + violation.record_id + " field=" + violation.field + " rule=" + violation.rule;
}

std::vector<Violation> validate(const Dataset& dataset) {
  std::vector<Violation> out;
  const std::set<std::string> declared(dataset.group_names.begin(), dataset.group_names.end());
  for (const auto& rec : dataset.records) {
    if (!std::isfinite(rec.covariate_x) || rec.covariate_x < 0.0) {
      out.push_back({rec.id, "x", "covariate must be a finite value >= 0"});
    }
    if (!(rec.response_y >= 0.0 && rec.response_y <= 100.0)) {
      out.push_back({rec.id, "y", "response must lie in [0,100]"});
    }
    for (const auto& g : dataset.group_names) {
      const auto it = rec.memberships.find(g);
      if (it == rec.memberships.end()) {
        out.push_back({rec.id, g, "group coverage: record has no degree for declared group"});
      } else if (!(it->second >= 0.0 && it->second <= 1.0)) {
        out.push_back({rec.id, g, "membership degree must lie in [0,1]"});
      }
    }
    for (const auto& [g, mu] : rec.memberships) {
      if (!declared.count(g)) {
        out.push_back({rec.id, g, "group coverage: group is not declared by the dataset"});
      }
    }
  }
  return out;
}

}  // namespace fqt
