#include "render.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <ostream>

#include "fqt/errors.hpp"
#include "json.hpp"

namespace fqt::cli {
namespace {

using nlohmann::json;

std::string full(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string fixed4_or_dash(const std::optional<double>& v) { return v ? fixed4(*v) : "-"; }
std::string full_or_empty(const std::optional<double>& v) { return v ? full(*v) : ""; }

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

json fit_json(const LinearFit& fit) { return {{"slope", fit.slope}, {"intercept", fit.intercept}}; }

/// Numeric columns are right-aligned; the first column, and the last one when
/// `text_last` is set, are left-aligned.
void write_table(const std::vector<std::vector<std::string>>& rows, std::ostream& out, bool text_last = false) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const auto pad = std::string(width[c] - row[c].size(), ' ');
      if (c) line += "  ";
      const bool left = c == 0 || (text_last && c + 1 == row.size());
      line += left ? row[c] + pad : pad + row[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
}

std::string line_text(const LinearFit& fit, std::string_view var) {
  return "y = " + fixed4(fit.slope) + " " + std::string(var) + (fit.intercept < 0 ? " - " : " + ") +
         fixed4(std::abs(fit.intercept));
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "table") return OutputFormat::kTable;
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  throw DomainError("unknown output format '" + std::string(name) + "'");
}

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

void render_report(const AnalysisReport& report, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::kJson: {
      json groups = json::array();
      for (const auto& g : report.groups) {
        groups.push_back({{"name", g.group_name},
                          {"a_mu", g.a_mu},
                          {"a_x", g.a_x},
                          {"contribution_mu", g.contribution_mu},
                          {"contribution_x", report.contribution_x(g)},
                          {"intersection_mu", optional_json(g.intersection_mu)},
                          {"intersection_y", optional_json(g.intersection_y)},
                          {"threshold_x", optional_json(g.threshold_x)},
                          {"weights", g.weights.a},
                          {"flags", g.flags.names()}});
      }
      json doc = {{"baseline_x", fit_json(report.baseline_x)},
                  {"baseline_mu", fit_json(report.baseline_mu)},
                  {"groups", groups},
                  {"ranking", report.ranking},
                  {"dominant", report.dominant ? json(*report.dominant) : json(nullptr)},
                  {"membership", {{"lower", report.ramp.lower()}, {"upper", report.ramp.upper()}}},
                  {"normalization", report.normalization ? json(std::string(to_string(*report.normalization)))
                                                         : json(nullptr)}};
      out << doc.dump(2) << '\n';
      return;
    }
    case OutputFormat::kCsv: {
      out << "group,a_mu,a_x,contribution_mu,contribution_x,intersection_mu,intersection_y,threshold_x,flags\n";
      for (const auto& g : report.groups) {
        out << g.group_name << ',' << full(g.a_mu) << ',' << full(g.a_x) << ',' << full(g.contribution_mu) << ','
            << full(report.contribution_x(g)) << ',' << full_or_empty(g.intersection_mu) << ','
            << full_or_empty(g.intersection_y) << ',' << full_or_empty(g.threshold_x) << ','
            << join(g.flags.names(), ";") << '\n';
      }
      return;
    }
    case OutputFormat::kTable:
      break;
  }

  out << "Baseline (raw x):       " << line_text(report.baseline_x, "x") << '\n';
  out << "Baseline (membership):  " << line_text(report.baseline_mu, "mu") << '\n';
  out << "Membership ramp:        lower " << fixed4(report.ramp.lower()) << ", upper "
      << fixed4(report.ramp.upper()) << '\n';
  if (report.normalization) out << "Score normalization:    " << to_string(*report.normalization) << '\n';
  out << '\n';

  std::vector<std::vector<std::string>> rows;
  rows.push_back({"group", "a_mu", "a_x", "contribution_mu", "contribution_x", "intersection_mu",
                  "intersection_y", "threshold_x", "flags"});
  for (const auto& g : report.groups) {
    const auto flags = g.flags.names();
    rows.push_back({g.group_name, fixed4(g.a_mu), fixed4(g.a_x), fixed4(g.contribution_mu),
                    fixed4(report.contribution_x(g)), fixed4_or_dash(g.intersection_mu),
                    fixed4_or_dash(g.intersection_y), fixed4_or_dash(g.threshold_x),
                    flags.empty() ? "-" : join(flags, ";")});
  }
  write_table(rows, out, true);
  out << '\n';
  out << "Ranking:   " << (report.ranking.empty() ? "-" : join(report.ranking, " > ")) << '\n';
  if (report.dominant) {
    const auto* g = report.find(*report.dominant);
    out << "Dominant:  " << *report.dominant << " (contribution_mu " << fixed4(g->contribution_mu) << ")\n";
  } else {
    out << "Dominant:  -\n";
  }
  out << "Note: a_x = a_mu / (upper - lower); contribution_x = a_x - raw-x baseline slope.\n";
}

void render_baselines(const LinearFit& baseline_x, const LinearFit& baseline_mu, OutputFormat format,
                      std::ostream& out) {
  switch (format) {
    case OutputFormat::kJson:
      out << json{{"baseline_x", fit_json(baseline_x)}, {"baseline_mu", fit_json(baseline_mu)}}.dump(2) << '\n';
      return;
    case OutputFormat::kCsv:
      out << "unit,slope,intercept\n";
      out << to_string(baseline_x.unit) << ',' << full(baseline_x.slope) << ',' << full(baseline_x.intercept) << '\n';
      out << to_string(baseline_mu.unit) << ',' << full(baseline_mu.slope) << ',' << full(baseline_mu.intercept)
          << '\n';
      return;
    case OutputFormat::kTable:
      out << "Baseline (raw x):       " << line_text(baseline_x, "x") << '\n';
      out << "Baseline (membership):  " << line_text(baseline_mu, "mu") << '\n';
      return;
  }
}

void render_memberships(const RampMembership& ramp, std::span<const double> xs, OutputFormat format,
                        std::ostream& out) {
  switch (format) {
    case OutputFormat::kJson: {
      json rows = json::array();
      for (double x : xs) rows.push_back({{"x", x}, {"mu", ramp.eval(x)}});
      out << rows.dump(2) << '\n';
      return;
    }
    case OutputFormat::kCsv:
      out << "x,mu\n";
      for (double x : xs) out << full(x) << ',' << full(ramp.eval(x)) << '\n';
      return;
    case OutputFormat::kTable: {
      std::vector<std::vector<std::string>> rows{{"x", "mu"}};
      for (double x : xs) rows.push_back({fixed4(x), fixed4(ramp.eval(x))});
      write_table(rows, out);
      return;
    }
  }
}

}  // namespace fqt::cli
