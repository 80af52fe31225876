#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "fqt/analysis.hpp"
#include "fqt/membership.hpp"

namespace fqt::cli {

enum class OutputFormat { kTable, kJson, kCsv };

/// Accepts "table", "json", "csv"; throws DomainError otherwise.
OutputFormat parse_output_format(std::string_view name);

/// Fixed-point with 4 decimals, the precision used in human-readable output.
std::string fixed4(double v);

// Table output rounds to 4 decimals; JSON and CSV carry full double precision.
void render_report(const AnalysisReport& report, OutputFormat format, std::ostream& out);
void render_baselines(const LinearFit& baseline_x, const LinearFit& baseline_mu, OutputFormat format,
                      std::ostream& out);
void render_memberships(const RampMembership& ramp, std::span<const double> xs, OutputFormat format,
                        std::ostream& out);

}  // namespace fqt::cli
