#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fqt/dataset.hpp"
#include "fqt/synth.hpp"
#include "render.hpp"

namespace fqt::cli {

/// Process exit statuses.
enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,  // usage, I/O, parse or validation failures
  kExitFitError = 2,    // singular normal equations, degenerate covariate, too few records
};

enum class Schema { kProcessed, kRaw };

struct CliConfig {
  std::string input;
  Schema schema = Schema::kProcessed;
  /// Only meaningful with the raw schema.
  std::optional<NormalizationScheme> normalization;
  double mf_lower = RampMembership::kDefaultLower;
  double mf_upper = RampMembership::kDefaultUpper;
  OutputFormat format = OutputFormat::kTable;
  std::uint64_t seed = 0;
  /// Empty means standard output.
  std::string output;
};

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_analyze(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_baseline(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_membership(const CliConfig& cfg, const std::vector<double>& xs, std::ostream& out, std::ostream& err);
int cmd_synth(const CliConfig& cfg, SynthConfig synth, std::ostream& out, std::ostream& err);
int cmd_validate(const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// Reads the configured input in the configured schema.
Dataset load_dataset(const CliConfig& cfg, const ParseOptions& options = {});

}  // namespace fqt::cli
