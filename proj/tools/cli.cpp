#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "fqt/analysis.hpp"
#include "fqt/errors.hpp"

namespace fqt::cli {
namespace {

/// Maps library exceptions onto the exit-status contract.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const FitError& e) {
    err << "fit error: " << e.what() << '\n';
    return kExitFitError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

/// Runs `write` against the configured output file, or `out` when none is set.
void write_output(const CliConfig& cfg, std::ostream& out, const std::function<void(std::ostream&)>& write) {
  if (cfg.output.empty()) {
    write(out);
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw Error("cannot open output file '" + cfg.output + "'");
  write(file);
  if (!file) throw Error("failed writing output file '" + cfg.output + "'");
}

RampMembership ramp_of(const CliConfig& cfg) { return RampMembership(cfg.mf_lower, cfg.mf_upper); }

/// Parses, then rejects the dataset with a listing when any invariant is broken.
Dataset load_clean(const CliConfig& cfg, std::ostream& err) {
  auto dataset = load_dataset(cfg);
  const auto violations = validate(dataset);
  if (!violations.empty()) {
    for (const auto& v : violations) err << format_violation(v) << '\n';
    throw Error(std::to_string(violations.size()) + " validation violation(s) in '" + cfg.input + "'");
  }
  return dataset;
}

std::pair<std::string, double> parse_group_weight(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
    throw DomainError("--group expects NAME=WEIGHT, got '" + spec + "'");
  }
  double a = 0.0;
  const char* first = spec.data() + eq + 1;
  const char* last = spec.data() + spec.size();
  const auto [ptr, ec] = std::from_chars(first, last, a);
  if (ec != std::errc() || ptr != last) throw DomainError("--group weight is not a number: '" + spec + "'");
  return {spec.substr(0, eq), a};
}

}  // namespace

Dataset load_dataset(const CliConfig& cfg, const ParseOptions& options) {
  if (cfg.input.empty()) throw Error("no input file given (use --input)");
  std::ifstream in(cfg.input, std::ios::binary);
  if (!in) throw Error("cannot open input file '" + cfg.input + "'");
  if (cfg.schema == Schema::kRaw) {
    return parse_raw_csv(in, cfg.normalization.value_or(NormalizationScheme::kDiv5), options);
  }
  if (cfg.normalization) throw DomainError("--normalization only applies to --schema raw");
  return parse_processed_csv(in, options);
}

int cmd_analyze(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto ramp = ramp_of(cfg);
    const auto dataset = load_clean(cfg, err);
    auto report = analyze_dataset(dataset, ramp);
    if (cfg.schema == Schema::kRaw) report.normalization = cfg.normalization.value_or(NormalizationScheme::kDiv5);
    write_output(cfg, out, [&](std::ostream& sink) { render_report(report, cfg.format, sink); });
    return kExitOk;
  });
}

int cmd_baseline(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto ramp = ramp_of(cfg);
    const auto dataset = load_clean(cfg, err);
    std::vector<double> xs;
    std::vector<double> mus;
    std::vector<double> ys;
    for (const auto& rec : dataset.records) {
      xs.push_back(rec.covariate_x);
      mus.push_back(ramp.eval(rec.covariate_x));
      ys.push_back(rec.response_y);
    }
    const auto fit_x = ols_fit(xs, ys, CovariateUnit::kRawX);
    const auto fit_mu = ols_fit(mus, ys, CovariateUnit::kMembership);
    write_output(cfg, out, [&](std::ostream& sink) { render_baselines(fit_x, fit_mu, cfg.format, sink); });
    return kExitOk;
  });
}

int cmd_membership(const CliConfig& cfg, const std::vector<double>& xs, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto ramp = ramp_of(cfg);
    for (double x : xs) {
      if (!(x >= 0.0)) throw DomainError("covariate value " + std::to_string(x) + " is negative");
    }
    write_output(cfg, out, [&](std::ostream& sink) { render_memberships(ramp, xs, cfg.format, sink); });
    return kExitOk;
  });
}

int cmd_synth(const CliConfig& cfg, SynthConfig synth, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    synth.seed = cfg.seed;
    synth.ramp = ramp_of(cfg);
    const auto result = generate(synth);
    write_output(cfg, out, [&](std::ostream& sink) { write_processed_csv(result.dataset, sink); });
    err << "synth: " << result.clamped << " of " << result.dataset.size() << " responses clamped to [0,100]\n";
    return kExitOk;
  });
}

int cmd_validate(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto dataset = load_dataset(cfg, ParseOptions{.check_ranges = false});
    const auto violations = validate(dataset);
    write_output(cfg, out, [&](std::ostream& sink) {
      for (const auto& v : violations) sink << format_violation(v) << '\n';
    });
    err << "validate: " << dataset.size() << " records, " << violations.size() << " violation(s)\n";
    return violations.empty() ? kExitOk : kExitInputError;
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fuzzy Quantification Theory I: weighted category regression against a linear baseline", "fqt"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string schema = "processed";
  std::string normalization;
  std::string format = "table";

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--mf-lower", cfg.mf_lower, "Membership ramp start (degree 0)")->capture_default_str();
    sub->add_option("--mf-upper", cfg.mf_upper, "Membership ramp end (degree 1)")->capture_default_str();
    sub->add_option("--output", cfg.output, "Write to this file instead of standard output");
  };
  const auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "Input CSV")->required();
    sub->add_option("--schema", schema, "Input schema")
        ->check(CLI::IsMember({"processed", "raw"}))
        ->capture_default_str();
    sub->add_option("--normalization", normalization, "Score normalization for --schema raw")
        ->check(CLI::IsMember({"div5", "affine"}));
  };
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
  };

  auto* analyze = app.add_subcommand("analyze", "Fit baselines and per-group category weights; print the report");
  add_input(analyze);
  add_format(analyze);
  add_common(analyze);

  auto* baseline = app.add_subcommand("baseline", "Ordinary least-squares baselines in raw and membership units");
  add_input(baseline);
  add_format(baseline);
  add_common(baseline);

  std::vector<double> xs;
  auto* membership = app.add_subcommand("membership", "Evaluate the membership ramp at covariate values");
  membership->add_option("x", xs, "Covariate values")->required();
  add_format(membership);
  add_common(membership);

  SynthConfig synth;
  std::vector<std::string> group_specs;
  auto* synth_cmd = app.add_subcommand("synth", "Generate a seeded synthetic dataset in the processed CSV format");
  synth_cmd->add_option("--seed", cfg.seed, "Generator seed")->capture_default_str();
  synth_cmd->add_option("--n", synth.n, "Number of records")->capture_default_str();
  synth_cmd->add_option("--group", group_specs, "Fuzzy group and its true weight, NAME=WEIGHT (repeatable)");
  synth_cmd->add_option("--sigma", synth.noise_sigma, "Response noise standard deviation")->capture_default_str();
  synth_cmd->add_option("--mu-min", synth.membership_range.lo, "Smallest sampled degree")->capture_default_str();
  synth_cmd->add_option("--mu-max", synth.membership_range.hi, "Largest sampled degree")->capture_default_str();
  synth_cmd->add_option("--x-min", synth.covariate_range.lo, "Smallest sampled covariate")->capture_default_str();
  synth_cmd->add_option("--x-max", synth.covariate_range.hi, "Largest sampled covariate")->capture_default_str();
  add_common(synth_cmd);

  auto* validate_cmd = app.add_subcommand("validate", "List records that break dataset invariants");
  add_input(validate_cmd);
  add_common(validate_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
  }

  const int setup = guarded(err, [&] {
    cfg.schema = schema == "raw" ? Schema::kRaw : Schema::kProcessed;
    if (!normalization.empty()) {
      if (cfg.schema != Schema::kRaw) throw DomainError("--normalization only applies to --schema raw");
      cfg.normalization = parse_normalization_scheme(normalization);
    }
    cfg.format = parse_output_format(format);
    if (!group_specs.empty()) {
      synth.true_a.clear();
      for (const auto& spec : group_specs) synth.true_a.push_back(parse_group_weight(spec));
    }
    return kExitOk;
  });
  if (setup != kExitOk) return setup;

  if (*analyze) return cmd_analyze(cfg, out, err);
  if (*baseline) return cmd_baseline(cfg, out, err);
  if (*membership) return cmd_membership(cfg, xs, out, err);
  if (*synth_cmd) return cmd_synth(cfg, synth, out, err);
  return cmd_validate(cfg, out, err);
}

}  // namespace fqt::cli
