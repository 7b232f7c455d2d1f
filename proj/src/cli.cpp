// Copyright 2026 The compind Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "compind/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "compind/catalog.hpp"
#include "compind/csv.hpp"
#include "compind/enterprise.hpp"
#include "compind/error.hpp"
#include "compind/indicator.hpp"
#include "compind/io.hpp"
#include "compind/kernels.hpp"
#include "compind/reference.hpp"
#include "compind/report.hpp"
#include "compind/synth.hpp"

namespace compind::cli {
namespace {

namespace fs = std::filesystem;

struct EngineOptions {
  std::size_t window = kDefaultWindow;
  std::string mode = "raw";
  std::string mapping;
  std::string catalog;
  std::size_t threads = 1;
  std::optional<std::uint64_t> seed;
  bool pad_warmup = false;
  std::string out_dir;
};

void add_engine_options(CLI::App* cmd, EngineOptions& opts) {
  cmd->add_option("-k,--window", opts.window, "Window length k (periods, >= 2)")->capture_default_str();
  cmd->add_option("--mode", opts.mode, "Normalization: raw or standardized")
      ->check(CLI::IsMember({"raw", "standardized"}))
      ->capture_default_str();
  cmd->add_option("--mapping", opts.mapping, "Competency mapping file (default: all channels active)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--catalog", opts.catalog, "Catalog document used to resolve competency ids")
      ->check(CLI::ExistingFile);
  cmd->add_option("--threads", opts.threads, "Worker threads (0 = all cores)")->capture_default_str();
  cmd->add_option("--seed", opts.seed, "Scenario seed recorded in the metadata");
  cmd->add_flag("--pad-warmup", opts.pad_warmup, "Emit flagged zero rows for warm-up periods in plot.csv");
  cmd->add_option("-o,--out", opts.out_dir, "Output directory")->required();
}

DescriptorCatalog catalog_for(const EngineOptions& opts) {
  return opts.catalog.empty() ? bundled_catalog() : load_catalog_file(opts.catalog);
}

/// Maps and evaluates one events file. Returns the series and masked labels.
std::pair<IndicatorSeries, std::vector<std::string>> evaluate_events(const EnterpriseModel& model,
                                                                     const EngineOptions& opts) {
  CompetencyMapping mapping = CompetencyMapping::identity(model.channels());
  if (!opts.mapping.empty()) {
    const auto catalog = catalog_for(opts);
    mapping = parse_mapping(read_text_file(opts.mapping), model.channel_labels(), &catalog, opts.mapping);
  }
  const auto mapped = apply_mapping(model, mapping);
  std::vector<std::string> masked;
  for (const auto c : mapped.masked_channels) masked.push_back(model.channel_labels()[c]);
  auto series = indicator_series(mapped.series, opts.window, parse_mode(opts.mode), {opts.threads});
  return {std::move(series), std::move(masked)};
}

RunMetadata metadata_for(const EngineOptions& opts, std::vector<std::string> masked) {
  return RunMetadata{opts.window, parse_mode(opts.mode), opts.seed, std::move(masked)};
}

int cmd_catalog(const std::string& file, bool summary, std::ostream& out) {
  const auto catalog = file.empty() ? bundled_catalog() : load_catalog_file(file);
  if (!summary) {
    out << serialize_catalog(catalog);
    return 0;
  }
  out << catalog.size() << " entries\n";
  for (int level = 1; level <= 3; ++level) {
    const auto it = std::find_if(catalog.entries().begin(), catalog.entries().end(),
                                 [&](const auto& e) { return e.level == level; });
    out << "level " << level << " (" << it->level_name << "): " << catalog.count_level(level) << " skills\n";
  }
  return 0;
}

int cmd_generate(const std::string& config_path, const std::string& out_dir, std::ostream& out) {
  const auto config = parse_scenario(read_text_file(config_path), config_path);
  const auto pair = paired_scenarios(config);
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec || !fs::is_directory(out_dir)) throw IoError("cannot create output directory " + out_dir);
  const fs::path dir(out_dir);
  write_text_file_atomic(dir / "baseline.csv", format_events(pair.baseline));
  write_text_file_atomic(dir / "treated.csv", format_events(pair.treated));
  write_text_file_atomic(dir / "scenario.json", format_scenario(config));
  out << "generated " << config.periods << " periods x " << pair.baseline.channels() << " channels (synthetic, seed "
      << config.seed << ") into " << out_dir << "\n";
  return 0;
}

int cmd_analyze(const std::string& events_path, const EngineOptions& opts, std::ostream& out) {
  const auto model = read_events(events_path);
  auto [series, masked] = evaluate_events(model, opts);
  AnalysisReport report{metadata_for(opts, std::move(masked)), std::move(series), std::nullopt, opts.pad_warmup};
  const auto files = emit_report(report, opts.out_dir);
  const auto& s = *report.indicators;
  out << "V = " << csv::format_double(s.total) << " over periods " << s.first_period << ".." << s.last_period()
      << " (k=" << s.k << ", " << to_string(s.mode) << ", kernel " << kernels::active_kernels().name << ")\n"
      << "wrote " << files.table.string() << ", " << files.plot.string() << ", " << files.metadata.string() << "\n";
  return 0;
}

int cmd_compare(const std::string& basic_path, const std::string& treated_path, const EngineOptions& opts,
                std::ostream& out) {
  const auto basic_text = read_text_file(basic_path);
  const auto treated_text = read_text_file(treated_path);
  const bool basic_ind = looks_like_indicator_table(basic_text);
  const bool treated_ind = looks_like_indicator_table(treated_text);
  if (basic_ind != treated_ind) {
    throw ValidationError("compare needs two event files or two indicator tables, not one of each");
  }

  AnalysisReport report;
  report.pad_warmup = opts.pad_warmup;
  if (basic_ind) {
    report.meta.seed = opts.seed;
    report.comparison = compare_regimes(parse_indicator_column(basic_text, basic_path),
                                        parse_indicator_column(treated_text, treated_path));
  } else {
    const auto basic_model = parse_events(basic_text, basic_path);
    const auto treated_model = parse_events(treated_text, treated_path);
    if (basic_model.channel_labels() != treated_model.channel_labels()) {
      throw DimensionError("basic and treated event files have different channels");
    }
    auto [basic, masked] = evaluate_events(basic_model, opts);
    auto treated = evaluate_events(treated_model, opts).first;
    report.meta = metadata_for(opts, std::move(masked));
    report.comparison =
        compare_regimes(IndicatorColumn::from_series(basic), IndicatorColumn::from_series(treated));
  }
  const auto files = emit_report(report, opts.out_dir);
  const auto& c = *report.comparison;
  out << "V_basic = " << csv::format_double(c.basic_total) << ", V_treated = " << csv::format_double(c.treated_total)
      << ", dV = " << csv::format_double(c.delta_total) << "\n"
      << "wrote " << files.table.string() << ", " << files.plot.string() << ", " << files.metadata.string() << "\n";
  return 0;
}

int cmd_verify_reference(const std::string& file, std::ostream& out) {
  const auto table = file.empty() ? load_reference() : load_reference_text(read_text_file(file), file);
  const auto report = verify_reference(table);
  for (const auto& check : report.checks) {
    out << (check.passed ? "[PASS] " : "[FAIL] ") << check.id << ": " << check.description << " (" << check.detail
        << ")\n";
  }
  out << (report.passed() ? "reference table verified\n" : "reference table FAILED verification\n");
  return report.passed() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integral indicators of competency-controlled enterprise event series", "compind"};
  app.require_subcommand(1);
  std::string kernel;
  app.add_option("--kernel", kernel, "Force a kernel variant (scalar, avx2, neon)");

  std::string catalog_file;
  bool summary = false;
  auto* catalog = app.add_subcommand("catalog", "Validate and print the descriptor catalog");
  catalog->add_option("--file", catalog_file, "Catalog document (default: bundled)")->check(CLI::ExistingFile);
  catalog->add_flag("--summary", summary, "Print entry counts instead of the document");

  std::string config_path;
  std::string generate_out;
  auto* generate = app.add_subcommand("generate", "Write a paired synthetic scenario (baseline.csv, treated.csv)");
  generate->add_option("-c,--config", config_path, "Scenario JSON file")->required()->check(CLI::ExistingFile);
  generate->add_option("-o,--out", generate_out, "Output directory")->required();

  std::string events_path;
  EngineOptions analyze_opts;
  auto* analyze = app.add_subcommand("analyze", "Compute integral indicators for an events file");
  analyze->add_option("-e,--events", events_path, "Event-series file")->required()->check(CLI::ExistingFile);
  add_engine_options(analyze, analyze_opts);

  std::string basic_path;
  std::string treated_path;
  EngineOptions compare_opts;
  auto* compare = app.add_subcommand("compare", "Compare two regimes (event files or indicator tables)");
  compare->add_option("--basic", basic_path, "Baseline regime file")->required()->check(CLI::ExistingFile);
  compare->add_option("--treated", treated_path, "Treated regime file")->required()->check(CLI::ExistingFile);
  add_engine_options(compare, compare_opts);

  std::string reference_file;
  auto* verify = app.add_subcommand("verify-reference", "Check the arithmetic of the published regime table");
  verify->add_option("--file", reference_file, "Reference table (default: bundled)")->check(CLI::ExistingFile);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!kernel.empty() && !kernels::select_kernels(kernel)) {
      err << "error: kernel '" << kernel << "' is not available on this machine\n";
      return 2;
    }
    if (*catalog) return cmd_catalog(catalog_file, summary, out);
    if (*generate) return cmd_generate(config_path, generate_out, out);
    if (*analyze) return cmd_analyze(events_path, analyze_opts, out);
    if (*compare) return cmd_compare(basic_path, treated_path, compare_opts, out);
    if (*verify) return cmd_verify_reference(reference_file, out);
  } catch (const BudgetError& e) {
    err << "error: budget violated: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace compind::cli
