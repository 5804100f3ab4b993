#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

#include "mfs/census.hpp"
#include "mfs/estimator.hpp"
#include "mfs/frames.hpp"

namespace mfs::cli {

enum class Mode { Exact, Sample, Frames, Tables };
enum class Format { Json, Csv };

std::string_view to_string(Mode mode);
std::string_view to_string(Format format);

// Cap on draws when sampling is driven by --target-cv alone.
inline constexpr std::uint64_t kTargetOnlyBudget = 10'000'000;

struct RunConfig {
  Mode mode = Mode::Exact;
  std::string input;
  bool directed = false;
  int size = 3;
  std::optional<std::uint64_t> samples;
  std::optional<double> target_cv;
  std::uint64_t seed = kDefaultSeed;
  int workers = 1;
  std::uint64_t batch = kDefaultBatch;
  double chain_share = 0.5;
  Format format = Format::Json;
  std::string output;  // empty: standard output
};

// Throws mfs::Error on inconsistent settings (bad size, sample mode without
// budget or target, ...).
void validate(const RunConfig& config);

nlohmann::json config_json(const RunConfig& config);
nlohmann::json load_report_json(const LoadReport& report, bool directed);

nlohmann::json exact_json(const RunConfig& config, const LoadReport& load, const ExactCensus& census);
nlohmann::json sample_json(const RunConfig& config, const LoadReport& load, const SampledCensus& census);
nlohmann::json frames_json(const RunConfig& config, const LoadReport& load, const FrameTotals& totals);
nlohmann::json tables_json();

std::string exact_csv(const RunConfig& config, const ExactCensus& census);
std::string sample_csv(const RunConfig& config, const SampledCensus& census);
std::string frames_csv(const RunConfig& config, const FrameTotals& totals);
std::string tables_csv();

// Subcommand handlers: run, write the report to config.output (or `out`), and
// return the process exit code. Errors go to `err` with a nonzero code.
int cmd_exact(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sample(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_frames(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_tables(const RunConfig& config, std::ostream& out, std::ostream& err);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace mfs::cli
