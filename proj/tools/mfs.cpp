// mfs: motif census by exact enumeration or frame sampling.
#include <iostream>

#include "CLI11.hpp"
#include "mfs/cli.hpp"

namespace {

void add_graph_options(CLI::App* cmd, mfs::cli::RunConfig& cfg) {
  cmd->add_option("-i,--input", cfg.input, "Edge list (SNAP format)")->required();
  cmd->add_flag("-d,--directed", cfg.directed, "Treat pairs as arcs");
}

void add_output_options(CLI::App* cmd, mfs::cli::RunConfig& cfg) {
  cmd->add_option_function<std::string>(
         "-f,--format",
         [&cfg](const std::string& name) {
           cfg.format = name == "csv" ? mfs::cli::Format::Csv : mfs::cli::Format::Json;
         },
         "Output format: json (default) or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("-o,--output", cfg.output, "Write the report here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  using mfs::cli::Mode;
  mfs::cli::RunConfig cfg;
  CLI::App app{"Network motif census: exact enumeration and mixed frame sampling"};
  app.require_subcommand(1);

  auto* exact = app.add_subcommand("exact", "Exact census of connected 3- or 4-vertex motifs");
  auto* sample = app.add_subcommand("sample", "Sampled census with per-motif variance and cv");
  auto* frames = app.add_subcommand("frames", "Exact fork, trident and chain totals");
  auto* tables = app.add_subcommand("tables", "Dump arrcode and koef tables");

  for (auto* cmd : {exact, sample, frames}) {
    add_graph_options(cmd, cfg);
    add_output_options(cmd, cfg);
  }
  add_output_options(tables, cfg);

  for (auto* cmd : {exact, sample}) {
    cmd->add_option("-k,--size", cfg.size, "Motif size")->check(CLI::IsMember({3, 4}));
    cmd->add_option("-w,--workers", cfg.workers, "OpenMP workers")->check(CLI::PositiveNumber);
  }
  sample->add_option("-n,--samples", cfg.samples, "Total frame draws (all experiments)");
  sample->add_option("--target-cv", cfg.target_cv, "Stop once every motif with >= 5 hits has cv <= this");
  sample->add_option("-s,--seed", cfg.seed, "Master seed")->capture_default_str();
  sample->add_option("--batch", cfg.batch, "Draws per batch between cv checks")->capture_default_str();
  sample->add_option("--chain-share", cfg.chain_share, "Fraction of 4-vertex draws spent on chains")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (exact->parsed()) cfg.mode = Mode::Exact;
  if (sample->parsed()) cfg.mode = Mode::Sample;
  if (frames->parsed()) cfg.mode = Mode::Frames;
  if (tables->parsed()) cfg.mode = Mode::Tables;
  return mfs::cli::run(cfg, std::cout, std::cerr);
}
