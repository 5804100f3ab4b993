#include "mfs/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

namespace mfs::cli {

using nlohmann::json;

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::Exact:
      return "exact";
    case Mode::Sample:
      return "sample";
    case Mode::Frames:
      return "frames";
    case Mode::Tables:
      return "tables";
  }
  return "?";
}

std::string_view to_string(Format format) { return format == Format::Json ? "json" : "csv"; }

void validate(const RunConfig& config) {
  if (config.mode != Mode::Tables && config.input.empty()) throw Error("--input is required");
  if (config.size != 3 && config.size != 4) throw Error("--size must be 3 or 4");
  if (config.workers < 1) throw Error("--workers must be at least 1");
  if (config.mode == Mode::Sample) {
    if (!config.samples && !config.target_cv) {
      throw Error("sample mode needs --samples or --target-cv");
    }
    if (config.target_cv && !(*config.target_cv > 0)) throw Error("--target-cv must be positive");
    if (config.batch == 0) throw Error("--batch must be positive");
    if (!(config.chain_share >= 0 && config.chain_share <= 1)) {
      throw Error("--chain-share must lie in [0, 1]");
    }
  }
}

json config_json(const RunConfig& config) {
  json j;
  j["mode"] = to_string(config.mode);
  j["input"] = config.input;
  j["directed"] = config.directed;
  j["size"] = config.size;
  j["samples"] = config.samples ? json(*config.samples) : json(nullptr);
  j["target_cv"] = config.target_cv ? json(*config.target_cv) : json(nullptr);
  j["seed"] = config.seed;
  j["workers"] = config.workers;
  j["batch"] = config.batch;
  j["chain_share"] = config.chain_share;
  j["format"] = to_string(config.format);
  j["output"] = config.output;
  return j;
}

json load_report_json(const LoadReport& report, bool directed) {
  return {{"directed", directed},
          {"vertices", report.vertex_count},
          {"edges", report.edge_count},
          {"arcs", report.arc_count},
          {"pairs_read", report.pairs},
          {"self_loops_dropped", report.self_loops_dropped},
          {"duplicates_dropped", report.duplicates_dropped}};
}

namespace {

json family_json(Family f) { return {{"size", f.size}, {"directed", f.directed}}; }

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::string csv_number(const std::optional<double>& v) { return v ? fmt::format("{}", *v) : ""; }

std::string csv_header(const RunConfig& config) {
  std::string out;
  const json cfg = config_json(config);
  for (const auto& [key, value] : cfg.items()) {
    out += fmt::format("# {}={}\n", key, value.is_string() ? value.get<std::string>() : value.dump());
  }
  return out;
}

json totals_json(const FrameTotals& totals) {
  return {{"fork", totals.fork}, {"trident", totals.trident}, {"chain", totals.chain}};
}

}  // namespace

json exact_json(const RunConfig& config, const LoadReport& load, const ExactCensus& census) {
  const auto& table = arrcode(census.family);
  json motifs = json::array();
  for (int id : table.connected_class_ids()) {
    motifs.push_back({{"class_id", id},
                      {"canonical_code", table.motif(id).canonical_code},
                      {"count", census.count(id)}});
  }
  return {{"command", "exact"},
          {"config", config_json(config)},
          {"graph", load_report_json(load, config.directed)},
          {"family", family_json(census.family)},
          {"motifs", motifs},
          {"total", census.total()},
          {"elapsed_seconds", census.elapsed_seconds}};
}

json sample_json(const RunConfig& config, const LoadReport& load, const SampledCensus& census) {
  const auto& table = arrcode(census.family);
  json experiments = json::array();
  for (const auto& acc : census.experiments) {
    json detections = json::object();
    for (int id : table.connected_class_ids()) {
      if (acc.detections[static_cast<std::size_t>(id)] > 0) {
        detections[std::to_string(id)] = acc.detections[static_cast<std::size_t>(id)];
      }
    }
    experiments.push_back({{"frame", to_string(acc.kind)},
                           {"frame_total", census.totals.of(acc.kind)},
                           {"experiments", acc.experiments},
                           {"degenerate", acc.degenerate},
                           {"detections", detections}});
  }
  json motifs = json::array();
  for (const auto& e : census.estimates) {
    json sources = json::array();
    for (const auto& s : e.sources) {
      sources.push_back({{"frame", to_string(s.kind)},
                         {"detections", s.detections},
                         {"experiments", s.experiments},
                         {"frame_total", s.frame_total},
                         {"koef", s.koef},
                         {"n_hat", s.n_hat},
                         {"variance", s.variance}});
    }
    motifs.push_back({{"class_id", e.class_id},
                      {"canonical_code", table.motif(e.class_id).canonical_code},
                      {"n_hat", e.n_hat},
                      {"variance", e.variance},
                      {"cv", optional_number(e.cv)},
                      {"lambda", optional_number(e.lambda)},
                      {"sources", sources}});
  }
  return {{"command", "sample"},
          {"config", config_json(config)},
          {"graph", load_report_json(load, config.directed)},
          {"family", family_json(census.family)},
          {"frame_totals", totals_json(census.totals)},
          {"experiments", experiments},
          {"motifs", motifs},
          {"stop",
           {{"reason", to_string(census.stop)},
            {"target_reached", census.stop == StopReason::TargetReached},
            {"batches", census.batches},
            {"samples", census.samples()}}},
          {"elapsed_seconds", census.elapsed_seconds}};
}

json frames_json(const RunConfig& config, const LoadReport& load, const FrameTotals& totals) {
  return {{"command", "frames"},
          {"config", config_json(config)},
          {"graph", load_report_json(load, config.directed)},
          {"frame_totals", totals_json(totals)}};
}

json tables_json() {
  json families = json::array();
  for (Family f : kAllFamilies) {
    const auto& table = arrcode(f);
    const auto& koef = koef_table(f);
    json classes = json::array();
    for (const auto& m : table.classes()) {
      json k = json::object();
      for (FrameKind kind : kAllFrameKinds) k[std::string(to_string(kind))] = koef.koef(m.class_id, kind);
      classes.push_back({{"class_id", m.class_id},
                         {"canonical_code", m.canonical_code},
                         {"connected", m.connected},
                         {"orbit_size", m.orbit_size},
                         {"koef", k}});
    }
    const auto counts = class_counts(f);
    families.push_back({{"size", f.size},
                        {"directed", f.directed},
                        {"bit_order", bit_order_description(f)},
                        {"entry_count", table.size()},
                        {"entries", table.entries()},
                        {"class_count", counts.total},
                        {"connected_count", counts.connected},
                        {"classes", classes}});
  }
  return {{"command", "tables"}, {"families", families}};
}

std::string exact_csv(const RunConfig& config, const ExactCensus& census) {
  const auto& table = arrcode(census.family);
  std::string out = csv_header(config) + "class_id,canonical_code,count\n";
  for (int id : table.connected_class_ids()) {
    out += fmt::format("{},{},{}\n", id, table.motif(id).canonical_code, census.count(id));
  }
  return out;
}

std::string sample_csv(const RunConfig& config, const SampledCensus& census) {
  const auto& table = arrcode(census.family);
  std::string out = csv_header(config);
  out += fmt::format("# stop={}\n# drawn={}\n", to_string(census.stop), census.samples());
  out += "class_id,canonical_code,n_hat,variance,cv,lambda";
  for (const auto& acc : census.experiments) {
    out += fmt::format(",{0}_detections,{0}_experiments,{0}_koef", to_string(acc.kind));
  }
  out += '\n';
  for (const auto& e : census.estimates) {
    out += fmt::format("{},{},{},{},{},{}", e.class_id, table.motif(e.class_id).canonical_code,
                       e.n_hat, e.variance, csv_number(e.cv), csv_number(e.lambda));
    for (const auto& acc : census.experiments) {
      const EstimateSource* src = nullptr;
      for (const auto& s : e.sources) {
        if (s.kind == acc.kind) src = &s;
      }
      if (src) {
        out += fmt::format(",{},{},{}", src->detections, src->experiments, src->koef);
      } else {
        out += ",,,";
      }
    }
    out += '\n';
  }
  return out;
}

std::string frames_csv(const RunConfig& config, const FrameTotals& totals) {
  std::string out = csv_header(config) + "frame,total\n";
  for (FrameKind kind : kAllFrameKinds) out += fmt::format("{},{}\n", to_string(kind), totals.of(kind));
  return out;
}

std::string tables_csv() {
  std::string out = "size,directed,code,class_id,canonical_code,connected\n";
  for (Family f : kAllFamilies) {
    const auto& table = arrcode(f);
    for (std::uint32_t code = 0; code < table.size(); ++code) {
      const auto& m = table.motif(table.classify(code));
      out += fmt::format("{},{},{},{},{},{}\n", f.size, f.directed ? 1 : 0, code, m.class_id,
                         m.canonical_code, m.connected ? 1 : 0);
    }
  }
  return out;
}

namespace {

void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (config.output.empty()) {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(config.output);
  if (!file) throw Error("cannot write " + config.output);
  file << text;
}

template <typename JsonFn, typename CsvFn>
std::string render(const RunConfig& config, JsonFn&& to_json, CsvFn&& to_csv) {
  return config.format == Format::Json ? to_json().dump(2) + "\n" : to_csv();
}

template <typename Body>
int guarded(const RunConfig& config, std::ostream& err, Body&& body) {
  try {
    validate(config);
    body();
    return 0;
  } catch (const std::exception& e) {
    err << "mfs " << to_string(config.mode) << ": " << e.what() << '\n';
    return 1;
  }
}

}  // namespace

int cmd_exact(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(config, err, [&] {
    auto loaded = load_graph_file(config.input, config.directed);
    auto census = exact_census(loaded.graph, config.size, config.workers);
    emit(config, out,
         render(
             config, [&] { return exact_json(config, loaded.report, census); },
             [&] { return exact_csv(config, census); }));
  });
}

int cmd_sample(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(config, err, [&] {
    auto loaded = load_graph_file(config.input, config.directed);
    SamplingOptions opts;
    opts.size = config.size;
    opts.budget = config.samples.value_or(kTargetOnlyBudget);
    opts.target_cv = config.target_cv;
    opts.seed = config.seed;
    opts.workers = config.workers;
    opts.batch_size = config.batch;
    opts.chain_share = config.chain_share;
    auto census = run_sampled_census(loaded.graph, opts);
    emit(config, out,
         render(
             config, [&] { return sample_json(config, loaded.report, census); },
             [&] { return sample_csv(config, census); }));
  });
}

int cmd_frames(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(config, err, [&] {
    auto loaded = load_graph_file(config.input, config.directed);
    auto totals = frame_totals(loaded.graph);
    emit(config, out,
         render(
             config, [&] { return frames_json(config, loaded.report, totals); },
             [&] { return frames_csv(config, totals); }));
  });
}

int cmd_tables(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(config, err, [&] { emit(config, out, render(config, tables_json, tables_csv)); });
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.mode) {
    case Mode::Exact:
      return cmd_exact(config, out, err);
    case Mode::Sample:
      return cmd_sample(config, out, err);
    case Mode::Frames:
      return cmd_frames(config, out, err);
    case Mode::Tables:
      return cmd_tables(config, out, err);
  }
  return 2;
}

}  // namespace mfs::cli
