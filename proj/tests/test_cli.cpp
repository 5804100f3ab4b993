#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mfs/cli.hpp"
#include "support/oracles.hpp"

using namespace mfs;
using namespace mfs::cli;
using nlohmann::json;

namespace {

std::string data(const std::string& name) { return std::string(MFS_TEST_DATA_DIR) + "/" + name; }

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const RunConfig& cfg) {
  std::ostringstream out, err;
  int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

json invoke_json(const RunConfig& cfg) {
  auto r = invoke(cfg);
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return json::parse(r.out);
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("mfs_test_" + name);
  std::ofstream(path) << text;
  return path;
}

std::uint64_t count_of(const json& report, std::uint32_t canonical_code) {
  for (const auto& m : report["motifs"]) {
    if (m["canonical_code"] == canonical_code) return m["count"];
  }
  return 0;
}

// Splits CSV data rows (comment lines skipped) into fields.
std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    rows.push_back(fields);
  }
  return rows;
}

}  // namespace

TEST_CASE("exact: K4 has one clique") {
  RunConfig cfg;
  cfg.mode = Mode::Exact;
  cfg.input = data("k4.txt");
  cfg.size = 4;
  auto j = invoke_json(cfg);
  CHECK(j["command"] == "exact");
  CHECK(j["total"] == 1);
  CHECK(count_of(j, 0b111111) == 1);
  CHECK(j["motifs"].size() == 6);
  CHECK(j["config"]["input"] == cfg.input);
  CHECK(j["config"]["seed"] == kDefaultSeed);
}

TEST_CASE("exact: directed feed-forward loop") {
  RunConfig cfg;
  cfg.mode = Mode::Exact;
  cfg.input = data("ffl.txt");
  cfg.size = 3;
  cfg.directed = true;
  auto j = invoke_json(cfg);
  CHECK(j["total"] == 1);
  int nonzero = 0;
  for (const auto& m : j["motifs"]) nonzero += m["count"] != 0 ? 1 : 0;
  CHECK(nonzero == 1);
  CHECK(count_of(j, arrcode({3, true}).motif(arrcode({3, true}).classify(0b001011)).canonical_code) == 1);
  CHECK(j["motifs"].size() == 13);
}

TEST_CASE("errors give nonzero exit and a message") {
  RunConfig cfg;
  cfg.mode = Mode::Exact;
  cfg.input = data("does_not_exist.txt");
  auto r = invoke(cfg);
  CHECK(r.code != 0);
  CHECK(r.out.empty());
  CHECK(r.err.find("cannot open") != std::string::npos);

  cfg.input = write_temp("bad.txt", "0 1\n1 2 3\n").string();
  r = invoke(cfg);
  CHECK(r.code != 0);
  CHECK(r.err.find("line 2") != std::string::npos);

  cfg.mode = Mode::Sample;
  cfg.input = data("k4.txt");
  r = invoke(cfg);
  CHECK(r.code != 0);
  CHECK(r.err.find("--samples or --target-cv") != std::string::npos);

  cfg.samples = 10;
  cfg.size = 5;
  CHECK(invoke(cfg).code != 0);
}

TEST_CASE("frames subcommand") {
  RunConfig cfg;
  cfg.mode = Mode::Frames;
  cfg.input = data("k4.txt");
  auto k4 = invoke_json(cfg)["frame_totals"];
  CHECK(k4["fork"] == 12);
  CHECK(k4["trident"] == 4);
  CHECK(k4["chain"] == 24);

  cfg.input = data("path3.txt");
  auto p = invoke_json(cfg)["frame_totals"];
  CHECK(p["fork"] == 2);
  CHECK(p["trident"] == 0);
  CHECK(p["chain"] == 1);

  cfg.input = data("empty.txt");
  auto e = invoke_json(cfg);
  CHECK(e["graph"]["vertices"] == 1);
  CHECK(e["frame_totals"]["fork"] == 0);
  CHECK(e["frame_totals"]["trident"] == 0);
  CHECK(e["frame_totals"]["chain"] == 0);
}

TEST_CASE("tables subcommand") {
  RunConfig cfg;
  cfg.mode = Mode::Tables;
  auto j = invoke_json(cfg);
  std::vector<std::size_t> sizes;
  for (const auto& f : j["families"]) sizes.push_back(f["entries"].size());
  CHECK(sizes == std::vector<std::size_t>{8, 64, 64, 4096});
  CHECK(j["families"][0]["entries"] == json::array({0, 1, 1, 2, 1, 2, 2, 3}));
  CHECK(j["families"][0]["bit_order"] == "(0,1) (0,2) (1,2)");
  CHECK(j["families"][3]["connected_count"] == 199);

  bool star_found = false;
  for (const auto& c : j["families"][2]["classes"]) {
    if (c["canonical_code"] == 7) {  // 3-leaf star
      star_found = true;
      CHECK(c["koef"]["trident"] == 1);
      CHECK(c["koef"]["chain"] == 0);
    }
  }
  CHECK(star_found);
}

TEST_CASE("sample: totals add up to the budget and reruns are identical") {
  auto g = mfs::testing::erdos_renyi(300, 1500, 5);
  auto path = write_temp("er300.txt", serialize_edge_list(g));
  RunConfig cfg;
  cfg.mode = Mode::Sample;
  cfg.input = path.string();
  cfg.size = 4;
  cfg.samples = 200'000;
  cfg.seed = 1;
  auto first = invoke_json(cfg);
  std::uint64_t total = 0;
  for (const auto& e : first["experiments"]) total += e["experiments"].get<std::uint64_t>();
  CHECK(total == 200'000);
  CHECK(first["stop"]["samples"] == 200'000);
  CHECK(first["stop"]["reason"] == "budget exhausted");
  CHECK(first["config"]["samples"] == 200'000);

  auto second = invoke_json(cfg);
  first.erase("elapsed_seconds");
  second.erase("elapsed_seconds");
  CHECK(first.dump() == second.dump());
}

TEST_CASE("sample: target cv reports whether it was reached") {
  auto g = mfs::testing::erdos_renyi(100, 500, 8);
  auto path = write_temp("er100.txt", serialize_edge_list(g));
  RunConfig cfg;
  cfg.mode = Mode::Sample;
  cfg.input = path.string();
  cfg.size = 3;
  cfg.target_cv = 0.05;
  auto j = invoke_json(cfg);
  CHECK(j["stop"]["target_reached"] == true);
  CHECK(j["stop"]["reason"] == "target cv reached");
  for (const auto& m : j["motifs"]) {
    if (m["sources"][0]["detections"] >= 5) CHECK(m["cv"].get<double>() <= 0.05);
  }

  cfg.target_cv = 1e-9;
  cfg.samples = 20'000;
  auto capped = invoke_json(cfg);
  CHECK(capped["stop"]["target_reached"] == false);
  CHECK(capped["stop"]["reason"] == "budget exhausted");
}

TEST_CASE("CSV and JSON carry the same numbers") {
  auto g = mfs::testing::erdos_renyi(80, 320, 3);
  auto path = write_temp("er80.txt", serialize_edge_list(g));
  RunConfig cfg;
  cfg.mode = Mode::Sample;
  cfg.input = path.string();
  cfg.size = 4;
  cfg.samples = 40'000;
  auto j = invoke_json(cfg);
  cfg.format = Format::Csv;
  auto csv = invoke(cfg);
  REQUIRE(csv.code == 0);
  CHECK(csv.out.find("# seed=1") != std::string::npos);
  auto rows = csv_rows(csv.out);
  REQUIRE(rows.size() == j["motifs"].size() + 1);
  CHECK(rows[0][2] == "n_hat");
  for (std::size_t i = 0; i < j["motifs"].size(); ++i) {
    const auto& m = j["motifs"][i];
    const auto& row = rows[i + 1];
    CHECK(std::stoi(row[0]) == m["class_id"].get<int>());
    CHECK(std::stod(row[2]) == m["n_hat"].get<double>());
    CHECK(std::stod(row[3]) == m["variance"].get<double>());
    if (m["cv"].is_null()) CHECK(row[4].empty());
    else CHECK(std::stod(row[4]) == m["cv"].get<double>());
    if (m["lambda"].is_null()) CHECK(row[5].empty());
    else CHECK(std::stod(row[5]) == m["lambda"].get<double>());
  }

  cfg.mode = Mode::Exact;
  cfg.format = Format::Json;
  auto ej = invoke_json(cfg);
  cfg.format = Format::Csv;
  auto erows = csv_rows(invoke(cfg).out);
  REQUIRE(erows.size() == ej["motifs"].size() + 1);
  for (std::size_t i = 0; i < ej["motifs"].size(); ++i) {
    CHECK(std::stoull(erows[i + 1][2]) == ej["motifs"][i]["count"].get<std::uint64_t>());
  }
}

TEST_CASE("output file") {
  RunConfig cfg;
  cfg.mode = Mode::Frames;
  cfg.input = data("k4.txt");
  cfg.output = (std::filesystem::temp_directory_path() / "mfs_test_frames.json").string();
  auto r = invoke(cfg);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(cfg.output);
  CHECK(json::parse(in)["frame_totals"]["chain"] == 24);
}
