#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "matchstick/fixtures.hpp"
#include "matchstick/lattice.hpp"
#include "matchstick/pipeline.hpp"
#include "test_util.hpp"

using namespace matchstick;
using nlohmann::json;

namespace {

struct RunResult {
  RunStats stats;
  std::string jsonl;
};

RunResult run_text(const std::string& text, FilterOptions options = {}) {
  std::istringstream in(text);
  std::ostringstream out;
  RunResult r;
  r.stats = run_filter(in, out, options);
  r.jsonl = out.str();
  return r;
}

std::vector<json> parse_lines(const std::string& jsonl) {
  std::vector<json> records;
  std::istringstream in(jsonl);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) records.push_back(json::parse(line));
  return records;
}

// Runs the installed CLI binary; returns exit code, fills stdout text.
int run_cli(const std::string& args, std::string* out_text = nullptr) {
  std::string cmd = std::string(MATCHSTICK_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  if (out_text) *out_text = out;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::filesystem::path temp_file(const std::string& name, const std::string& bytes) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream f(path, std::ios::binary);
  f << bytes;
  return path;
}

}  // namespace

TEST_CASE("run_filter over the fixture corpus: counts and schema") {
  RunResult r = run_text(all_fixtures_text());
  CHECK(r.stats.graphs_read == 8);
  CHECK(r.stats.excluded_count == 5);
  CHECK(r.stats.survivor_count == 3);
  CHECK(r.stats.error_count == 0);
  CHECK(r.stats.graphs_read ==
        r.stats.excluded_count + r.stats.survivor_count + r.stats.error_count);

  auto records = parse_lines(r.jsonl);
  REQUIRE(records.size() == 8);
  long index = 0;
  for (const auto& rec : records) {
    CHECK(rec.at("index") == index++);
    for (const char* key : {"name", "n", "edges", "connectivity", "regular",
                            "excluded", "rejecting_criteria", "candidates"})
      CHECK(rec.contains(key));
    // excluded flag recomputable from the per-candidate verdict matrix
    bool all_rejected = true;
    for (const auto& cand : rec.at("candidates")) {
      bool rejected = false;
      for (const auto& v : cand.at("verdicts"))
        rejected |= (v.at("outcome") == "reject");
      CHECK(cand.at("rejected") == rejected);
      all_rejected &= rejected;
    }
    CHECK(rec.at("excluded") == all_rejected);
  }
  CHECK(records[0].at("name") == "octahedron");
  CHECK(records[0].at("regular") == 4);
  CHECK(records[1].at("regular").is_null() == false);  // square is 2-regular

  json stats = json::parse(r.stats.to_json());
  for (const char* key : {"graphs_read", "excluded", "survivors", "errors",
                          "candidate_rejections", "graph_rejections",
                          "wall_seconds", "graphs_per_second"})
    CHECK(stats.contains(key));
}

TEST_CASE("the non-matchstick subcorpus is fully excluded") {
  std::string text;
  for (const char* name : {"octahedron", "fig2", "fig4_left", "fig4_right", "fig5"})
    text += fixture_text(name) + "\n";
  RunResult r = run_text(text);
  CHECK(r.stats.graphs_read == 5);
  CHECK(r.stats.excluded_count == 5);
  CHECK(r.stats.survivor_count == 0);
}

TEST_CASE("output is byte-identical regardless of worker count") {
  FilterOptions serial;
  serial.jobs = 1;
  FilterOptions parallel;
  parallel.jobs = 4;
  std::string text = all_fixtures_text();
  RunResult a = run_text(text, serial);
  RunResult b = run_text(text, parallel);
  CHECK(a.jsonl == b.jsonl);
  CHECK(a.stats.excluded_count == b.stats.excluded_count);
  CHECK(a.stats.candidate_rejections == b.stats.candidate_rejections);

  // same for planar_code input (autodetected)
  auto graphs = parse_rotation_text(text);
  std::string bytes = serialize_planar_code(graphs);
  std::istringstream in1(bytes), in2(bytes);
  std::ostringstream out1, out2;
  run_filter(in1, out1, serial);
  run_filter(in2, out2, parallel);
  CHECK(out1.str() == out2.str());
}

TEST_CASE("lenient mode turns bad records into error records") {
  std::string text = fixture_text("square") +
                     "\ngraph bad 3\n1: 2 3\n2: 3 1\n3: 1 2 2\n\n" +
                     fixture_text("octahedron");
  SUBCASE("strict mode aborts") {
    CHECK_THROWS_AS(run_text(text), ParseError);
  }
  SUBCASE("lenient mode continues") {
    FilterOptions opt;
    opt.lenient = true;
    RunResult r = run_text(text, opt);
    CHECK(r.stats.graphs_read == 3);
    CHECK(r.stats.error_count == 1);
    CHECK(r.stats.excluded_count == 1);
    CHECK(r.stats.survivor_count == 1);
    auto records = parse_lines(r.jsonl);
    REQUIRE(records.size() == 3);
    CHECK(records[1].contains("error"));
  }
}

TEST_CASE("empty planar_code stream: zero graphs, no error") {
  std::istringstream in{std::string(kPlanarCodeHeader)};
  std::ostringstream out;
  RunStats stats = run_filter(in, out, {});
  CHECK(stats.graphs_read == 0);
  CHECK(out.str().empty());
}

TEST_CASE("compact mode omits the candidate matrix") {
  FilterOptions opt;
  opt.compact = true;
  RunResult r = run_text(fixture_text("square"), opt);
  auto records = parse_lines(r.jsonl);
  REQUIRE(records.size() == 1);
  CHECK_FALSE(records[0].contains("candidates"));
  CHECK(records[0].at("excluded") == false);
}

TEST_CASE("lattice corpus generator: deterministic, valid, 2-connected") {
  std::string corpus = generate_lattice_corpus(5, 30, 10);
  CHECK(corpus == generate_lattice_corpus(5, 30, 10));
  CHECK(corpus != generate_lattice_corpus(6, 30, 10));
  auto graphs = parse_rotation_text(corpus);
  REQUIRE(graphs.size() == 30);
  bool any_square = false, any_triangular = false;
  for (const auto& g : graphs) {
    CAPTURE(g.name);
    CHECK_NOTHROW(g.validate());
    CHECK(connectivity(g, 2));
    any_square |= g.name.rfind("sq", 0) == 0;
    any_triangular |= g.name.rfind("tri", 0) == 0;
  }
  CHECK(any_square);
  CHECK(any_triangular);

  // spot-check: generated graphs are never excluded
  for (int i = 0; i < 5; ++i) {
    EvalOptions opt;
    opt.short_circuit = true;
    CHECK_FALSE(evaluate_graph(graphs[i], opt).excluded);
  }
}

TEST_CASE("CLI: filter exit codes and stats output") {
  auto good = temp_file("cli_good.txt", fixture_text("square"));
  auto stats_path = std::filesystem::temp_directory_path() / "cli_stats.json";
  std::string out;
  int code = run_cli("filter --input " + good.string() +
                     " --stats " + stats_path.string(), &out);
  CHECK(code == 0);
  auto records = parse_lines(out);
  REQUIRE(records.size() == 1);
  CHECK(records[0].at("excluded") == false);
  std::ifstream stats_file(stats_path);
  json stats = json::parse(stats_file);
  CHECK(stats.at("graphs_read") == 1);

  auto bad = temp_file("cli_bad.txt", "graph bad 3\n1: 2 3\n2: 3 1\n3: 1 2 2\n");
  CHECK(run_cli("filter --input " + bad.string(), &out) == 2);
  // lenient mode downgrades the malformed record
  CHECK(run_cli("filter --lenient --input " + bad.string(), &out) == 0);
  auto lenient_records = parse_lines(out);
  REQUIRE(lenient_records.size() == 1);
  CHECK(lenient_records[0].contains("error"));
}

TEST_CASE("CLI: criteria selection and bound mode flags are accepted") {
  auto input = temp_file("cli_oct.txt", fixture_text("octahedron"));
  std::string out;
  int code = run_cli("filter --criteria area,chain --short-circuit --compact"
                     " --lp-bound paper --jobs 2 --input " + input.string(), &out);
  CHECK(code == 0);
  auto records = parse_lines(out);
  REQUIRE(records.size() == 1);
  CHECK(records[0].at("excluded") == true);
}

TEST_CASE("CLI: fixtures subcommand") {
  std::string out;
  CHECK(run_cli("fixtures fig2", &out) == 0);
  CHECK(out == fixture_text("fig2"));
  CHECK(run_cli("fixtures --all", &out) == 0);
  CHECK(parse_rotation_text(out).size() == 8);
  CHECK(run_cli("fixtures no_such_fixture", &out) != 0);
  // bare subcommand lists the known names
  CHECK(run_cli("fixtures", &out) == 0);
  CHECK(out.find("octahedron") != std::string::npos);
}

TEST_CASE("CLI: gen-lattice matches the library and is deterministic") {
  std::string a, b;
  CHECK(run_cli("gen-lattice --seed 3 --count 4 --size 8", &a) == 0);
  CHECK(run_cli("gen-lattice --seed 3 --count 4 --size 8", &b) == 0);
  CHECK(a == b);
  CHECK(a == generate_lattice_corpus(3, 4, 8));
}

TEST_CASE("CLI: MATCHSTICK_JOBS environment variable sets the default") {
  auto input = temp_file("cli_env.txt", all_fixtures_text());
  std::string serial, env_par;
  CHECK(run_cli("filter --input " + input.string(), &serial) == 0);
  std::string cmd = "MATCHSTICK_JOBS=3 " + std::string(MATCHSTICK_CLI_PATH) +
                    " filter --input " + input.string() + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) env_par.append(buf, got);
  CHECK(WEXITSTATUS(pclose(pipe)) == 0);
  CHECK(env_par == serial);  // worker count never changes the output
}
