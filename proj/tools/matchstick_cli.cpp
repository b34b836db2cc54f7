// Command-line front end: filter graph streams through the matchstick
// criteria, dump the built-in fixture corpus, and generate lattice test
// corpora. One JSON object per input graph on stdout; run statistics on
// stderr or --stats FILE.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "matchstick/fixtures.hpp"
#include "matchstick/lattice.hpp"
#include "matchstick/pipeline.hpp"

namespace {

int default_jobs() {
  if (const char* env = std::getenv("MATCHSTICK_JOBS")) {
    try {
      int j = std::stoi(env);
      if (j >= 1) return j;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid MATCHSTICK_JOBS='" << env << "'\n";
  }
  return 1;
}

bool parse_criteria(const std::string& spec, std::set<matchstick::Criterion>& out) {
  using matchstick::Criterion;
  out.clear();
  std::istringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "area")
      out.insert(Criterion::area);
    else if (tok == "chain" || tok == "triangle_chain")
      out.insert(Criterion::triangle_chain);
    else if (tok == "local" || tok == "local_angle")
      out.insert(Criterion::local_angle);
    else if (tok == "lp" || tok == "angle_lp")
      out.insert(Criterion::angle_lp);
    else
      return false;
  }
  return !out.empty();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matchstick graph filter"};
  app.require_subcommand(1);

  // filter
  auto* filter = app.add_subcommand(
      "filter", "evaluate graphs from a stream, one JSON record per line");
  std::string input = "-";
  std::string format = "auto";
  std::string criteria = "area,chain,local,lp";
  std::string lp_bound = "lemma";
  std::string stats_path;
  bool short_circuit = false, lenient = false, compact = false;
  int jobs = default_jobs();
  filter->add_option("--input", input, "input file, '-' for stdin")
      ->capture_default_str();
  filter->add_option("--format", format, "input format")
      ->check(CLI::IsMember({"auto", "planar_code", "text"}))
      ->capture_default_str();
  filter->add_option("--criteria", criteria,
                     "comma list of area,chain,local,lp")
      ->capture_default_str();
  filter->add_option("--lp-bound", lp_bound, "pair bound for large inner faces")
      ->check(CLI::IsMember({"lemma", "paper"}))
      ->capture_default_str();
  filter->add_flag("--short-circuit", short_circuit,
                   "stop at the first rejection per outer-face candidate");
  filter->add_option("--jobs", jobs,
                     "worker threads (default $MATCHSTICK_JOBS or 1; 0 = all cores)");
  filter->add_flag("--lenient", lenient,
                   "skip invalid graphs with an error record instead of aborting");
  filter->add_flag("--compact", compact, "omit per-candidate verdicts from records");
  filter->add_option("--stats", stats_path,
                     "write run statistics JSON to this file instead of stderr");

  // fixtures
  auto* fixtures = app.add_subcommand(
      "fixtures", "print built-in reference graphs in rotation-text form");
  std::string fixture_name;
  bool fixtures_all = false;
  fixtures->add_option("name", fixture_name, "fixture to print");
  fixtures->add_flag("--all", fixtures_all, "print the whole corpus");

  // gen-lattice
  auto* gen = app.add_subcommand(
      "gen-lattice", "generate a seeded corpus of lattice matchstick graphs");
  std::uint64_t seed = 1;
  int count = 10, size = 12;
  gen->add_option("--seed", seed, "random seed")->capture_default_str();
  gen->add_option("--count", count, "number of graphs")->capture_default_str();
  gen->add_option("--size", size, "maximum cell count per graph")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (filter->parsed()) {
      matchstick::FilterOptions options;
      if (format == "planar_code")
        options.format = matchstick::InputFormat::planar_code;
      else if (format == "text")
        options.format = matchstick::InputFormat::text;
      if (!parse_criteria(criteria, options.eval.enabled)) {
        std::cerr << "error: bad --criteria list '" << criteria << "'\n";
        return 1;
      }
      options.eval.bound_mode = lp_bound == "paper" ? matchstick::LPBoundMode::paper
                                                    : matchstick::LPBoundMode::lemma;
      options.eval.short_circuit = short_circuit;
      options.jobs = jobs;
      options.lenient = lenient;
      options.compact = compact;

      std::ifstream file;
      std::istream* in = &std::cin;
      if (input != "-") {
        file.open(input, std::ios::binary);
        if (!file) {
          std::cerr << "error: cannot open " << input << "\n";
          return 1;
        }
        in = &file;
      }

      matchstick::RunStats stats = matchstick::run_filter(*in, std::cout, options);
      if (stats_path.empty()) {
        std::cerr << stats.to_json() << "\n";
      } else {
        std::ofstream sf(stats_path);
        if (!sf) {
          std::cerr << "error: cannot write " << stats_path << "\n";
          return 1;
        }
        sf << stats.to_json() << "\n";
      }
      return 0;
    }

    if (fixtures->parsed()) {
      if (fixtures_all) {
        std::cout << matchstick::all_fixtures_text();
      } else if (!fixture_name.empty()) {
        std::cout << matchstick::fixture_text(fixture_name);
      } else {
        for (const auto& name : matchstick::fixture_names()) std::cout << name << "\n";
      }
      return 0;
    }

    if (gen->parsed()) {
      std::cout << matchstick::generate_lattice_corpus(seed, count, size);
      return 0;
    }
  } catch (const matchstick::ParseError& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
