#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "matchstick/criteria.hpp"

namespace matchstick {

enum class InputFormat { autodetect, planar_code, text };

struct FilterOptions {
  InputFormat format = InputFormat::autodetect;
  EvalOptions eval;
  int jobs = 1;           // worker threads; <=0 means hardware concurrency
  bool lenient = false;   // skip invalid graphs with an error record
  bool compact = false;   // omit per-candidate verdict matrix from records
};

struct RunStats {
  long graphs_read = 0;
  long excluded_count = 0;
  long survivor_count = 0;
  long error_count = 0;
  // first-rejecting criterion, counted once per rejected candidate and
  // once per excluded graph
  std::map<std::string, long> candidate_rejections;
  std::map<std::string, long> graph_rejections;
  double wall_seconds = 0.0;
  double graphs_per_second = 0.0;

  std::string to_json() const;
};

// Reads a graph stream, evaluates every graph, writes one JSON object per
// line in input order. Returns aggregate statistics. Propagates ParseError
// for malformed input unless options.lenient allows skipping the record.
RunStats run_filter(std::istream& in, std::ostream& jsonl, const FilterOptions& options);

// JSONL record for a single evaluated graph (schema documented in README).
std::string report_to_json(const EvalReport& report, long index, bool compact);

}  // namespace matchstick
