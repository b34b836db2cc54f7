#include "matchstick/pipeline.hpp"

#include <chrono>
#include <condition_variable>
#include <deque>
#include <istream>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <variant>
#include <vector>

#include <json.hpp>

#include "matchstick/planar.hpp"

namespace matchstick {

namespace {

using nlohmann::json;

struct Job {
  long index = 0;
  std::variant<PlanarEmbedding, std::string> payload;  // graph or error message
};

// Incremental graph reader so that lenient mode can skip a bad record and
// keep going. Framing errors (truncated planar_code records) are not
// recoverable and always propagate.
class Source {
 public:
  virtual ~Source() = default;
  virtual bool next(Job& job, bool lenient) = 0;
};

class PlanarCodeSource : public Source {
 public:
  explicit PlanarCodeSource(std::istream& in) : in_(in) {
    for (const char* p = kPlanarCodeHeader; *p; ++p) {
      if (in_.get() != (*p & 0xff))
        throw ParseError("malformed planar_code header", offset_, 0);
      ++offset_;
    }
  }

  bool next(Job& job, bool lenient) override {
    if (in_.peek() == std::char_traits<char>::eof()) return false;
    std::int64_t record_start = offset_;
    job.index = index_;

    int wide = 0;
    int n = byte();
    if (n == 0) {
      wide = 1;
      n = word();
    }
    if (n == 0) throw ParseError("zero vertex count", record_start, index_);

    PlanarEmbedding g;
    g.vertex_count = n;
    g.rotation.resize(n);
    for (int v = 0; v < n; ++v) {
      for (;;) {
        int u = wide ? word() : byte();
        if (u == 0) break;
        g.rotation[v].push_back(u - 1);
      }
    }
    try {
      g.validate(record_start, index_);
    } catch (const ParseError& e) {
      if (!lenient) throw;
      job.payload = std::string(e.what());
      ++index_;
      return true;
    }
    job.payload = std::move(g);
    ++index_;
    return true;
  }

 private:
  int byte() {
    int c = in_.get();
    if (c == std::char_traits<char>::eof())
      throw ParseError("truncated graph record", offset_, index_);
    ++offset_;
    return c & 0xff;
  }
  int word() {
    int lo = byte();
    int hi = byte();
    return lo | (hi << 8);
  }

  std::istream& in_;
  std::int64_t offset_ = 0;
  long index_ = 0;
};

class TextSource : public Source {
 public:
  explicit TextSource(std::istream& in) : in_(in) {}

  bool next(Job& job, bool lenient) override {
    for (;;) {
      if (!pending_.empty()) {
        job = std::move(pending_.front());
        pending_.pop_front();
        return true;
      }
      // gather one blank-line-separated block
      std::string block, line;
      bool any = false;
      while (std::getline(in_, line)) {
        std::string stripped = line.substr(0, line.find('#'));
        if (stripped.find_first_not_of(" \t\r") == std::string::npos) {
          if (any) break;
          continue;
        }
        any = true;
        block += line;
        block += '\n';
      }
      if (!any) return false;
      try {
        for (auto& g : parse_rotation_text(block)) {
          Job j;
          j.index = index_++;
          j.payload = std::move(g);
          pending_.push_back(std::move(j));
        }
      } catch (const ParseError& e) {
        if (!lenient)
          throw ParseError(e.what(), e.byte_offset, index_);
        Job j;
        j.index = index_++;
        j.payload = std::string(e.what());
        pending_.push_back(std::move(j));
      }
    }
  }

 private:
  std::istream& in_;
  std::deque<Job> pending_;
  long index_ = 0;
};

struct Result {
  std::string line;
  bool error = false;
  bool excluded = false;
  std::map<std::string, long> candidate_rejections;
  std::map<std::string, long> graph_rejections;
};

const char* first_reject(const OuterFaceReport& cand) {
  for (const auto& v : cand.verdicts)
    if (v.outcome == Outcome::reject) return to_string(v.criterion);
  return nullptr;
}

Result process(Job&& job, const FilterOptions& options) {
  Result res;
  if (std::holds_alternative<std::string>(job.payload)) {
    json rec;
    rec["index"] = job.index;
    rec["error"] = std::get<std::string>(job.payload);
    res.line = rec.dump();
    res.error = true;
    return res;
  }
  const PlanarEmbedding& g = std::get<PlanarEmbedding>(job.payload);
  EvalReport report = evaluate_graph(g, options.eval);
  res.line = report_to_json(report, job.index, options.compact);
  res.excluded = report.excluded;

  bool graph_counted = false;
  for (const auto& cand : report.per_outer_face) {
    if (const char* c = first_reject(cand)) {
      ++res.candidate_rejections[c];
      if (report.excluded && !graph_counted) {
        ++res.graph_rejections[c];
        graph_counted = true;
      }
    }
  }
  return res;
}

}  // namespace

std::string report_to_json(const EvalReport& report, long index, bool compact) {
  json rec;
  rec["index"] = index;
  rec["name"] = report.name;
  rec["n"] = report.n;
  rec["edges"] = report.edge_count;
  rec["connectivity"] = report.connectivity;
  if (report.r)
    rec["regular"] = *report.r;
  else
    rec["regular"] = nullptr;
  rec["excluded"] = report.excluded;
  json crits = json::array();
  for (Criterion c : report.rejecting_criteria) crits.push_back(to_string(c));
  rec["rejecting_criteria"] = crits;
  if (!compact) {
    json cands = json::array();
    for (const auto& cand : report.per_outer_face) {
      json jc;
      jc["face"] = cand.face;
      jc["k"] = cand.k;
      jc["rejected"] = cand.rejected();
      json verdicts = json::array();
      for (const auto& v : cand.verdicts) {
        verdicts.push_back({{"criterion", to_string(v.criterion)},
                            {"outcome", to_string(v.outcome)},
                            {"witness", v.witness}});
      }
      jc["verdicts"] = verdicts;
      cands.push_back(jc);
    }
    rec["candidates"] = cands;
  }
  return rec.dump();
}

std::string RunStats::to_json() const {
  json j;
  j["graphs_read"] = graphs_read;
  j["excluded"] = excluded_count;
  j["survivors"] = survivor_count;
  j["errors"] = error_count;
  j["candidate_rejections"] = candidate_rejections;
  j["graph_rejections"] = graph_rejections;
  j["wall_seconds"] = wall_seconds;
  j["graphs_per_second"] = graphs_per_second;
  return j.dump();
}

RunStats run_filter(std::istream& in, std::ostream& jsonl, const FilterOptions& options) {
  auto t0 = std::chrono::steady_clock::now();

  InputFormat format = options.format;
  if (format == InputFormat::autodetect)
    format = in.peek() == '>' ? InputFormat::planar_code : InputFormat::text;
  std::unique_ptr<Source> source;
  if (format == InputFormat::planar_code)
    source = std::make_unique<PlanarCodeSource>(in);
  else
    source = std::make_unique<TextSource>(in);

  int workers = options.jobs > 0
                    ? options.jobs
                    : std::max(1u, std::thread::hardware_concurrency());

  RunStats stats;
  auto account = [&](const Result& res) {
    ++stats.graphs_read;
    if (res.error) {
      ++stats.error_count;
      return;
    }
    if (res.excluded)
      ++stats.excluded_count;
    else
      ++stats.survivor_count;
    for (const auto& [k, v] : res.candidate_rejections) stats.candidate_rejections[k] += v;
    for (const auto& [k, v] : res.graph_rejections) stats.graph_rejections[k] += v;
  };

  if (workers == 1) {
    Job job;
    while (source->next(job, options.lenient)) {
      Result res = process(std::move(job), options);
      account(res);
      jsonl << res.line << '\n';
    }
  } else {
    std::mutex mu;
    std::condition_variable cv_work, cv_out;
    std::deque<Job> queue;
    std::map<long, Result> done;
    int in_flight = 0;
    bool input_done = false;
    std::exception_ptr failure;
    const std::size_t queue_cap = static_cast<std::size_t>(4 * workers);

    auto worker = [&] {
      for (;;) {
        Job job;
        {
          std::unique_lock<std::mutex> lk(mu);
          cv_work.wait(lk, [&] { return !queue.empty() || input_done || failure; });
          if (failure || (queue.empty() && input_done)) return;
          job = std::move(queue.front());
          queue.pop_front();
          ++in_flight;
        }
        cv_work.notify_all();
        long index = job.index;
        try {
          Result res = process(std::move(job), options);
          std::lock_guard<std::mutex> lk(mu);
          done.emplace(index, std::move(res));
          --in_flight;
        } catch (...) {
          std::lock_guard<std::mutex> lk(mu);
          if (!failure) failure = std::current_exception();
          --in_flight;
        }
        cv_out.notify_all();
      }
    };

    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);

    // reader: feed the queue, bounded so memory stays flat on huge streams
    std::thread reader([&] {
      try {
        Job job;
        while (source->next(job, options.lenient)) {
          std::unique_lock<std::mutex> lk(mu);
          cv_work.wait(lk, [&] { return queue.size() < queue_cap || failure; });
          if (failure) break;
          queue.push_back(std::move(job));
          job = Job{};
          cv_work.notify_one();
        }
      } catch (...) {
        std::lock_guard<std::mutex> lk(mu);
        if (!failure) failure = std::current_exception();
      }
      {
        std::lock_guard<std::mutex> lk(mu);
        input_done = true;
      }
      cv_work.notify_all();
      cv_out.notify_all();
    });

    // writer: emit results in input order
    long next_index = 0;
    for (;;) {
      Result res;
      {
        std::unique_lock<std::mutex> lk(mu);
        cv_out.wait(lk, [&] {
          return failure || done.count(next_index) ||
                 (input_done && queue.empty() && in_flight == 0 && done.empty());
        });
        if (failure) break;
        auto it = done.find(next_index);
        if (it == done.end()) break;  // no more results are coming
        res = std::move(it->second);
        done.erase(it);
      }
      account(res);
      jsonl << res.line << '\n';
      ++next_index;
    }

    reader.join();
    cv_work.notify_all();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  auto t1 = std::chrono::steady_clock::now();
  stats.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
  stats.graphs_per_second =
      stats.wall_seconds > 0 ? stats.graphs_read / stats.wall_seconds : 0.0;
  return stats;
}

}  // namespace matchstick
