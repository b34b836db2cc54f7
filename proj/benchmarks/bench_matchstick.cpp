#include <benchmark/benchmark.h>

#include <sstream>

#include "matchstick/criteria.hpp"
#include "matchstick/fixtures.hpp"
#include "matchstick/lattice.hpp"
#include "matchstick/pipeline.hpp"

using namespace matchstick;

namespace {

PlanarEmbedding fixture(const std::string& name) {
  return parse_rotation_text(fixture_text(name))[0];
}

void BM_trace_faces(benchmark::State& state) {
  PlanarEmbedding g = fixture("fig2");
  for (auto _ : state) benchmark::DoNotOptimize(trace_faces(g));
}
BENCHMARK(BM_trace_faces);

void BM_parse_planar_code(benchmark::State& state) {
  std::string bytes =
      serialize_planar_code({fixture("fig2"), fixture("fig5"), fixture("octahedron")});
  for (auto _ : state) benchmark::DoNotOptimize(parse_planar_code(bytes));
}
BENCHMARK(BM_parse_planar_code);

void BM_evaluate_area_only(benchmark::State& state) {
  PlanarEmbedding g = fixture("octahedron");
  EvalOptions opt;
  opt.enabled = {Criterion::area};
  opt.short_circuit = true;
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_graph(g, opt));
}
BENCHMARK(BM_evaluate_area_only);

void BM_evaluate_full(benchmark::State& state) {
  PlanarEmbedding g = fixture("fig5");
  EvalOptions opt;
  opt.short_circuit = true;
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_graph(g, opt));
}
BENCHMARK(BM_evaluate_full);

void BM_angle_lp_solve(benchmark::State& state) {
  PlanarEmbedding g = fixture("fig5");
  FaceSet fs = trace_faces(g);
  int outer_face = 0;
  for (int f = 1; f < fs.face_count(); ++f)
    if (fs.face_size(f) > fs.face_size(outer_face)) outer_face = f;
  auto outer = choose_outer_face(fs, outer_face, g.vertex_count);
  auto as = build_angle_system(g, fs, outer);
  for (auto _ : state)
    benchmark::DoNotOptimize(angle_lp_criterion(*as, fs, LPBoundMode::lemma));
}
BENCHMARK(BM_angle_lp_solve);

void BM_pipeline_fixture_corpus(benchmark::State& state) {
  std::string text = all_fixtures_text();
  FilterOptions opt;
  opt.eval.short_circuit = true;
  opt.compact = true;
  for (auto _ : state) {
    std::istringstream in(text);
    std::ostringstream out;
    benchmark::DoNotOptimize(run_filter(in, out, opt));
  }
}
BENCHMARK(BM_pipeline_fixture_corpus);

void BM_lattice_generation(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(generate_lattice_corpus(5, 10, 12));
}
BENCHMARK(BM_lattice_generation);

}  // namespace

BENCHMARK_MAIN();
