#include <benchmark/benchmark.h>

#include "generators.hpp"
#include "qbundle/bundle.hpp"
#include "qbundle/galois.hpp"
#include "qbundle/oper.hpp"
#include "qbundle/presentation.hpp"

using namespace qbundle;

// Completion of the 3-sphere relations at cap D (uncached).
static void BM_CompleteS3(benchmark::State& state) {
  const int cap = static_cast<int>(state.range(0));
  std::size_t rules = 0;
  for (auto _ : state) {
    const auto p = load_presentation(builtin_document("s3"), AlgebraParams::defaults(), cap);
    rules = p->system().rules().size();
    benchmark::DoNotOptimize(rules);
  }
  state.counters["rules"] = static_cast<double>(rules);
}
BENCHMARK(BM_CompleteS3)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

static void BM_NormalForm(benchmark::State& state) {
  const auto s3 = builtin_presentation("s3");
  qtest::Gen gen(99);
  std::vector<NCPoly> inputs;
  for (int i = 0; i < 64; ++i) inputs.push_back(gen.poly(s3->alphabet(), static_cast<int>(state.range(0)), 6));
  for (auto _ : state)
    for (const auto& f : inputs) benchmark::DoNotOptimize(s3->nf(f));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(inputs.size()));
}
BENCHMARK(BM_NormalForm)->Arg(4)->Arg(8)->Arg(12);

static void BM_RankOfImage(benchmark::State& state) {
  const auto bundle = StandardBundle::get();
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rank_of_image(d, *bundle));
}
BENCHMARK(BM_RankOfImage)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

// Fresh connection each iteration so the recursion is timed.
static void BM_Projector(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    StrongConnection l;
    benchmark::DoNotOptimize(projector(n, l));
  }
}
BENCHMARK(BM_Projector)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_Pairing(benchmark::State& state) {
  StrongConnection l;
  const ProjectorMatrix e = projector(static_cast<int>(state.range(0)), l);
  for (auto _ : state) benchmark::DoNotOptimize(chern_pairing(e, l, 128, 64));
}
BENCHMARK(BM_Pairing)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
