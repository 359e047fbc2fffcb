#include <benchmark/benchmark.h>

#include "chaincode/kernels.hpp"
#include "chaincode/trace_codes.hpp"

using namespace chaincode;
namespace ks = chaincode::kernels;

namespace {

// The (3,4,2) D3 N'=4 code: 6561 codewords x 810 coordinates.
const TraceCode& example2() {
  static const TraceCode code = [] {
    ChainRing ext(Field(3, 4), 2);
    auto set = build_d3(ext, 4);
    return TraceCode(std::move(ext), std::move(set));
  }();
  return code;
}

void BM_histogram_serial(benchmark::State& st) {
  const auto& t = example2().tables();
  for (auto _ : st) benchmark::DoNotOptimize(ks::serial::weight_histogram(t, ks::WeightTable::homogeneous));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(t.code_size * t.length));
}

void BM_histogram_omp(benchmark::State& st) {
  const auto& t = example2().tables();
  const int threads = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(ks::omp::weight_histogram(t, ks::WeightTable::homogeneous, threads));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(t.code_size * t.length));
}

void BM_materialize_serial(benchmark::State& st) {
  const auto& t = example2().tables();
  std::vector<std::uint32_t> out(1024 * t.length);
  for (auto _ : st) {
    ks::serial::materialize(t, 0, 1024, out);
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_materialize_omp(benchmark::State& st) {
  const auto& t = example2().tables();
  std::vector<std::uint32_t> out(1024 * t.length);
  for (auto _ : st) {
    ks::omp::materialize(t, 0, 1024, out, static_cast<int>(st.range(0)));
    benchmark::DoNotOptimize(out.data());
  }
}

}  // namespace

BENCHMARK(BM_histogram_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_histogram_omp)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_materialize_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_materialize_omp)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
