// Serial reference vs OpenMP kernels on the surface (1,2) group.

#include <benchmark/benchmark.h>

#include "hgl/complex.hpp"
#include "hgl/kernels.hpp"
#include "hgl/truncated_homology.hpp"

using namespace hgl;

namespace {

struct Fixture {
  GroupSpec spec = GroupSpec::surface(1, 2);
  GroupElement z = spec.element({0, 0, 1, 0});
  Support box;
  explicit Fixture(std::int64_t radius) : box(box_support(spec, radius)) {}
};

template <bool Parallel>
void enumerate_triples(benchmark::State& state) {
  const Fixture f(state.range(0));
  for (auto _ : state) {
    auto t = Parallel ? kernels::parallel::enumerate_triples(f.box, f.z, Restrict::full)
                      : kernels::serial::enumerate_triples(f.box, f.z, Restrict::full);
    benchmark::DoNotOptimize(t.data());
    state.counters["triples"] = static_cast<double>(t.size());
  }
}

template <bool Parallel>
void boundary3_columns(benchmark::State& state) {
  const Fixture f(state.range(0));
  const kernels::GradedFrame frame(f.spec, f.box, f.z);
  const auto triples = kernels::serial::enumerate_triples(f.box, f.z, Restrict::full);
  for (auto _ : state) {
    auto c = Parallel ? kernels::parallel::boundary3_columns(frame, triples)
                      : kernels::serial::boundary3_columns(frame, triples);
    benchmark::DoNotOptimize(c.data());
  }
}

template <bool Parallel>
void truncated(benchmark::State& state) {
  const Fixture f(1);
  const auto big = box_support(f.spec, state.range(0));
  for (auto _ : state) {
    auto r = truncated_h2(f.spec, f.box, big, f.z, Restrict::full, std::nullopt, Parallel);
    benchmark::DoNotOptimize(r.h2);
  }
}

}  // namespace

BENCHMARK(enumerate_triples<false>)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(enumerate_triples<true>)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(boundary3_columns<false>)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(boundary3_columns<true>)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(truncated<false>)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(truncated<true>)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
