#include <benchmark/benchmark.h>

#include "polygf/appell.hpp"
#include "polygf/geometry.hpp"
#include "polygf/polygon_series.hpp"

using namespace polygf;

namespace {

const ModularPoint tau(0.1, 1.2);

Complex at(Real a, Real b) { return a * tau.tau() + b; }

void BM_theta(benchmark::State& st) {
  Complex z = at(0.3, 0.1);
  for (auto _ : st) benchmark::DoNotOptimize(theta(z, tau));
}
BENCHMARK(BM_theta);

void BM_mu(benchmark::State& st) {
  Complex u = at(0.3, 0.1), w = at(0.55, -0.2);
  for (auto _ : st) benchmark::DoNotOptimize(mu(u, w, tau));
}
BENCHMARK(BM_mu);

void BM_mu_hat(benchmark::State& st) {
  Complex u = at(0.3, 0.1), w = at(0.55, -0.2);
  for (auto _ : st) benchmark::DoNotOptimize(mu_hat(u, w, tau));
}
BENCHMARK(BM_mu_hat);

void BM_f2_series(benchmark::State& st) {
  Vec2 z{at(0.3, 0.1), at(0.45, -0.2)};
  for (auto _ : st) benchmark::DoNotOptimize(f2_series(z, tau));
}
BENCHMARK(BM_f2_series);

void BM_f2_closed(benchmark::State& st) {
  Vec2 z{at(0.3, 0.1), at(0.45, -0.2)};
  for (auto _ : st) benchmark::DoNotOptimize(f2_closed(z, tau));
}
BENCHMARK(BM_f2_closed);

void BM_f3_series(benchmark::State& st) {
  Vec2 z{at(0.45, 0.1), at(0.2, -0.2)};
  for (auto _ : st) benchmark::DoNotOptimize(f3_series(z, tau));
}
BENCHMARK(BM_f3_series);

void BM_f4_series(benchmark::State& st) {
  Vec3 z{at(0.45, 0.1), at(0.55, -0.2), at(0.2, 0.05)};
  for (auto _ : st) benchmark::DoNotOptimize(f4_series(z, tau));
}
BENCHMARK(BM_f4_series);

void BM_g4_closed(benchmark::State& st) {
  Vec3 z{at(0.45, 0.1), at(0.55, -0.2), at(0.2, 0.05)};
  for (auto _ : st) benchmark::DoNotOptimize(g4_closed(z, tau));
}
BENCHMARK(BM_g4_closed);

void BM_f4_hat(benchmark::State& st) {
  Vec3 z{at(0.45, 0.1), at(0.55, -0.2), at(0.2, 0.05)};
  for (auto _ : st) benchmark::DoNotOptimize(f4_hat(z, tau));
}
BENCHMARK(BM_f4_hat);

void BM_f5_series(benchmark::State& st) {
  Vec4 z{at(0.15, 0.1), at(0.18, 0.2), at(0.03, 0.3), at(0.02, 0.4)};
  for (auto _ : st) benchmark::DoNotOptimize(f5_series(z, ModularPoint(0.05, 1.6)));
}
BENCHMARK(BM_f5_series)->Unit(benchmark::kMillisecond);

void BM_enumerate(benchmark::State& st) {
  std::vector<Real> alpha{0.45, 0.35, 0.15};
  auto ref = geometry::make_reference(geometry::Shape::pentagon, alpha);
  geometry::EnumerationOptions opt;
  opt.q_cut = Real(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(geometry::enumerate(ref, opt).instances.size());
}
BENCHMARK(BM_enumerate)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
