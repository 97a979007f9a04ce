#include <benchmark/benchmark.h>

#include <random>

#include "fsm/scattering.hpp"

using namespace fsm;

static void BM_OnSigmaEvaluate(benchmark::State& state) {
  const auto m = make_on_sigma(static_cast<int>(state.range(0)));
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(m->evaluate(t));
    t += 1e-3;
  }
}
BENCHMARK(BM_OnSigmaEvaluate)->Arg(3)->Arg(5);

static void BM_YangBaxterCheck(benchmark::State& state) {
  const auto m = make_on_sigma(3);
  for (auto _ : state) benchmark::DoNotOptimize(check_yang_baxter(*m, 0.7, -1.3));
}
BENCHMARK(BM_YangBaxterCheck);

static void BM_Symmetrize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto space = make_fock_space(make_on_sigma(3), 8, 4.0, n);
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  Level x(space->level_size(n));
  for (auto& v : x) v = cplx(g(rng), g(rng));
  for (auto _ : state) benchmark::DoNotOptimize(symmetrize(*space, x, n));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(x.size()));
}
BENCHMARK(BM_Symmetrize)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_CreateAnnihilate(benchmark::State& state) {
  const auto space = make_fock_space(make_on_sigma(3), 8, 4.0, 4);
  std::mt19937_64 rng(2);
  const CVector phi = random_one_particle(*space, rng);
  const FockState psi = random_state(space, rng, 3);
  for (auto _ : state) benchmark::DoNotOptimize(annihilate(phi, create(phi, psi)));
}
BENCHMARK(BM_CreateAnnihilate)->Unit(benchmark::kMillisecond);

static void BM_WedgeDefect(benchmark::State& state) {
  const auto m = make_sinh_gordon(1.0);
  const auto space = make_fock_space(m, 6, 4.4, 2);
  const FockState omega = FockState::vacuum(space);
  const auto f = TestFunction::wedge({0.805, 2.343, 0.652, 2.271}, {1.0});
  const auto g = TestFunction::wedge({-2.288, -0.696, 2.17, 0.642}, {1.0});
  WedgeOptions opt;
  opt.theta_max = 4.4;
  opt.nodes = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wedge_commutator_defect(f, g, omega, opt));
}
BENCHMARK(BM_WedgeDefect)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_ScatteringTensor(benchmark::State& state) {
  const auto m = make_on_sigma(3);
  std::vector<double> th{0.9, -1.2, 0.3, 2.1};
  th.resize(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(scattering_tensor(*m, th));
}
BENCHMARK(BM_ScatteringTensor)->DenseRange(2, 4);

BENCHMARK_MAIN();
