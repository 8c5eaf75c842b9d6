// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The crtresca Authors

#include "crtresca/assembly.hpp"
#include "crtresca/config.hpp"
#include "crtresca/solver.hpp"

#include <benchmark/benchmark.h>

#include <memory>

namespace {

using namespace crtresca;

std::shared_ptr<const CRSpace> space_for(int n)
{
  const auto cfg = preset("clamped-square");
  return build_space(std::make_shared<const Mesh>(generate_structured(cfg.domain, n)));
}

void BM_RefineUniform(benchmark::State& state)
{
  const Mesh base = generate_structured(preset("clamped-square").domain, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(refine_uniform(base));
}
BENCHMARK(BM_RefineUniform)->Arg(16)->Arg(32)->Arg(64);

void BM_AssembleStiffness(benchmark::State& state)
{
  const auto cfg = preset("clamped-square");
  const auto space = space_for(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(assemble_stiffness(space, cfg.material(), cfg.rho));
  state.counters["dof"] = space->n_dofs_reported();
}
BENCHMARK(BM_AssembleStiffness)->Arg(8)->Arg(32)->Arg(64);

void BM_Factorize(benchmark::State& state)
{
  const auto cfg = preset("clamped-square");
  const auto sys = assemble_stiffness(space_for(static_cast<int>(state.range(0))), cfg.material(),
                                      cfg.rho);
  for (auto _ : state)
    benchmark::DoNotOptimize(UzawaSolver(sys.stiffness, sys.contact, cfg.loads.friction_bound));
}
BENCHMARK(BM_Factorize)->Arg(8)->Arg(32)->Arg(64);

void BM_UzawaStep(benchmark::State& state)
{
  const auto cfg = preset("clamped-square");
  const auto space = space_for(static_cast<int>(state.range(0)));
  const auto sys = assemble_stiffness(space, cfg.material(), cfg.rho);
  const UzawaSolver solver(sys.stiffness, sys.contact, cfg.loads.friction_bound);
  const Eigen::VectorXd F = assemble_load(*space, cfg.loads, 0.5);
  const Eigen::VectorXd prev = Eigen::VectorXd::Zero(F.size());
  int iterations = 0;
  for (auto _ : state) {
    const auto out = solver.solve(F, prev, 0.025, {}, cfg.uzawa);
    iterations = out.iterations;
    benchmark::DoNotOptimize(out.u.data());
  }
  state.counters["uzawa_iterations"] = iterations;
}
BENCHMARK(BM_UzawaStep)->Arg(8)->Arg(32)->Arg(64);

void BM_March(benchmark::State& state)
{
  const auto cfg = preset("clamped-square");
  const int n = static_cast<int>(state.range(0));
  const auto sys = assemble_stiffness(space_for(n), cfg.material(), cfg.rho);
  const TimeGrid grid{cfg.final_time, cfg.base_steps * n / cfg.base_subdivisions};
  for (auto _ : state)
    benchmark::DoNotOptimize(march(sys, cfg.loads, grid, cfg.uzawa));
}
BENCHMARK(BM_March)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
