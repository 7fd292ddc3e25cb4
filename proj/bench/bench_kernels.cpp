/*
 Copyright 2026 reachkit contributors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#include <benchmark/benchmark.h>

#include "reachkit/sim_oracle.hpp"
#include "reachkit/volume.hpp"

namespace {

using namespace reachkit;

LtiProblem example_problem() {
  LtiProblem p;
  p.A.resize(2, 2);
  p.A << 0.1, 0.2, -0.3, 0.1;
  p.b.resize(2);
  p.b << 1.0, 2.0;
  p.v_min = -0.2;
  p.v_max = 0.2;
  p.z0 = Vector::Zero(2);
  p.t_final = 3.0;
  return p;
}

struct Fixture {
  LtiProblem problem = example_problem();
  CanonicalForm cf;
  Kernel kernel;
  InputEnvelope envelope;

  Fixture() {
    cf = canonical_transform(problem);
    kernel = make_kernel(cf, problem.settings);
    envelope = build_envelope(problem, cf, kernel);
  }
};

Fixture& fixture() {
  static Fixture f;
  return f;
}

void bench_boundary_sweep(benchmark::State& state, Exec exec) {
  Fixture& f = fixture();
  const auto grid = weyl_grid(f.problem.t_final, 2, 400);
  const Vector x0 = f.cf.M * f.problem.z0;
  for (auto _ : state) {
    auto samples =
        sweep_boundary(grid, f.envelope, x0, f.problem.t_final, f.cf, exec);
    benchmark::DoNotOptimize(samples);
  }
}

void bench_volume(benchmark::State& state, Exec exec) {
  Fixture& f = fixture();
  LtiProblem problem = f.problem;
  problem.settings.sigma_grid = 400;
  problem.settings.lambda_grid = 400;
  for (auto _ : state) {
    auto result = volume_reach_set(problem, f.envelope, f.cf, exec);
    benchmark::DoNotOptimize(result);
  }
}

void bench_monte_carlo(benchmark::State& state, Exec exec) {
  Fixture& f = fixture();
  for (auto _ : state) {
    auto report =
        monte_carlo_containment(f.problem, f.envelope, f.cf, 200, 1e-5, exec);
    benchmark::DoNotOptimize(report);
  }
}

}  // namespace

BENCHMARK_CAPTURE(bench_boundary_sweep, serial, Exec::serial);
BENCHMARK_CAPTURE(bench_boundary_sweep, parallel, Exec::parallel);
BENCHMARK_CAPTURE(bench_volume, serial, Exec::serial);
BENCHMARK_CAPTURE(bench_volume, parallel, Exec::parallel);
BENCHMARK_CAPTURE(bench_monte_carlo, serial, Exec::serial);
BENCHMARK_CAPTURE(bench_monte_carlo, parallel, Exec::parallel);

BENCHMARK_MAIN();
