// Copyright 2026 The Origrip Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include <benchmark/benchmark.h>

#include "origrip/closure.hpp"
#include "origrip/multiobject_planner.hpp"
#include "origrip/scenario.hpp"
#include "support/oracles.hpp"

namespace origrip {
namespace {

void BM_ForceClosure(benchmark::State& state) {
  std::mt19937 rng(1);
  std::vector<std::vector<Wrench>> sets;
  for (int i = 0; i < 64; ++i) sets.push_back(contact_wrench_primitives(testing::random_contact_set(rng)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_force_closure(sets[i++ % sets.size()]));
  }
}
BENCHMARK(BM_ForceClosure);

void BM_ResolveContacts(benchmark::State& state) {
  const GripperConfig g;
  const auto sphere = centred_between_levels(ObjectShape::sphere(60), g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(resolve_contacts(50.0, sphere, g, tpu95a(), 0.3));
  }
}
BENCHMARK(BM_ResolveContacts);

void BM_HoldWindow(benchmark::State& state) {
  const auto scene = stacked_scene(demo_scene("stack_spheres"), builtin_material_library());
  const auto [top, bottom] = place_stack(scene);
  const auto ctx = HoldContext::from(scene);
  for (auto _ : state) benchmark::DoNotOptimize(hold_window(top, ctx));
}
BENCHMARK(BM_HoldWindow);

void BM_PlanStacked(benchmark::State& state) {
  const auto scene = stacked_scene(demo_scene("stack_spheres"), builtin_material_library());
  for (auto _ : state) benchmark::DoNotOptimize(plan_stacked(scene));
}
BENCHMARK(BM_PlanStacked);

}  // namespace
}  // namespace origrip

BENCHMARK_MAIN();
