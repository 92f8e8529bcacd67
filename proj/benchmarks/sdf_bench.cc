// Copyright 2026 The Midair Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "bench_util.h"
#include "midair/sdf.h"

namespace midair {
namespace {

std::vector<Vec3> Points(const Scene& scene, int n) {
  const Aabb box = NodeAabb(scene, scene.root());
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Vec3> out(n);
  for (Vec3& p : out) {
    p = box.min + Vec3(u(rng), u(rng), u(rng)).cwiseProduct(box.max - box.min);
  }
  return out;
}

void BM_SignedDistancePointwise(benchmark::State& state) {
  const Scene scene = bench::Fixture("object2");
  const auto points = Points(scene, 4096);
  for (auto _ : state) {
    double sum = 0;
    for (const Vec3& p : points) sum += SignedDistance(scene, p);
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() * points.size());
}
BENCHMARK(BM_SignedDistancePointwise);

void BM_SignedDistanceBatch(benchmark::State& state) {
  const Scene scene = bench::Fixture("object2");
  const auto points = Points(scene, 4096);
  for (auto _ : state) benchmark::DoNotOptimize(SignedDistanceBatch(scene, scene.root(), points));
  state.SetItemsProcessed(state.iterations() * points.size());
}
BENCHMARK(BM_SignedDistanceBatch);

void BM_Contains(benchmark::State& state) {
  const Scene scene = bench::Fixture("object2");
  const auto points = Points(scene, 4096);
  for (auto _ : state) {
    int inside = 0;
    for (const Vec3& p : points) inside += Contains(scene, p);
    benchmark::DoNotOptimize(inside);
  }
  state.SetItemsProcessed(state.iterations() * points.size());
}
BENCHMARK(BM_Contains);

}  // namespace
}  // namespace midair
