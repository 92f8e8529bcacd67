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

#include "midair/mesher.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <unordered_map>

#include "case_table.h"
#include "midair/errors.h"
#include "midair/sdf.h"

namespace midair {

GridSpec::GridSpec(int resolution, int padding)
    : resolution_(resolution), padding_(padding) {
  if (resolution < kMinResolution || resolution > kMaxResolution) {
    throw Error(ErrorCode::kResolutionOutOfRange,
                "resolution " + std::to_string(resolution) +
                    " outside the supported range [8, 1024]");
  }
  if (padding < 1 || padding > 64) {
    throw Error(ErrorCode::kResolutionOutOfRange, "padding must lie in [1, 64]");
  }
}

namespace {

// Keeps interpolated vertices off grid corners so no triangle collapses.
constexpr double kCornerMargin = 1e-3;
// Layers sampled per batch; bounds memory to O(nx * ny * kLayerBatch).
constexpr int kLayerBatch = 8;

class Extractor {
 public:
  Extractor(const Scene& scene, const CsgNode& node, const Aabb& box,
            const GridSpec& spec)
      : scene_(scene), node_(node) {
    const Vec3 size = box.Size();
    h_ = size.maxCoeff() / spec.resolution();
    for (int a = 0; a < 3; ++a) {
      cells_[a] = static_cast<int64_t>(std::ceil(size[a] / h_ - 1e-9)) +
                  2 * spec.padding();
      cells_[a] = std::max<int64_t>(cells_[a], 1 + 2 * spec.padding());
      origin_[a] = box.Center()[a] - 0.5 * cells_[a] * h_;
    }
  }

  TriangleMesh Run() {
    const int64_t nx = cells_[0] + 1, ny = cells_[1] + 1, nz = cells_[2] + 1;
    std::vector<double> prev = SampleLayers(0, 1);
    for (int64_t z0 = 1; z0 < nz; z0 += kLayerBatch) {
      const int64_t z1 = std::min(nz, z0 + kLayerBatch);
      std::vector<double> batch = SampleLayers(z0, z1);
      for (int64_t z = z0; z < z1; ++z) {
        const double* lower =
            z == z0 ? prev.data() : batch.data() + (z - 1 - z0) * nx * ny;
        const double* upper = batch.data() + (z - z0) * nx * ny;
        MarchLayer(z - 1, lower, upper);
      }
      prev.assign(batch.end() - nx * ny, batch.end());
    }
    return std::move(mesh_);
  }

 private:
  Vec3 Point(int64_t i, int64_t j, int64_t k) const {
    return origin_ + h_ * Vec3(static_cast<double>(i), static_cast<double>(j),
                               static_cast<double>(k));
  }

  std::vector<double> SampleLayers(int64_t z0, int64_t z1) const {
    const int64_t nx = cells_[0] + 1, ny = cells_[1] + 1;
    std::vector<Vec3> points;
    points.reserve((z1 - z0) * nx * ny);
    for (int64_t k = z0; k < z1; ++k) {
      for (int64_t j = 0; j < ny; ++j) {
        for (int64_t i = 0; i < nx; ++i) points.push_back(Point(i, j, k));
      }
    }
    return SignedDistanceBatch(scene_, node_, points);
  }

  uint32_t EdgeVertex(int64_t i, int64_t j, int64_t k, int edge,
                      const std::array<double, 8>& values) {
    const int a = internal::kCubeEdges[edge][0];
    const int b = internal::kCubeEdges[edge][1];
    const int64_t bi = i + (a & 1), bj = j + ((a >> 1) & 1), bk = k + (a >> 2);
    const int64_t nx = cells_[0] + 1, ny = cells_[1] + 1;
    const uint64_t key =
        static_cast<uint64_t>((bk * ny + bj) * nx + bi) * 3 + edge / 4;
    auto [it, inserted] = vertex_of_edge_.try_emplace(key, 0);
    if (inserted) {
      const double da = values[a], db = values[b];
      const double t = std::clamp(da / (da - db), kCornerMargin, 1.0 - kCornerMargin);
      const Vec3 pa = Point(bi, bj, bk);
      const Vec3 pb = Point(i + (b & 1), j + ((b >> 1) & 1), k + (b >> 2));
      it->second = static_cast<uint32_t>(mesh_.vertices.size());
      mesh_.vertices.push_back(pa + t * (pb - pa));
    }
    return it->second;
  }

  void MarchLayer(int64_t k, const double* lower, const double* upper) {
    const auto& cases = internal::CubeCases();
    const int64_t nx = cells_[0] + 1;
    std::array<double, 8> values;
    std::vector<uint32_t> loop;
    for (int64_t j = 0; j < cells_[1]; ++j) {
      for (int64_t i = 0; i < cells_[0]; ++i) {
        int mask = 0;
        for (int c = 0; c < 8; ++c) {
          const double* layer = (c >> 2) ? upper : lower;
          values[c] = layer[(j + ((c >> 1) & 1)) * nx + i + (c & 1)];
          if (values[c] < 0.0) mask |= 1 << c;
        }
        if (mask == 0 || mask == 255) continue;
        for (const auto& edges : cases[mask].loops) {
          loop.clear();
          for (uint8_t e : edges) loop.push_back(EdgeVertex(i, j, k, e, values));
          EmitLoop(loop);
        }
      }
    }
  }

  void EmitLoop(const std::vector<uint32_t>& loop) {
    auto& tris = mesh_.triangles;
    if (loop.size() <= 4) {
      for (size_t n = 1; n + 1 < loop.size(); ++n) {
        tris.push_back({loop[0], loop[n], loop[n + 1]});
      }
      return;
    }
    // Longer loops are fanned around their centroid so that no diagonal can
    // coincide with a diagonal chosen by the neighbouring cube.
    Vec3 centroid = Vec3::Zero();
    for (uint32_t v : loop) centroid += mesh_.vertices[v];
    centroid /= static_cast<double>(loop.size());
    const auto c = static_cast<uint32_t>(mesh_.vertices.size());
    mesh_.vertices.push_back(centroid);
    for (size_t n = 0; n < loop.size(); ++n) {
      tris.push_back({c, loop[n], loop[(n + 1) % loop.size()]});
    }
  }

  const Scene& scene_;
  const CsgNode& node_;
  double h_ = 0.0;
  std::array<int64_t, 3> cells_{};
  Vec3 origin_ = Vec3::Zero();
  TriangleMesh mesh_;
  std::unordered_map<uint64_t, uint32_t> vertex_of_edge_;
};

}  // namespace

TriangleMesh Polygonize(const Scene& scene, const CsgNode& node,
                        const GridSpec& spec) {
  const Aabb box = NodeAabb(scene, node);
  if (box.IsEmpty() || !(box.Size().maxCoeff() > 0.0)) return {};
  return Extractor(scene, node, box, spec).Run();
}

TriangleMesh Polygonize(const Scene& scene, const GridSpec& spec) {
  return Polygonize(scene, scene.root(), spec);
}

double MeshVolume(const TriangleMesh& mesh) {
  double six_v = 0.0;
  for (const auto& t : mesh.triangles) {
    const Vec3& a = mesh.vertices[t[0]];
    const Vec3& b = mesh.vertices[t[1]];
    const Vec3& c = mesh.vertices[t[2]];
    six_v += a.dot(b.cross(c));
  }
  return six_v / 6.0;
}

double MonteCarloVolume(const Scene& scene, const CsgNode& node, int64_t samples,
                        uint64_t seed) {
  if (samples < 1) throw Error(ErrorCode::kValue, "samples must be >= 1");
  const Aabb box = NodeAabb(scene, node);
  const double box_volume = box.Volume();
  if (!(box_volume > 0.0)) return 0.0;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Vec3 size = box.Size();
  int64_t inside = 0;
  for (int64_t n = 0; n < samples; ++n) {
    const double u = unit(rng), v = unit(rng), w = unit(rng);
    const Vec3 p = box.min + Vec3(u, v, w).cwiseProduct(size);
    if (Contains(scene, node, p)) ++inside;
  }
  return box_volume * static_cast<double>(inside) / static_cast<double>(samples);
}

int64_t CountBadEdges(const TriangleMesh& mesh) {
  // Each undirected edge must be used once in each direction.
  std::map<std::pair<uint32_t, uint32_t>, std::pair<int, int>> uses;
  for (const auto& t : mesh.triangles) {
    for (int n = 0; n < 3; ++n) {
      const uint32_t a = t[n], b = t[(n + 1) % 3];
      auto& u = uses[{std::min(a, b), std::max(a, b)}];
      (a < b ? u.first : u.second)++;
    }
  }
  int64_t bad = 0;
  for (const auto& [edge, u] : uses) {
    if (u.first != 1 || u.second != 1) ++bad;
  }
  return bad;
}

int64_t EulerCharacteristic(const TriangleMesh& mesh) {
  std::map<std::pair<uint32_t, uint32_t>, int> edges;
  std::vector<bool> used(mesh.vertices.size(), false);
  for (const auto& t : mesh.triangles) {
    for (int n = 0; n < 3; ++n) {
      used[t[n]] = true;
      const uint32_t a = t[n], b = t[(n + 1) % 3];
      edges[{std::min(a, b), std::max(a, b)}]++;
    }
  }
  const auto v = std::count(used.begin(), used.end(), true);
  return static_cast<int64_t>(v) - static_cast<int64_t>(edges.size()) +
         static_cast<int64_t>(mesh.triangles.size());
}

void ComputeVertexNormals(TriangleMesh& mesh) {
  mesh.normals.assign(mesh.vertices.size(), Vec3::Zero());
  for (const auto& t : mesh.triangles) {
    const Vec3 n = (mesh.vertices[t[1]] - mesh.vertices[t[0]])
                       .cross(mesh.vertices[t[2]] - mesh.vertices[t[0]]);
    for (uint32_t v : t) mesh.normals[v] += n;
  }
  for (auto& n : mesh.normals) {
    const double len = n.norm();
    n = len > 0.0 ? Vec3(n / len) : Vec3(0.0, 0.0, 1.0);
  }
}

}  // namespace midair
