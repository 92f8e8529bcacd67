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

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "midair/scene.h"

namespace midair {

struct TriangleMesh {
  std::vector<Vec3> vertices;
  /// Counter-clockwise when seen from outside the solid.
  std::vector<std::array<uint32_t, 3>> triangles;
  /// Either empty or one unit normal per vertex.
  std::vector<Vec3> normals;

  bool empty() const { return triangles.empty(); }
};

/// Grid resolution is the number of cells along the longest axis of the
/// node's bounding box; `padding` cells of empty space surround it.
class GridSpec {
 public:
  static constexpr int kMinResolution = 8;
  static constexpr int kMaxResolution = 1024;
  static constexpr int kDefaultResolution = 64;

  /// Throws Error(kResolutionOutOfRange) outside [8, 1024] or padding < 1.
  explicit GridSpec(int resolution = kDefaultResolution, int padding = 2);

  int resolution() const { return resolution_; }
  int padding() const { return padding_; }

 private:
  int resolution_;
  int padding_;
};

/// Marching cubes over a uniformly sampled signed distance grid. An empty
/// solid yields an empty mesh. Deterministic for fixed inputs.
TriangleMesh Polygonize(const Scene& scene, const GridSpec& spec = GridSpec());
TriangleMesh Polygonize(const Scene& scene, const CsgNode& node,
                        const GridSpec& spec = GridSpec());

/// Signed volume by the divergence theorem. Meaningful only for closed,
/// consistently wound meshes; negative means inverted winding.
double MeshVolume(const TriangleMesh& mesh);

/// Bounding-box volume times the fraction of uniform samples inside `node`.
/// Deterministic for a fixed seed.
double MonteCarloVolume(const Scene& scene, const CsgNode& node,
                        int64_t samples, uint64_t seed);

/// Edges not shared by exactly two triangles (boundary or non-manifold).
int64_t CountBadEdges(const TriangleMesh& mesh);
/// V - E + F.
int64_t EulerCharacteristic(const TriangleMesh& mesh);

/// Area-weighted per-vertex normals.
void ComputeVertexNormals(TriangleMesh& mesh);

enum class MeshFormat { kObj, kStlBinary };

/// OBJ: one "v" line per vertex (9 significant digits), 1-based "f" lines.
/// STL: 80-byte header, little-endian uint32 count, 50 bytes per triangle.
std::string ExportMesh(const TriangleMesh& mesh, MeshFormat format);

}  // namespace midair
