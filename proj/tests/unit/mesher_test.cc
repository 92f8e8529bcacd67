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

#include <cmath>
#include <cstring>
#include <map>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "case_table.h"
#include "midair/errors.h"
#include "test_support.h"

using namespace midair;
using namespace midair::testing;

namespace {

constexpr double kSphereVolume = 4.0 * M_PI / 3.0;

TriangleMesh UnitCube() {
  TriangleMesh m;
  for (int c = 0; c < 8; ++c) m.vertices.emplace_back(c & 1, (c >> 1) & 1, c >> 2);
  // Two counter-clockwise triangles per face, seen from outside.
  const uint32_t quads[6][4] = {{0, 2, 3, 1}, {4, 5, 7, 6}, {0, 1, 5, 4},
                                {2, 6, 7, 3}, {0, 4, 6, 2}, {1, 3, 7, 5}};
  for (const auto& q : quads) {
    m.triangles.push_back({q[0], q[1], q[2]});
    m.triangles.push_back({q[0], q[2], q[3]});
  }
  return m;
}

double RelErr(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(GridSpec, Bounds) {
  EXPECT_NO_THROW(GridSpec(8));
  EXPECT_NO_THROW(GridSpec(1024));
  for (int r : {4, 7, 1025}) {
    try {
      GridSpec spec(r);
      FAIL() << r;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kResolutionOutOfRange);
    }
  }
  EXPECT_THROW(GridSpec(64, 0), Error);
}

TEST(MeshVolume, HandBuiltCube) {
  const TriangleMesh cube = UnitCube();
  EXPECT_NEAR(MeshVolume(cube), 1.0, 1e-9);
  EXPECT_EQ(CountBadEdges(cube), 0);
  EXPECT_EQ(EulerCharacteristic(cube), 2);
  EXPECT_EQ(MeshVolume(TriangleMesh{}), 0.0);
}

TEST(MeshVolume, InvertedWindingIsNegative) {
  TriangleMesh cube = UnitCube();
  for (auto& t : cube.triangles) std::swap(t[1], t[2]);
  EXPECT_NEAR(MeshVolume(cube), -1.0, 1e-9);
}

TEST(CountBadEdges, DetectsOpenAndInconsistentMeshes) {
  TriangleMesh open = UnitCube();
  open.triangles.pop_back();
  EXPECT_GT(CountBadEdges(open), 0);
  TriangleMesh flipped = UnitCube();
  std::swap(flipped.triangles[0][1], flipped.triangles[0][2]);
  EXPECT_GT(CountBadEdges(flipped), 0);
}

TEST(Polygonize, EmptySolid) {
  const Scene s = LoadFixture("empty_intersection");
  EXPECT_TRUE(Polygonize(s).empty());
  EXPECT_EQ(MonteCarloVolume(s, s.root(), 1000, 1), 0.0);
}

TEST(Polygonize, UnitSphere) {
  const TriangleMesh m = Polygonize(LoadFixture("unit_sphere"), GridSpec(64));
  ASSERT_FALSE(m.empty());
  EXPECT_EQ(CountBadEdges(m), 0);
  EXPECT_EQ(EulerCharacteristic(m), 2);
  EXPECT_LT(RelErr(MeshVolume(m), kSphereVolume), 0.02);
}

TEST(Polygonize, Box2x1x1) {
  const TriangleMesh m = Polygonize(LoadFixture("box_2x1x1"), GridSpec(64));
  EXPECT_EQ(CountBadEdges(m), 0);
  EXPECT_EQ(EulerCharacteristic(m), 2);
  EXPECT_LT(RelErr(MeshVolume(m), 2.0), 0.02);
}

TEST(Polygonize, MeshInvariants) {
  for (const auto& name : StudyObjects()) {
    const Scene s = LoadFixture(name);
    const GridSpec spec(48);
    const TriangleMesh m = Polygonize(s, spec);
    EXPECT_EQ(CountBadEdges(m), 0) << name;
    EXPECT_GT(MeshVolume(m), 0.0) << name;
    Aabb box = NodeAabb(s, s.root());
    const double h = box.Size().maxCoeff() / spec.resolution();
    box.min -= Vec3::Constant((spec.padding() + 1) * h);
    box.max += Vec3::Constant((spec.padding() + 1) * h);
    for (const Vec3& v : m.vertices) {
      ASSERT_TRUE(v.allFinite());
      ASSERT_TRUE(box.Contains(v)) << name;
    }
    for (const auto& t : m.triangles) {
      for (uint32_t i : t) ASSERT_LT(i, m.vertices.size());
      const double area =
          (m.vertices[t[1]] - m.vertices[t[0]]).cross(m.vertices[t[2]] - m.vertices[t[0]]).norm();
      ASSERT_GT(area, 1e-12) << name;
    }
  }
}

TEST(Polygonize, Deterministic) {
  const Scene s = LoadFixture("object3");
  const TriangleMesh a = Polygonize(s, GridSpec(40));
  const TriangleMesh b = Polygonize(s, GridSpec(40));
  EXPECT_EQ(a.vertices, b.vertices);
  EXPECT_EQ(a.triangles, b.triangles);
  EXPECT_EQ(ExportMesh(a, MeshFormat::kStlBinary), ExportMesh(b, MeshFormat::kStlBinary));
}

TEST(Polygonize, SinglePrimitiveShell) {
  const Scene s = LoadFixture("object1");
  const TriangleMesh m = Polygonize(s, CsgNode::Leaf("ball"), GridSpec(48));
  EXPECT_EQ(CountBadEdges(m), 0);
  EXPECT_LT(RelErr(MeshVolume(m), kSphereVolume * 0.216), 0.02);
}

TEST(Polygonize, TranslationInvariance) {
  const Scene s = LoadFixture("object1");
  const double h = NodeAabb(s, s.root()).Size().maxCoeff() / 128;
  std::set<std::string> ids;
  for (const auto& [id, p] : s.primitives()) ids.insert(id);
  const Scene moved = ApplyPoseDelta(s, ids, Translate{Vec3(0.5 * h, 0.5 * h, 0.5 * h)});
  const double v0 = MeshVolume(Polygonize(s, GridSpec(128)));
  const double v1 = MeshVolume(Polygonize(moved, GridSpec(128)));
  EXPECT_LT(RelErr(v1, v0), 0.01);
}

TEST(MonteCarloVolume, UnitSphere) {
  const Scene s = LoadFixture("unit_sphere");
  EXPECT_LT(RelErr(MonteCarloVolume(s, s.root(), 1000000, 42), kSphereVolume), 0.01);
  EXPECT_EQ(MonteCarloVolume(s, s.root(), 1000, 5), MonteCarloVolume(s, s.root(), 1000, 5));
  EXPECT_THROW(MonteCarloVolume(s, s.root(), 0, 5), Error);
}

TEST(MonteCarloVolume, AgreesWithMeshOnObject1) {
  const Scene s = LoadFixture("object1");
  const double mc = MonteCarloVolume(s, s.root(), 200000, 99);
  const double mesh = MeshVolume(Polygonize(s, GridSpec(96)));
  EXPECT_LT(RelErr(mesh, mc), 0.03);
}

// Every directed polygon edge produced by the case table over an arbitrary
// sign field must be matched by exactly one reversed edge. Vertices are
// identified symbolically by the grid edge they sit on.
TEST(CaseTable, RandomSignFieldsGiveClosedOrientedSurfaces) {
  const auto& cases = internal::CubeCases();
  constexpr int n = 7;
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    // Outer layer stays outside so the surface cannot leave the grid.
    std::vector<bool> inside(n * n * n, false);
    const auto at = [&](int i, int j, int k) { return (k * n + j) * n + i; };
    for (int k = 1; k < n - 1; ++k) {
      for (int j = 1; j < n - 1; ++j) {
        for (int i = 1; i < n - 1; ++i) inside[at(i, j, k)] = rng() & 1;
      }
    }
    std::map<std::pair<int, int>, int> directed;
    for (int k = 0; k + 1 < n; ++k) {
      for (int j = 0; j + 1 < n; ++j) {
        for (int i = 0; i + 1 < n; ++i) {
          int mask = 0;
          for (int c = 0; c < 8; ++c) {
            if (inside[at(i + (c & 1), j + ((c >> 1) & 1), k + (c >> 2))]) mask |= 1 << c;
          }
          for (const auto& loop : cases[mask].loops) {
            std::vector<int> ids;
            for (uint8_t e : loop) {
              const int a = internal::kCubeEdges[e][0];
              ids.push_back(at(i + (a & 1), j + ((a >> 1) & 1), k + (a >> 2)) * 3 + e / 4);
            }
            for (size_t m = 0; m < ids.size(); ++m) {
              directed[{ids[m], ids[(m + 1) % ids.size()]}]++;
            }
          }
        }
      }
    }
    for (const auto& [edge, count] : directed) {
      ASSERT_EQ(count, 1) << "trial " << trial;
      const auto reverse = directed.find({edge.second, edge.first});
      ASSERT_NE(reverse, directed.end()) << "trial " << trial;
      ASSERT_EQ(reverse->second, 1);
    }
  }
}

TEST(CaseTable, SingleCornerFacesOutward) {
  // Corner 0 inside: the patch normal must point away from corner 0.
  const auto& loops = internal::CubeCases()[1].loops;
  ASSERT_EQ(loops.size(), 1u);
  ASSERT_EQ(loops[0].size(), 3u);
  std::vector<Vec3> pts;
  for (uint8_t e : loops[0]) {
    const int a = internal::kCubeEdges[e][0], b = internal::kCubeEdges[e][1];
    const Vec3 pa(a & 1, (a >> 1) & 1, a >> 2), pb(b & 1, (b >> 1) & 1, b >> 2);
    pts.push_back(0.5 * (pa + pb));
  }
  const Vec3 normal = (pts[1] - pts[0]).cross(pts[2] - pts[0]);
  EXPECT_GT(normal.dot(Vec3::Ones()), 0.0);
}

TEST(ExportMesh, SingleTriangleObj) {
  TriangleMesh m;
  m.vertices = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0.123456789012)};
  m.triangles = {{0, 1, 2}};
  const std::string obj = ExportMesh(m, MeshFormat::kObj);
  std::istringstream in(obj);
  std::string line;
  int v = 0, f = 0;
  while (std::getline(in, line)) {
    if (line.rfind("v ", 0) == 0) ++v;
    if (line.rfind("f ", 0) == 0) {
      ++f;
      EXPECT_EQ(line, "f 1 2 3");
    }
  }
  EXPECT_EQ(v, 3);
  EXPECT_EQ(f, 1);
  EXPECT_NE(obj.find("v 0 1 0.123456789\n"), std::string::npos);
}

TEST(ExportMesh, SingleTriangleStl) {
  TriangleMesh m;
  m.vertices = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0)};
  m.triangles = {{0, 1, 2}};
  const std::string stl = ExportMesh(m, MeshFormat::kStlBinary);
  ASSERT_EQ(stl.size(), 80u + 4u + 50u);
  const auto* bytes = reinterpret_cast<const unsigned char*>(stl.data());
  EXPECT_EQ(bytes[80] | bytes[81] << 8 | bytes[82] << 16 | bytes[83] << 24, 1);
  float normal_z;
  std::memcpy(&normal_z, stl.data() + 84 + 8, 4);
  EXPECT_FLOAT_EQ(normal_z, 1.0f);
  float v1x;
  std::memcpy(&v1x, stl.data() + 84 + 24, 4);
  EXPECT_FLOAT_EQ(v1x, 1.0f);
}

TEST(ComputeVertexNormals, SphereNormalsPointOutward) {
  TriangleMesh m = Polygonize(LoadFixture("unit_sphere"), GridSpec(32));
  ComputeVertexNormals(m);
  ASSERT_EQ(m.normals.size(), m.vertices.size());
  for (size_t i = 0; i < m.vertices.size(); ++i) {
    EXPECT_GT(m.normals[i].dot(m.vertices[i].normalized()), 0.9);
  }
}
