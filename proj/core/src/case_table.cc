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

#include "case_table.h"

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <algorithm>
#include <map>

namespace midair::internal {

namespace {

struct Face {
  std::array<uint8_t, 4> corners;  // cyclic
  Eigen::Vector3d normal;          // outward
};

const std::array<Face, 6> kFaces = {{
    {{0, 2, 6, 4}, {-1, 0, 0}},
    {{1, 3, 7, 5}, {1, 0, 0}},
    {{0, 1, 5, 4}, {0, -1, 0}},
    {{2, 3, 7, 6}, {0, 1, 0}},
    {{0, 1, 3, 2}, {0, 0, -1}},
    {{4, 5, 7, 6}, {0, 0, 1}},
}};

Eigen::Vector3d CornerPos(int c) {
  return Eigen::Vector3d(c & 1, (c >> 1) & 1, (c >> 2) & 1);
}

Eigen::Vector3d EdgeMid(int e) {
  return 0.5 * (CornerPos(kCubeEdges[e][0]) + CornerPos(kCubeEdges[e][1]));
}

int EdgeBetween(int a, int b) {
  for (int e = 0; e < 12; ++e) {
    if ((kCubeEdges[e][0] == a && kCubeEdges[e][1] == b) ||
        (kCubeEdges[e][0] == b && kCubeEdges[e][1] == a)) {
      return e;
    }
  }
  return -1;
}

CubeCase BuildCase(int mask, bool flip) {
  const auto inside = [mask](int c) { return ((mask >> c) & 1) != 0; };
  std::map<int, int> next;
  const auto add_segment = [&](const Face& f, int p, int q, int inside_corner) {
    const Eigen::Vector3d mp = EdgeMid(p);
    const Eigen::Vector3d left = f.normal.cross(EdgeMid(q) - mp);
    if ((CornerPos(inside_corner) - mp).dot(left) < 0) std::swap(p, q);
    next[p] = q;
  };

  for (const Face& f : kFaces) {
    std::vector<int> crossings;  // crossings[i] lies between corners i and i+1
    std::vector<int> at;
    for (int i = 0; i < 4; ++i) {
      const int a = f.corners[i];
      const int b = f.corners[(i + 1) % 4];
      if (inside(a) != inside(b)) {
        crossings.push_back(EdgeBetween(a, b));
        at.push_back(i);
      }
    }
    if (crossings.size() == 2) {
      int any_inside = -1;
      for (int c : f.corners) {
        if (inside(c)) any_inside = c;
      }
      add_segment(f, crossings[0], crossings[1], any_inside);
    } else if (crossings.size() == 4) {
      for (int k = 0; k < 4; ++k) {
        const int c = f.corners[k];
        if (!inside(c)) continue;
        const int before = EdgeBetween(f.corners[(k + 3) % 4], c);
        const int after = EdgeBetween(c, f.corners[(k + 1) % 4]);
        add_segment(f, before, after, c);
      }
    }
  }

  CubeCase out;
  std::map<int, bool> used;
  for (const auto& [start, unused] : next) {
    if (used[start]) continue;
    std::vector<uint8_t> loop;
    int e = start;
    do {
      used[e] = true;
      loop.push_back(static_cast<uint8_t>(e));
      e = next.at(e);
    } while (e != start);
    if (flip) std::reverse(loop.begin() + 1, loop.end());
    out.loops.push_back(std::move(loop));
  }
  return out;
}

std::array<CubeCase, 256> BuildAll() {
  // Winding convention check: with only corner 0 inside, the single
  // triangle must face away from corner 0.
  bool flip = false;
  {
    const CubeCase probe = BuildCase(1, false);
    const auto& l = probe.loops.at(0);
    const Eigen::Vector3d a = EdgeMid(l[0]), b = EdgeMid(l[1]), c = EdgeMid(l[2]);
    const Eigen::Vector3d n = (b - a).cross(c - a);
    flip = n.dot(a - CornerPos(0)) < 0;
  }
  std::array<CubeCase, 256> cases;
  for (int m = 0; m < 256; ++m) cases[m] = BuildCase(m, flip);
  return cases;
}

}  // namespace

const std::array<CubeCase, 256>& CubeCases() {
  static const std::array<CubeCase, 256> cases = BuildAll();
  return cases;
}

}  // namespace midair::internal
