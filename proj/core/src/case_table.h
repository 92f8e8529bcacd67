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
#include <vector>

namespace midair::internal {

// Cube corner c sits at offset (c & 1, (c >> 1) & 1, (c >> 2) & 1).
// Edges 0-3 run along x, 4-7 along y, 8-11 along z.
inline constexpr std::array<std::array<uint8_t, 2>, 12> kCubeEdges = {{
    {0, 1}, {2, 3}, {4, 5}, {6, 7},
    {0, 2}, {1, 3}, {4, 6}, {5, 7},
    {0, 4}, {1, 5}, {2, 6}, {3, 7},
}};

/// Surface patches for one of the 256 inside/outside corner configurations.
/// Each loop is a closed polygon of cube-edge ids, wound counter-clockwise
/// when seen from the outside (positive distance) side.
struct CubeCase {
  std::vector<std::vector<uint8_t>> loops;
};

/// Generated once from the face rule: on a face whose inside corners are
/// diagonal to each other, each inside corner is cut off separately. Every
/// face decision depends only on that face's corners, so neighbouring cubes
/// always agree and the extracted surface is closed.
const std::array<CubeCase, 256>& CubeCases();

}  // namespace midair::internal
