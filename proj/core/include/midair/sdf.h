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

#include <span>
#include <vector>

#include "midair/scene.h"

namespace midair {

/// Signed distance bound of `node`: negative inside, positive outside. The
/// sign is exact and the magnitude never exceeds the true Euclidean distance
/// (non-uniform scale contributes the min(scale) factor).
double SignedDistance(const Scene& scene, const CsgNode& node, const Vec3& p);
double SignedDistance(const Scene& scene, const Vec3& p);
double SignedDistance(const Primitive& primitive, const Vec3& p);

/// Evaluates many points; uses worker threads for large batches. Results are
/// identical to calling SignedDistance point by point.
std::vector<double> SignedDistanceBatch(const Scene& scene,
                                        const CsgNode& node,
                                        std::span<const Vec3> points);

/// Strict point membership computed with per-primitive inside tests and
/// Boolean logic. Shares no code with SignedDistance.
bool Contains(const Scene& scene, const CsgNode& node, const Vec3& p);
bool Contains(const Scene& scene, const Vec3& p);
bool PrimitiveContains(const Primitive& primitive, const Vec3& p);

/// Exact world-space bounds of a transformed primitive.
Aabb PrimitiveAabb(const Primitive& primitive);

/// Conservative bounds of the solid below `node`: union of children for
/// Union, intersection for Intersection, left child for Difference. May be
/// empty for an empty intersection.
Aabb NodeAabb(const Scene& scene, const CsgNode& node);

}  // namespace midair
