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

#include "midair/geometry.h"

#include <cmath>

#include "midair/errors.h"

namespace midair {

bool IsFinite(const Vec3& v) { return v.allFinite(); }

Rotation::Rotation(double w, double x, double y, double z)
    : Rotation(Eigen::Quaterniond(w, x, y, z)) {}

Rotation::Rotation(const Eigen::Quaterniond& q) : q_(q) {
  const double n = q_.norm();
  if (!std::isfinite(n) || n == 0.0) {
    throw Error(ErrorCode::kValue, "rotation quaternion must be finite and non-zero");
  }
  q_.coeffs() /= n;
}

Rotation Rotation::AxisAngle(const Vec3& axis, double radians) {
  const double n = axis.norm();
  if (!std::isfinite(n) || n < 1e-12) {
    throw Error(ErrorCode::kDegenerateAxis, "rotation axis must be non-zero");
  }
  return Rotation(Eigen::Quaterniond(Eigen::AngleAxisd(radians, axis / n)));
}

Rotation Rotation::Canonical() const {
  const double c[4] = {q_.w(), q_.x(), q_.y(), q_.z()};
  for (double v : c) {
    if (v > 0.0) return *this;
    if (v < 0.0) {
      Rotation r;
      r.q_.coeffs() = -q_.coeffs();
      return r;
    }
  }
  return *this;
}

double Rotation::TwistAngle(const Vec3& axis) const {
  double w = q_.w();
  double proj = q_.vec().dot(axis);
  if (w < 0.0) {
    w = -w;
    proj = -proj;
  }
  if (w == 0.0 && proj == 0.0) return 0.0;
  return 2.0 * std::atan2(proj, w);
}

Aabb Aabb::Union(const Aabb& a, const Aabb& b) {
  if (a.IsEmpty()) return b;
  if (b.IsEmpty()) return a;
  return Aabb{a.min.cwiseMin(b.min), a.max.cwiseMax(b.max)};
}

Aabb Aabb::Intersection(const Aabb& a, const Aabb& b) {
  return Aabb{a.min.cwiseMax(b.min), a.max.cwiseMin(b.max)};
}

}  // namespace midair
