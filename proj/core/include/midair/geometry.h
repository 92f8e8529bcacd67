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

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <limits>

namespace midair {

using Vec3 = Eigen::Vector3d;

bool IsFinite(const Vec3& v);

/// Unit quaternion. Every constructor and composition renormalizes, so the
/// stored value never drifts more than rounding error away from norm 1.
class Rotation {
 public:
  Rotation() : q_(Eigen::Quaterniond::Identity()) {}
  /// Throws Error(kValue) for a zero or non-finite quaternion.
  Rotation(double w, double x, double y, double z);
  explicit Rotation(const Eigen::Quaterniond& q);

  static Rotation AxisAngle(const Vec3& axis, double radians);

  double w() const { return q_.w(); }
  double x() const { return q_.x(); }
  double y() const { return q_.y(); }
  double z() const { return q_.z(); }
  const Eigen::Quaterniond& quaternion() const { return q_; }

  Vec3 Apply(const Vec3& v) const { return q_ * v; }
  Vec3 ApplyInverse(const Vec3& v) const { return q_.conjugate() * v; }
  Rotation Inverse() const { return Rotation(q_.conjugate()); }
  Eigen::Matrix3d Matrix() const { return q_.toRotationMatrix(); }

  /// Same rotation with w >= 0 (first non-zero component positive when w == 0).
  Rotation Canonical() const;

  /// Signed angle of the twist of this rotation about `axis` (unit vector),
  /// in (-pi, pi].
  double TwistAngle(const Vec3& axis) const;

  friend Rotation operator*(const Rotation& a, const Rotation& b) {
    return Rotation(a.q_ * b.q_);
  }
  friend bool operator==(const Rotation& a, const Rotation& b) {
    return a.q_.coeffs() == b.q_.coeffs();
  }

 private:
  Eigen::Quaterniond q_;
};

/// Maps primitive-local coordinates to world: world = R * (S * local) + t.
struct Pose {
  Vec3 translation = Vec3::Zero();
  Rotation rotation;
  Vec3 scale = Vec3::Ones();

  static constexpr double kMinScale = 1e-6;
  static constexpr double kMaxScale = 1e6;

  Vec3 ToWorld(const Vec3& local) const {
    return rotation.Apply(scale.cwiseProduct(local)) + translation;
  }
  Vec3 ToLocal(const Vec3& world) const {
    return rotation.ApplyInverse(world - translation).cwiseQuotient(scale);
  }
  /// Linear part R * S.
  Eigen::Matrix3d Linear() const {
    return rotation.Matrix() * scale.asDiagonal();
  }

  friend bool operator==(const Pose& a, const Pose& b) {
    return a.translation == b.translation && a.rotation == b.rotation &&
           a.scale == b.scale;
  }
};

struct Aabb {
  Vec3 min = Vec3::Constant(std::numeric_limits<double>::infinity());
  Vec3 max = Vec3::Constant(-std::numeric_limits<double>::infinity());

  /// True when the box encloses nothing (inverted on some axis).
  bool IsEmpty() const { return (min.array() > max.array()).any(); }
  Vec3 Center() const { return 0.5 * (min + max); }
  Vec3 Size() const { return max - min; }
  double Diagonal() const { return IsEmpty() ? 0.0 : Size().norm(); }
  double Volume() const {
    return IsEmpty() ? 0.0 : Size().prod();
  }
  bool Contains(const Vec3& p) const {
    return (p.array() >= min.array()).all() && (p.array() <= max.array()).all();
  }

  static Aabb Union(const Aabb& a, const Aabb& b);
  static Aabb Intersection(const Aabb& a, const Aabb& b);
};

}  // namespace midair
