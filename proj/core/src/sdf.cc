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

#include "midair/sdf.h"

#include <algorithm>
#include <cmath>
#include <thread>

namespace midair {

namespace {

double SphereDistance(const Sphere& s, const Vec3& p) { return p.norm() - s.radius; }

double BoxDistance(const Box& b, const Vec3& p) {
  const Vec3 q = p.cwiseAbs() - b.half_extents;
  return q.cwiseMax(0.0).norm() + std::min(q.maxCoeff(), 0.0);
}

double CylinderDistance(const Cylinder& c, const Vec3& p) {
  const double radial = std::hypot(p.x(), p.z()) - c.radius;
  const double axial = std::abs(p.y()) - 0.5 * c.height;
  const double outside = std::hypot(std::max(radial, 0.0), std::max(axial, 0.0));
  return outside + std::min(std::max(radial, axial), 0.0);
}

}  // namespace

double SignedDistance(const Primitive& primitive, const Vec3& p) {
  const Pose& pose = primitive.pose;
  const Vec3 local = pose.ToLocal(p);
  double d = 0.0;
  if (const auto* s = std::get_if<Sphere>(&primitive.shape)) {
    d = SphereDistance(*s, local);
  } else if (const auto* b = std::get_if<Box>(&primitive.shape)) {
    d = BoxDistance(*b, local);
  } else {
    d = CylinderDistance(std::get<Cylinder>(primitive.shape), local);
  }
  return d * pose.scale.minCoeff();
}

double SignedDistance(const Scene& scene, const CsgNode& node, const Vec3& p) {
  if (node.is_leaf()) return SignedDistance(scene.primitive(node.id()), p);
  const auto& children = node.children();
  switch (node.op()) {
    case OpKind::kUnion: {
      double d = SignedDistance(scene, children[0], p);
      for (size_t i = 1; i < children.size(); ++i) {
        d = std::min(d, SignedDistance(scene, children[i], p));
      }
      return d;
    }
    case OpKind::kIntersection: {
      double d = SignedDistance(scene, children[0], p);
      for (size_t i = 1; i < children.size(); ++i) {
        d = std::max(d, SignedDistance(scene, children[i], p));
      }
      return d;
    }
    case OpKind::kDifference:
      return std::max(SignedDistance(scene, children[0], p),
                      -SignedDistance(scene, children[1], p));
  }
  return 0.0;
}

double SignedDistance(const Scene& scene, const Vec3& p) {
  return SignedDistance(scene, scene.root(), p);
}

std::vector<double> SignedDistanceBatch(const Scene& scene, const CsgNode& node,
                                        std::span<const Vec3> points) {
  std::vector<double> out(points.size());
  const size_t workers = std::clamp<size_t>(std::thread::hardware_concurrency(), 1, 16);
  if (points.size() < 4096 || workers == 1) {
    for (size_t i = 0; i < points.size(); ++i) {
      out[i] = SignedDistance(scene, node, points[i]);
    }
    return out;
  }
  const size_t chunk = (points.size() + workers - 1) / workers;
  {
    std::vector<std::jthread> pool;
    for (size_t begin = 0; begin < points.size(); begin += chunk) {
      const size_t end = std::min(points.size(), begin + chunk);
      pool.emplace_back([&, begin, end] {
        for (size_t i = begin; i < end; ++i) {
          out[i] = SignedDistance(scene, node, points[i]);
        }
      });
    }
  }
  return out;
}

bool PrimitiveContains(const Primitive& primitive, const Vec3& p) {
  // Full affine inverse rather than the quaternion path SignedDistance uses.
  Eigen::Affine3d to_world = Eigen::Affine3d::Identity();
  to_world.linear() = primitive.pose.Linear();
  to_world.translation() = primitive.pose.translation;
  const Vec3 local = to_world.inverse(Eigen::Affine) * p;
  if (const auto* s = std::get_if<Sphere>(&primitive.shape)) {
    return local.squaredNorm() < s->radius * s->radius;
  }
  if (const auto* b = std::get_if<Box>(&primitive.shape)) {
    return (local.cwiseAbs().array() < b->half_extents.array()).all();
  }
  const auto& c = std::get<Cylinder>(primitive.shape);
  return local.x() * local.x() + local.z() * local.z() < c.radius * c.radius &&
         std::abs(local.y()) < 0.5 * c.height;
}

bool Contains(const Scene& scene, const CsgNode& node, const Vec3& p) {
  if (node.is_leaf()) return PrimitiveContains(scene.primitive(node.id()), p);
  const auto& children = node.children();
  switch (node.op()) {
    case OpKind::kUnion:
      return std::any_of(children.begin(), children.end(),
                         [&](const CsgNode& c) { return Contains(scene, c, p); });
    case OpKind::kIntersection:
      return std::all_of(children.begin(), children.end(),
                         [&](const CsgNode& c) { return Contains(scene, c, p); });
    case OpKind::kDifference:
      return Contains(scene, children[0], p) && !Contains(scene, children[1], p);
  }
  return false;
}

bool Contains(const Scene& scene, const Vec3& p) {
  return Contains(scene, scene.root(), p);
}

Aabb PrimitiveAabb(const Primitive& primitive) {
  const Eigen::Matrix3d m = primitive.pose.Linear();
  Vec3 half;
  if (const auto* s = std::get_if<Sphere>(&primitive.shape)) {
    // Image of a ball under M: half extent along row j is r * |M_j|.
    half = s->radius * m.rowwise().norm();
  } else if (const auto* b = std::get_if<Box>(&primitive.shape)) {
    half = m.cwiseAbs() * b->half_extents;
  } else {
    const auto& c = std::get<Cylinder>(primitive.shape);
    for (int j = 0; j < 3; ++j) {
      half[j] = 0.5 * c.height * std::abs(m(j, 1)) +
                c.radius * std::hypot(m(j, 0), m(j, 2));
    }
  }
  return Aabb{primitive.pose.translation - half, primitive.pose.translation + half};
}

Aabb NodeAabb(const Scene& scene, const CsgNode& node) {
  if (node.is_leaf()) return PrimitiveAabb(scene.primitive(node.id()));
  const auto& children = node.children();
  switch (node.op()) {
    case OpKind::kUnion: {
      Aabb box;
      for (const auto& c : children) box = Aabb::Union(box, NodeAabb(scene, c));
      return box;
    }
    case OpKind::kIntersection: {
      Aabb box = NodeAabb(scene, children[0]);
      for (size_t i = 1; i < children.size(); ++i) {
        box = Aabb::Intersection(box, NodeAabb(scene, children[i]));
      }
      return box;
    }
    case OpKind::kDifference:
      return NodeAabb(scene, children[0]);
  }
  return Aabb{};
}

}  // namespace midair
