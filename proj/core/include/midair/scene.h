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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "midair/geometry.h"

namespace midair {

struct Sphere {
  double radius = 1.0;
  friend bool operator==(const Sphere&, const Sphere&) = default;
};

/// Axis-aligned in its local frame, centered at the local origin.
struct Box {
  Vec3 half_extents = Vec3::Ones();
  friend bool operator==(const Box& a, const Box& b) {
    return a.half_extents == b.half_extents;
  }
};

/// Capped cylinder with its axis along local y, centered at the local origin.
/// `height` is the full length along the axis.
struct Cylinder {
  double radius = 1.0;
  double height = 1.0;
  friend bool operator==(const Cylinder&, const Cylinder&) = default;
};

using Shape = std::variant<Sphere, Box, Cylinder>;

std::string_view ShapeName(const Shape& shape);

struct Primitive {
  std::string id;
  Shape shape;
  Pose pose;
  std::optional<std::string> label;

  friend bool operator==(const Primitive&, const Primitive&) = default;
};

enum class OpKind { kUnion, kIntersection, kDifference };

std::string_view ToString(OpKind kind);

/// A node of the construction tree. Leaves reference a primitive by id and
/// use that id as their node id; operator nodes carry their own id.
class CsgNode {
 public:
  static CsgNode Leaf(std::string primitive_id);
  static CsgNode Op(OpKind kind, std::string id, std::vector<CsgNode> children);

  bool is_leaf() const { return !op_.has_value(); }
  const std::string& id() const { return id_; }
  /// Precondition: !is_leaf().
  OpKind op() const { return *op_; }
  const std::vector<CsgNode>& children() const { return children_; }

  friend bool operator==(const CsgNode&, const CsgNode&) = default;

 private:
  std::string id_;
  std::optional<OpKind> op_;
  std::vector<CsgNode> children_;
};

/// An immutable CSG model. Construction validates every invariant: operator
/// arity, unique ids across primitives and operator nodes, each primitive
/// referenced by exactly one leaf, positive finite dimensions, scale range.
class Scene {
 public:
  /// Throws Error(kSchema) or Error(kValue) on invariant violations.
  Scene(std::string name, std::vector<Primitive> primitives, CsgNode root);

  const std::string& name() const { return name_; }
  const std::map<std::string, Primitive>& primitives() const {
    return primitives_;
  }
  const CsgNode& root() const { return root_; }

  /// Throws Error(kUnknownId).
  const Primitive& primitive(const std::string& id) const;
  bool has_primitive(const std::string& id) const {
    return primitives_.contains(id);
  }
  /// nullptr when no node with this id exists.
  const CsgNode* FindNode(const std::string& node_id) const;

  friend bool operator==(const Scene&, const Scene&) = default;

 private:
  std::string name_;
  std::map<std::string, Primitive> primitives_;
  CsgNode root_;
};

/// Ids and tree shape identical, numbers equal within `rel_tol` (relative to
/// max(1, |value|)), rotations compared up to quaternion sign.
bool Equivalent(const Scene& a, const Scene& b, double rel_tol = 1e-8);

/// Depth-first, left-to-right primitive ids below `node_id`.
/// Throws Error(kUnknownNode).
std::vector<std::string> LeavesUnder(const Scene& scene,
                                     const std::string& node_id);
std::vector<std::string> LeavesUnder(const CsgNode& node);

/// Replaces the operator of `node_id`. A node with more than two children
/// that becomes a Difference is re-bracketed as child0 - Union(rest); the
/// new union node gets a fresh id derived from `node_id`.
/// Throws Error(kUnknownNode) or Error(kLeafNotOperator).
Scene SetOperator(const Scene& scene, const std::string& node_id,
                  OpKind new_kind);

struct Translate {
  Vec3 offset;
};
struct RotateAbout {
  Vec3 axis;
  double angle = 0.0;  // radians
  Vec3 pivot = Vec3::Zero();
};
struct ScaleAxes {
  Vec3 factors = Vec3::Ones();
  Vec3 pivot = Vec3::Zero();
};
using PoseDelta = std::variant<Translate, RotateAbout, ScaleAxes>;

/// Applies one rigid or scaling delta to every listed primitive about a
/// shared pivot. World-axis scaling of a rotated primitive stretches each
/// local axis by the length of its scaled world direction; this is exact for
/// axis-aligned orientations and drops the shear term otherwise. Resulting
/// scales are clamped into [Pose::kMinScale, Pose::kMaxScale].
/// Throws Error(kUnknownId), Error(kDegenerateAxis), Error(kNonPositiveScale).
Scene ApplyPoseDelta(const Scene& scene, const std::set<std::string>& ids,
                     const PoseDelta& delta);

}  // namespace midair
