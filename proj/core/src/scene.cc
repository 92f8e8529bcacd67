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

#include "midair/scene.h"

#include <cmath>
#include <functional>

#include "midair/errors.h"

namespace midair {

std::string_view ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return "SyntaxError";
    case ErrorCode::kSchema: return "SchemaError";
    case ErrorCode::kValue: return "ValueError";
    case ErrorCode::kUnknownId: return "UnknownId";
    case ErrorCode::kDegenerateAxis: return "DegenerateAxis";
    case ErrorCode::kNonPositiveScale: return "NonPositiveScale";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kLeafNotOperator: return "LeafNotOperator";
    case ErrorCode::kResolutionOutOfRange: return "ResolutionOutOfRange";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kZeroTotal: return "ZeroTotal";
    case ErrorCode::kMalformedCsv: return "MalformedCsv";
    case ErrorCode::kScript: return "ScriptError";
  }
  return "Unknown";
}

std::string_view ShapeName(const Shape& shape) {
  struct {
    std::string_view operator()(const Sphere&) const { return "sphere"; }
    std::string_view operator()(const Box&) const { return "box"; }
    std::string_view operator()(const Cylinder&) const { return "cylinder"; }
  } visitor;
  return std::visit(visitor, shape);
}

std::string_view ToString(OpKind kind) {
  switch (kind) {
    case OpKind::kUnion: return "union";
    case OpKind::kIntersection: return "intersection";
    case OpKind::kDifference: return "difference";
  }
  return "union";
}

CsgNode CsgNode::Leaf(std::string primitive_id) {
  CsgNode node;
  node.id_ = std::move(primitive_id);
  return node;
}

CsgNode CsgNode::Op(OpKind kind, std::string id, std::vector<CsgNode> children) {
  CsgNode node;
  node.id_ = std::move(id);
  node.op_ = kind;
  node.children_ = std::move(children);
  return node;
}

namespace {

constexpr int kMaxTreeDepth = 512;

bool Positive(double v) { return std::isfinite(v) && v > 0.0; }

void ValidatePrimitive(const Primitive& p) {
  if (p.id.empty()) throw Error(ErrorCode::kSchema, "primitive id must not be empty");
  const auto bad = [&](const std::string& what) {
    throw Error(ErrorCode::kValue, "primitive '" + p.id + "': " + what);
  };
  if (const auto* s = std::get_if<Sphere>(&p.shape)) {
    if (!Positive(s->radius)) bad("radius must be positive and finite");
  } else if (const auto* b = std::get_if<Box>(&p.shape)) {
    for (int i = 0; i < 3; ++i) {
      if (!Positive(b->half_extents[i])) bad("half extents must be positive and finite");
    }
  } else if (const auto* c = std::get_if<Cylinder>(&p.shape)) {
    if (!Positive(c->radius)) bad("radius must be positive and finite");
    if (!Positive(c->height)) bad("height must be positive and finite");
  }
  if (!IsFinite(p.pose.translation)) bad("translation must be finite");
  for (int i = 0; i < 3; ++i) {
    const double s = p.pose.scale[i];
    if (!std::isfinite(s) || s < Pose::kMinScale || s > Pose::kMaxScale) {
      bad("scale components must lie in [1e-6, 1e6]");
    }
  }
}

const CsgNode* FindIn(const CsgNode& node, const std::string& id) {
  if (node.id() == id) return &node;
  for (const auto& child : node.children()) {
    if (const CsgNode* found = FindIn(child, id)) return found;
  }
  return nullptr;
}

void CollectLeaves(const CsgNode& node, std::vector<std::string>& out) {
  if (node.is_leaf()) {
    out.push_back(node.id());
    return;
  }
  for (const auto& child : node.children()) CollectLeaves(child, out);
}

void CollectIds(const CsgNode& node, std::set<std::string>& out) {
  out.insert(node.id());
  for (const auto& child : node.children()) CollectIds(child, out);
}

bool Close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

bool Close(const Vec3& a, const Vec3& b, double tol) {
  for (int i = 0; i < 3; ++i) {
    if (!Close(a[i], b[i], tol)) return false;
  }
  return true;
}

bool CloseShape(const Shape& a, const Shape& b, double tol) {
  if (a.index() != b.index()) return false;
  if (const auto* s = std::get_if<Sphere>(&a)) {
    return Close(s->radius, std::get<Sphere>(b).radius, tol);
  }
  if (const auto* bx = std::get_if<Box>(&a)) {
    return Close(bx->half_extents, std::get<Box>(b).half_extents, tol);
  }
  const auto& ca = std::get<Cylinder>(a);
  const auto& cb = std::get<Cylinder>(b);
  return Close(ca.radius, cb.radius, tol) && Close(ca.height, cb.height, tol);
}

bool CloseRotation(const Rotation& a, const Rotation& b, double tol) {
  const Eigen::Vector4d qa = a.Canonical().quaternion().coeffs();
  const Eigen::Vector4d qb = b.Canonical().quaternion().coeffs();
  // Canonical() may pick different signs when w is ~0 on one side only.
  return (qa - qb).cwiseAbs().maxCoeff() <= tol ||
         (qa + qb).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

Scene::Scene(std::string name, std::vector<Primitive> primitives, CsgNode root)
    : name_(std::move(name)), root_(std::move(root)) {
  if (primitives.empty()) {
    throw Error(ErrorCode::kSchema, "scene must contain at least one primitive");
  }
  std::set<std::string> ids;
  for (auto& p : primitives) {
    ValidatePrimitive(p);
    if (!ids.insert(p.id).second) {
      throw Error(ErrorCode::kSchema, "duplicate id '" + p.id + "'");
    }
    std::string key = p.id;
    primitives_.emplace(std::move(key), std::move(p));
  }

  std::set<std::string> referenced;
  std::function<void(const CsgNode&, int)> check = [&](const CsgNode& node,
                                                       int depth) {
    if (depth > kMaxTreeDepth) {
      throw Error(ErrorCode::kSchema, "tree deeper than 512 levels");
    }
    if (node.is_leaf()) {
      if (!primitives_.contains(node.id())) {
        throw Error(ErrorCode::kSchema,
                    "leaf references unknown primitive '" + node.id() + "'");
      }
      if (!referenced.insert(node.id()).second) {
        throw Error(ErrorCode::kSchema,
                    "primitive '" + node.id() + "' appears in more than one leaf");
      }
      return;
    }
    if (node.id().empty()) {
      throw Error(ErrorCode::kSchema, "operator node id must not be empty");
    }
    if (!ids.insert(node.id()).second) {
      throw Error(ErrorCode::kSchema, "duplicate id '" + node.id() + "'");
    }
    const size_t n = node.children().size();
    if (node.op() == OpKind::kDifference ? n != 2 : n < 2) {
      throw Error(ErrorCode::kSchema,
                  "node '" + node.id() + "': " + std::string(ToString(node.op())) +
                      (node.op() == OpKind::kDifference
                           ? " needs exactly 2 children"
                           : " needs at least 2 children"));
    }
    for (const auto& child : node.children()) check(child, depth + 1);
  };
  check(root_, 0);

  if (referenced.size() != primitives_.size()) {
    for (const auto& [id, p] : primitives_) {
      if (!referenced.contains(id)) {
        throw Error(ErrorCode::kSchema,
                    "primitive '" + id + "' is not referenced by the tree");
      }
    }
  }
}

const Primitive& Scene::primitive(const std::string& id) const {
  auto it = primitives_.find(id);
  if (it == primitives_.end()) {
    throw Error(ErrorCode::kUnknownId, "unknown primitive '" + id + "'");
  }
  return it->second;
}

const CsgNode* Scene::FindNode(const std::string& node_id) const {
  return FindIn(root_, node_id);
}

bool Equivalent(const Scene& a, const Scene& b, double rel_tol) {
  if (a.name() != b.name() || a.root() != b.root()) return false;
  if (a.primitives().size() != b.primitives().size()) return false;
  for (const auto& [id, pa] : a.primitives()) {
    auto it = b.primitives().find(id);
    if (it == b.primitives().end()) return false;
    const Primitive& pb = it->second;
    if (pa.label != pb.label || !CloseShape(pa.shape, pb.shape, rel_tol) ||
        !Close(pa.pose.translation, pb.pose.translation, rel_tol) ||
        !Close(pa.pose.scale, pb.pose.scale, rel_tol) ||
        !CloseRotation(pa.pose.rotation, pb.pose.rotation, rel_tol)) {
      return false;
    }
  }
  return true;
}

std::vector<std::string> LeavesUnder(const CsgNode& node) {
  std::vector<std::string> out;
  CollectLeaves(node, out);
  return out;
}

std::vector<std::string> LeavesUnder(const Scene& scene,
                                     const std::string& node_id) {
  const CsgNode* node = scene.FindNode(node_id);
  if (node == nullptr) {
    throw Error(ErrorCode::kUnknownNode, "unknown node '" + node_id + "'");
  }
  return LeavesUnder(*node);
}

namespace {

CsgNode Rewrite(const CsgNode& node, const std::string& target, OpKind kind,
                const std::string& rest_id) {
  if (node.is_leaf()) return node;
  if (node.id() == target) {
    if (kind == OpKind::kDifference && node.children().size() > 2) {
      std::vector<CsgNode> rest(node.children().begin() + 1,
                                node.children().end());
      return CsgNode::Op(kind, node.id(),
                         {node.children().front(),
                          CsgNode::Op(OpKind::kUnion, rest_id, std::move(rest))});
    }
    return CsgNode::Op(kind, node.id(), node.children());
  }
  std::vector<CsgNode> children;
  children.reserve(node.children().size());
  for (const auto& child : node.children()) {
    children.push_back(Rewrite(child, target, kind, rest_id));
  }
  return CsgNode::Op(node.op(), node.id(), std::move(children));
}

std::vector<Primitive> PrimitiveList(const Scene& scene) {
  std::vector<Primitive> out;
  out.reserve(scene.primitives().size());
  for (const auto& [id, p] : scene.primitives()) out.push_back(p);
  return out;
}

}  // namespace

Scene SetOperator(const Scene& scene, const std::string& node_id,
                  OpKind new_kind) {
  const CsgNode* node = scene.FindNode(node_id);
  if (node == nullptr) {
    throw Error(ErrorCode::kUnknownNode, "unknown node '" + node_id + "'");
  }
  if (node->is_leaf()) {
    throw Error(ErrorCode::kLeafNotOperator,
                "node '" + node_id + "' is a primitive, not an operator");
  }
  if (node->op() == new_kind) return scene;

  std::set<std::string> taken;
  CollectIds(scene.root(), taken);
  std::string rest_id = node_id + "_rest";
  for (int n = 2; taken.contains(rest_id); ++n) {
    rest_id = node_id + "_rest" + std::to_string(n);
  }
  return Scene(scene.name(), PrimitiveList(scene),
               Rewrite(scene.root(), node_id, new_kind, rest_id));
}

namespace {

struct DeltaApplier {
  void operator()(const Translate& t) const {
    if (!IsFinite(t.offset)) {
      throw Error(ErrorCode::kValue, "translation must be finite");
    }
    pose.translation += t.offset;
  }
  void operator()(const RotateAbout& r) const {
    if (!std::isfinite(r.angle) || !IsFinite(r.pivot)) {
      throw Error(ErrorCode::kValue, "rotation angle and pivot must be finite");
    }
    const Rotation delta = Rotation::AxisAngle(r.axis, r.angle);
    pose.translation = r.pivot + delta.Apply(pose.translation - r.pivot);
    pose.rotation = delta * pose.rotation;
  }
  void operator()(const ScaleAxes& s) const {
    const Eigen::Matrix3d rot = pose.rotation.Matrix();
    pose.translation = s.pivot + s.factors.cwiseProduct(pose.translation - s.pivot);
    for (int i = 0; i < 3; ++i) {
      const double stretch = s.factors.cwiseProduct(rot.col(i)).norm();
      pose.scale[i] = std::clamp(pose.scale[i] * stretch, Pose::kMinScale,
                                 Pose::kMaxScale);
    }
  }
  Pose& pose;
};

void CheckDelta(const PoseDelta& delta) {
  if (const auto* r = std::get_if<RotateAbout>(&delta)) {
    const double n = r->axis.norm();
    if (!std::isfinite(n) || n < 1e-12) {
      throw Error(ErrorCode::kDegenerateAxis, "rotation axis must be non-zero");
    }
  } else if (const auto* s = std::get_if<ScaleAxes>(&delta)) {
    for (int i = 0; i < 3; ++i) {
      if (!std::isfinite(s->factors[i]) || s->factors[i] <= 0.0) {
        throw Error(ErrorCode::kNonPositiveScale, "scale factors must be positive");
      }
    }
    if (!IsFinite(s->pivot)) throw Error(ErrorCode::kValue, "pivot must be finite");
  }
}

}  // namespace

Scene ApplyPoseDelta(const Scene& scene, const std::set<std::string>& ids,
                     const PoseDelta& delta) {
  for (const auto& id : ids) scene.primitive(id);  // throws kUnknownId
  CheckDelta(delta);
  std::vector<Primitive> primitives = PrimitiveList(scene);
  for (auto& p : primitives) {
    if (!ids.contains(p.id)) continue;
    std::visit(DeltaApplier{p.pose}, delta);
  }
  return Scene(scene.name(), std::move(primitives), scene.root());
}

}  // namespace midair
