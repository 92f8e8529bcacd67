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

#include "midair/scene_io.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "midair/errors.h"

namespace midair {

using nlohmann::json;

namespace {

[[noreturn]] void Schema(const std::string& msg) {
  throw Error(ErrorCode::kSchema, msg);
}

void RequireKeys(const json& obj, std::initializer_list<std::string_view> required,
                 std::initializer_list<std::string_view> optional,
                 const std::string& where) {
  if (!obj.is_object()) Schema(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto k : required) known |= (k == key);
    for (auto k : optional) known |= (k == key);
    if (!known) Schema(where + ": unknown key '" + key + "'");
  }
  for (auto k : required) {
    if (!obj.contains(std::string(k))) {
      Schema(where + ": missing key '" + std::string(k) + "'");
    }
  }
}

double Number(const json& v, const std::string& where) {
  if (!v.is_number()) Schema(where + " must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw Error(ErrorCode::kValue, where + " must be finite");
  return d;
}

Vec3 ReadVec3(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 3) Schema(where + " must be an array of 3 numbers");
  return Vec3(Number(v[0], where), Number(v[1], where), Number(v[2], where));
}

Pose ReadPose(const json& v, const std::string& where) {
  RequireKeys(v, {}, {"translation", "rotation", "scale"}, where);
  Pose pose;
  if (v.contains("translation")) {
    pose.translation = ReadVec3(v["translation"], where + ".translation");
  }
  if (v.contains("rotation")) {
    const json& r = v["rotation"];
    if (!r.is_array() || r.size() != 4) {
      Schema(where + ".rotation must be [w, x, y, z]");
    }
    const std::string rw = where + ".rotation";
    pose.rotation = Rotation(Number(r[0], rw), Number(r[1], rw),
                             Number(r[2], rw), Number(r[3], rw));
  }
  if (v.contains("scale")) pose.scale = ReadVec3(v["scale"], where + ".scale");
  return pose;
}

Primitive ReadPrimitive(const json& v, size_t index) {
  const std::string where = "primitives[" + std::to_string(index) + "]";
  RequireKeys(v, {"id", "kind", "params"}, {"pose", "label"}, where);
  if (!v["id"].is_string()) Schema(where + ".id must be a string");
  if (!v["kind"].is_string()) Schema(where + ".kind must be a string");
  Primitive p;
  p.id = v["id"].get<std::string>();
  const std::string kind = v["kind"].get<std::string>();
  const json& params = v["params"];
  const std::string pw = where + ".params";
  if (kind == "sphere") {
    RequireKeys(params, {"radius"}, {}, pw);
    p.shape = Sphere{Number(params["radius"], pw + ".radius")};
  } else if (kind == "box") {
    RequireKeys(params, {"half_extents"}, {}, pw);
    p.shape = Box{ReadVec3(params["half_extents"], pw + ".half_extents")};
  } else if (kind == "cylinder") {
    RequireKeys(params, {"radius", "height"}, {}, pw);
    p.shape = Cylinder{Number(params["radius"], pw + ".radius"),
                       Number(params["height"], pw + ".height")};
  } else {
    Schema(where + ": unknown primitive kind '" + kind + "'");
  }
  if (v.contains("pose")) p.pose = ReadPose(v["pose"], where + ".pose");
  if (v.contains("label")) {
    if (!v["label"].is_string()) Schema(where + ".label must be a string");
    p.label = v["label"].get<std::string>();
  }
  return p;
}

CsgNode ReadNode(const json& v, const std::string& where, int depth) {
  if (depth > 512) Schema("tree deeper than 512 levels");
  if (!v.is_object()) Schema(where + " must be an object");
  if (v.contains("leaf")) {
    RequireKeys(v, {"leaf"}, {}, where);
    if (!v["leaf"].is_string()) Schema(where + ".leaf must be a string");
    return CsgNode::Leaf(v["leaf"].get<std::string>());
  }
  RequireKeys(v, {"op", "id", "children"}, {}, where);
  if (!v["op"].is_string()) Schema(where + ".op must be a string");
  if (!v["id"].is_string()) Schema(where + ".id must be a string");
  if (!v["children"].is_array()) Schema(where + ".children must be an array");
  const std::string op = v["op"].get<std::string>();
  OpKind kind;
  if (op == "union") {
    kind = OpKind::kUnion;
  } else if (op == "intersection") {
    kind = OpKind::kIntersection;
  } else if (op == "difference") {
    kind = OpKind::kDifference;
  } else {
    Schema(where + ": unknown operator '" + op + "'");
  }
  std::vector<CsgNode> children;
  const json& arr = v["children"];
  for (size_t i = 0; i < arr.size(); ++i) {
    children.push_back(
        ReadNode(arr[i], where + ".children[" + std::to_string(i) + "]", depth + 1));
  }
  return CsgNode::Op(kind, v["id"].get<std::string>(), std::move(children));
}

json WriteVec3(const Vec3& v) {
  return json::array({RoundForOutput(v.x()), RoundForOutput(v.y()),
                      RoundForOutput(v.z())});
}

json WriteNode(const CsgNode& node) {
  if (node.is_leaf()) return json{{"leaf", node.id()}};
  json children = json::array();
  for (const auto& c : node.children()) children.push_back(WriteNode(c));
  return json{{"op", std::string(ToString(node.op()))},
              {"id", node.id()},
              {"children", std::move(children)}};
}

json WritePrimitive(const Primitive& p) {
  json params;
  if (const auto* s = std::get_if<Sphere>(&p.shape)) {
    params["radius"] = RoundForOutput(s->radius);
  } else if (const auto* b = std::get_if<Box>(&p.shape)) {
    params["half_extents"] = WriteVec3(b->half_extents);
  } else {
    const auto& c = std::get<Cylinder>(p.shape);
    params["radius"] = RoundForOutput(c.radius);
    params["height"] = RoundForOutput(c.height);
  }
  const Rotation r = p.pose.rotation.Canonical();
  json out{{"id", p.id},
           {"kind", std::string(ShapeName(p.shape))},
           {"params", std::move(params)},
           {"pose",
            {{"translation", WriteVec3(p.pose.translation)},
             {"rotation", json::array({RoundForOutput(r.w()), RoundForOutput(r.x()),
                                       RoundForOutput(r.y()), RoundForOutput(r.z())})},
             {"scale", WriteVec3(p.pose.scale)}}}};
  if (p.label) out["label"] = *p.label;
  return out;
}

}  // namespace

double RoundForOutput(double value) {
  if (std::abs(value) < 1e-12) return 0.0;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return std::strtod(buf, nullptr);
}

Scene ParseScene(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kSyntax, e.what());
  } catch (const json::out_of_range& e) {
    // Number literals beyond double range.
    throw Error(ErrorCode::kValue, e.what());
  }
  RequireKeys(doc, {"name", "primitives", "root"}, {}, "scene");
  if (!doc["name"].is_string()) Schema("scene.name must be a string");
  if (!doc["primitives"].is_array()) Schema("scene.primitives must be an array");
  std::vector<Primitive> primitives;
  const json& arr = doc["primitives"];
  for (size_t i = 0; i < arr.size(); ++i) {
    primitives.push_back(ReadPrimitive(arr[i], i));
  }
  return Scene(doc["name"].get<std::string>(), std::move(primitives),
               ReadNode(doc["root"], "root", 0));
}

std::string SerializeScene(const Scene& scene) {
  json prims = json::array();
  for (const auto& [id, p] : scene.primitives()) prims.push_back(WritePrimitive(p));
  json doc{{"name", scene.name()},
           {"primitives", std::move(prims)},
           {"root", WriteNode(scene.root())}};
  return doc.dump(2) + "\n";
}

Scene LoadSceneFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kSyntax, "cannot read scene file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ParseScene(ss.str());
}

}  // namespace midair
