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

#include "service/wire.h"

#include <algorithm>

#include "midair/scene_io.h"
#include "midair/sdf.h"

namespace midair::service {

using nlohmann::json;

namespace {

json Vec(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }

json IdList(const std::set<std::string>& ids) {
  json out = json::array();
  for (const auto& id : ids) out.push_back(id);
  return out;
}

std::string_view PartName(HandlePart part) {
  switch (part) {
    case HandlePart::kAxisX: return "x";
    case HandlePart::kAxisY: return "y";
    case HandlePart::kAxisZ: return "z";
    case HandlePart::kCenterSphere: return "center";
  }
  return "center";
}

void AddTreeNodes(const Scene& scene, const CsgNode& node, const json& parent,
                  const std::set<std::string>& highlighted, json& out) {
  bool lit = false;
  std::string kind;
  if (node.is_leaf()) {
    lit = highlighted.contains(node.id());
    kind = ShapeName(scene.primitive(node.id()).shape);
  } else {
    const auto leaves = LeavesUnder(node);
    lit = std::all_of(leaves.begin(), leaves.end(),
                      [&](const auto& id) { return highlighted.contains(id); });
    kind = ToString(node.op());
  }
  out.push_back({{"id", node.id()},
                 {"kind", kind},
                 {"leaf", node.is_leaf()},
                 {"parent", parent},
                 {"highlighted", lit}});
  for (const auto& child : node.children()) {
    AddTreeNodes(scene, child, node.id(), highlighted, out);
  }
}

}  // namespace

json StateMessage(const SessionState& state, uint64_t seq,
                  const std::optional<json>& ack) {
  json display = json::object();
  for (const auto& [id, d] : DisplayStates(state)) display[id] = ToString(d);

  json groups = json::array();
  for (const auto& g : state.groups) groups.push_back(IdList(g));

  json layout = nullptr;
  if (const auto l = ComputeHandleLayout(state)) {
    layout = {{"origin", Vec(l->origin)},
              {"axis_length", l->axis_length},
              {"box_half", l->box_half},
              {"sphere_radius", l->sphere_radius},
              {"box_centers",
               json::array({Vec(l->box_centers[0]), Vec(l->box_centers[1]),
                            Vec(l->box_centers[2])})}};
  }

  const InfoBoard board = InformationBoard(state);
  json commands = json::array();
  for (const auto& [utterance, explanation] : board.commands) {
    commands.push_back({{"utterance", utterance}, {"explanation", explanation}});
  }

  json nodes = json::array();
  AddTreeNodes(state.scene, state.scene.root(), nullptr, state.highlighted, nodes);

  json body = {
      {"mode", ModeText(state.mode)},
      {"transform", state.mode.kind == ModeKind::kManipulation
                        ? json(ToString(state.mode.transform))
                        : json(nullptr)},
      {"display_states", std::move(display)},
      {"highlighted", IdList(state.highlighted)},
      {"selected", IdList(state.selected)},
      {"groups", std::move(groups)},
      {"hand", Vec(state.hand_pos)},
      {"grab", state.active_grab
                   ? json{{"target", PartName(state.active_grab->target)}}
                   : json(nullptr)},
      {"handle_layout", std::move(layout)},
      {"info_board",
       {{"mode_text", board.mode_text},
        {"active_transform",
         board.active_transform ? json(*board.active_transform) : json(nullptr)},
        {"commands", std::move(commands)}}},
      {"tree",
       {{"visible", state.tree_visible},
        {"grabbed", state.grabbed_tree_node ? json(*state.grabbed_tree_node)
                                            : json(nullptr)},
        {"nodes", std::move(nodes)}}},
      {"scene", json::parse(SerializeScene(state.scene))},
  };
  json msg = {{"state", std::move(body)}, {"seq", seq}};
  if (ack) msg["ack"] = *ack;
  return msg;
}

json EffectsMessage(const std::vector<Effect>& effects, uint64_t seq) {
  json list = json::array();
  for (const auto& e : effects) {
    json item = {{"kind", ToString(e.kind)}};
    if (e.kind == EffectKind::kWarning || e.kind == EffectKind::kIgnored) {
      item["reason"] = ToString(e.reason);
    } else if (!e.detail.empty()) {
      item["detail"] = e.detail;
    }
    list.push_back(std::move(item));
  }
  return {{"effects", std::move(list)}, {"seq", seq}};
}

json MeshMessage(const TriangleMesh& mesh, uint64_t seq, int resolution,
                 const std::optional<std::string>& primitive) {
  std::vector<double> vertices;
  vertices.reserve(3 * mesh.vertices.size());
  for (const Vec3& v : mesh.vertices) {
    vertices.insert(vertices.end(), {v.x(), v.y(), v.z()});
  }
  std::vector<uint32_t> triangles;
  triangles.reserve(3 * mesh.triangles.size());
  for (const auto& t : mesh.triangles) triangles.insert(triangles.end(), t.begin(), t.end());
  json body = {{"vertices", std::move(vertices)},
               {"triangles", std::move(triangles)},
               {"volume", MeshVolume(mesh)},
               {"resolution", resolution}};
  if (primitive) body["primitive"] = *primitive;
  return {{"mesh", std::move(body)}, {"seq", seq}};
}

json ErrorMessage(std::string_view code, std::string_view message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

std::string Frame(const json& message) {
  return message.dump(-1, ' ', false, json::error_handler_t::replace);
}

}  // namespace midair::service
