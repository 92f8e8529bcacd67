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

#include "midair/script_io.h"

#include <cmath>

#include <json.hpp>

#include "midair/errors.h"
#include "midair/scene_io.h"

namespace midair {

using nlohmann::json;

namespace {

[[noreturn]] void Bad(const std::string& msg) { throw Error(ErrorCode::kScript, msg); }

Vec3 ReadVec3(const json& v, const char* what) {
  if (!v.is_array() || v.size() != 3) Bad(std::string(what) + " must be [x, y, z]");
  Vec3 out;
  for (int i = 0; i < 3; ++i) {
    if (!v[i].is_number()) Bad(std::string(what) + " must contain numbers");
    out[i] = v[i].get<double>();
    if (!std::isfinite(out[i])) Bad(std::string(what) + " must be finite");
  }
  return out;
}

Rotation ReadOrientation(const json& v) {
  if (!v.is_array() || v.size() != 4) Bad("orient must be [w, x, y, z]");
  double q[4];
  for (int i = 0; i < 4; ++i) {
    if (!v[i].is_number()) Bad("orient must contain numbers");
    q[i] = v[i].get<double>();
  }
  try {
    return Rotation(q[0], q[1], q[2], q[3]);
  } catch (const Error&) {
    Bad("orient must be a finite non-zero quaternion");
  }
}

template <typename GrabEvent>
GrabEvent ReadGrab(const json& v, const char* name) {
  if (!v.is_object()) Bad(std::string(name) + " must be an object");
  for (const auto& [key, value] : v.items()) {
    if (key != "pos" && key != "orient") {
      Bad(std::string(name) + ": unknown key '" + key + "'");
    }
  }
  if (!v.contains("pos")) Bad(std::string(name) + ": missing 'pos'");
  GrabEvent e{ReadVec3(v["pos"], "pos"), Rotation()};
  if (v.contains("orient")) e.orientation = ReadOrientation(v["orient"]);
  return e;
}

json Vec3Json(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }

json RotationJson(const Rotation& r) { return json::array({r.w(), r.x(), r.y(), r.z()}); }

}  // namespace

InputEvent ParseEventJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    Bad(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.size() != 1) {
    Bad("an event must be an object with exactly one key");
  }
  const auto& [key, v] = *doc.items().begin();
  if (key == "voice") {
    if (!v.is_string()) Bad("voice must be a string");
    return event::Voice{v.get<std::string>()};
  }
  if (key == "hand") return event::HandMove{ReadVec3(v, "hand")};
  if (key == "grab_start") return ReadGrab<event::GrabStart>(v, "grab_start");
  if (key == "grab_move") return ReadGrab<event::GrabMove>(v, "grab_move");
  if (key == "grab_end") {
    if (v != true) Bad("grab_end must be true");
    return event::GrabEnd{};
  }
  if (key == "palm_up") {
    if (!v.is_boolean()) Bad("palm_up must be a boolean");
    return event::PalmUp{v.get<bool>()};
  }
  if (key == "grab_tree") {
    if (!v.is_string()) Bad("grab_tree must be a node id string");
    return event::GrabTreeNode{v.get<std::string>()};
  }
  if (key == "release_tree") {
    if (v != true) Bad("release_tree must be true");
    return event::ReleaseTreeNode{};
  }
  Bad("unknown event '" + key + "'");
}

std::string EventToJson(const InputEvent& event) {
  struct {
    json operator()(const event::Voice& e) const { return {{"voice", e.utterance}}; }
    json operator()(const event::HandMove& e) const { return {{"hand", Vec3Json(e.pos)}}; }
    json operator()(const event::GrabStart& e) const {
      return {{"grab_start",
               {{"pos", Vec3Json(e.pos)}, {"orient", RotationJson(e.orientation)}}}};
    }
    json operator()(const event::GrabMove& e) const {
      return {{"grab_move",
               {{"pos", Vec3Json(e.pos)}, {"orient", RotationJson(e.orientation)}}}};
    }
    json operator()(const event::GrabEnd&) const { return {{"grab_end", true}}; }
    json operator()(const event::PalmUp& e) const { return {{"palm_up", e.visible}}; }
    json operator()(const event::GrabTreeNode& e) const {
      return {{"grab_tree", e.node_id}};
    }
    json operator()(const event::ReleaseTreeNode&) const {
      return {{"release_tree", true}};
    }
  } visitor;
  return std::visit(visitor, event).dump();
}

std::vector<InputEvent> ParseScript(std::string_view text) {
  std::vector<InputEvent> events;
  size_t line_no = 0;
  while (!text.empty()) {
    const size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      events.push_back(ParseEventJson(line));
    } catch (const Error& e) {
      throw Error(ErrorCode::kScript,
                  "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return events;
}

std::string FormatEffectLog(const std::vector<IndexedEffect>& effects) {
  std::string out;
  for (const auto& e : effects) {
    out += std::to_string(e.event_index);
    out += ' ';
    out += ToString(e.effect);
    out += '\n';
  }
  return out;
}

}  // namespace midair
