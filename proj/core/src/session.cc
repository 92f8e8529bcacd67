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

#include "midair/session.h"

#include <algorithm>
#include <cmath>

#include "midair/errors.h"
#include "midair/sdf.h"

namespace midair {

std::string_view ModeText(const Mode& mode) {
  switch (mode.kind) {
    case ModeKind::kIdle: return "Idle";
    case ModeKind::kSelection: return "Selection";
    case ModeKind::kManipulation: return "Manipulation";
  }
  return "Idle";
}

std::string_view ToString(EffectKind kind) {
  switch (kind) {
    case EffectKind::kModeChanged: return "ModeChanged";
    case EffectKind::kHighlightChanged: return "HighlightChanged";
    case EffectKind::kSelectionChanged: return "SelectionChanged";
    case EffectKind::kGroupChanged: return "GroupChanged";
    case EffectKind::kSceneEdited: return "SceneEdited";
    case EffectKind::kTreeShown: return "TreeShown";
    case EffectKind::kTreeHidden: return "TreeHidden";
    case EffectKind::kOperatorChanged: return "OperatorChanged";
    case EffectKind::kWarning: return "Warning";
    case EffectKind::kIgnored: return "Ignored";
  }
  return "Ignored";
}

std::string_view ToString(Reason reason) {
  switch (reason) {
    case Reason::kNone: return "None";
    case Reason::kNotRecognized: return "NotRecognized";
    case Reason::kWrongMode: return "WrongMode";
    case Reason::kNoSelection: return "NoSelection";
    case Reason::kNothingHighlighted: return "NothingHighlighted";
    case Reason::kNeedTwo: return "NeedTwo";
    case Reason::kNoGroup: return "NoGroup";
    case Reason::kNoHandleHit: return "NoHandleHit";
    case Reason::kUnsupported: return "Unsupported";
    case Reason::kAlreadyGrabbing: return "AlreadyGrabbing";
    case Reason::kNoActiveGrab: return "NoActiveGrab";
    case Reason::kTreeHidden: return "TreeHidden";
    case Reason::kUnknownNode: return "UnknownNode";
    case Reason::kLeafNotOperator: return "LeafNotOperator";
    case Reason::kNoNodeGrabbed: return "NoNodeGrabbed";
    case Reason::kNoChange: return "NoChange";
    case Reason::kInvalidInput: return "InvalidInput";
  }
  return "None";
}

std::string ToString(const Effect& effect) {
  std::string out(ToString(effect.kind));
  if (effect.kind == EffectKind::kWarning || effect.kind == EffectKind::kIgnored) {
    out += ' ';
    out += ToString(effect.reason);
  } else if (!effect.detail.empty()) {
    out += ' ';
    out += effect.detail;
  }
  return out;
}

std::string_view ToString(DisplayState state) {
  switch (state) {
    case DisplayState::kDefault: return "Default";
    case DisplayState::kHighlighted: return "Highlighted";
    case DisplayState::kSelected: return "Selected";
    case DisplayState::kGrouped: return "Grouped";
  }
  return "Default";
}

SessionState NewSession(Scene scene) {
  SessionState state{.scene = std::move(scene), .mode = Mode{}};
  return state;
}

HandleLayout LayoutForSelection(const Scene& scene, const std::set<std::string>& ids) {
  Aabb box;
  for (const auto& id : ids) box = Aabb::Union(box, PrimitiveAabb(scene.primitive(id)));
  HandleLayout layout;
  layout.origin = box.Center();
  layout.axis_length = std::max(0.5 * box.Diagonal(), HandleLayout::kMinAxisLength);
  layout.box_half = HandleLayout::kBoxHalfRatio * layout.axis_length;
  layout.sphere_radius = HandleLayout::kSphereRadiusRatio * layout.axis_length;
  for (int a = 0; a < 3; ++a) {
    layout.box_centers[a] = layout.origin + layout.axis_length * Vec3::Unit(a);
  }
  return layout;
}

std::optional<HandleLayout> ComputeHandleLayout(const SessionState& state) {
  if (state.mode.kind != ModeKind::kManipulation || state.selected.empty()) {
    return std::nullopt;
  }
  return LayoutForSelection(state.scene, state.selected);
}

std::map<std::string, DisplayState> DisplayStates(const SessionState& state) {
  std::map<std::string, DisplayState> out;
  for (const auto& [id, p] : state.scene.primitives()) {
    DisplayState d = DisplayState::kDefault;
    if (state.highlighted.contains(id)) d = DisplayState::kHighlighted;
    if (state.selected.contains(id)) d = DisplayState::kSelected;
    for (const auto& g : state.groups) {
      if (g.contains(id)) d = DisplayState::kGrouped;
    }
    out.emplace(id, d);
  }
  return out;
}

InfoBoard InformationBoard(const SessionState& state) {
  InfoBoard board;
  board.mode_text = std::string(ModeText(state.mode));
  if (state.mode.kind == ModeKind::kManipulation) {
    board.active_transform = std::string(ToString(state.mode.transform));
  }
  for (const auto& entry : Lexicon()) {
    board.commands.emplace_back(std::string(entry.utterance),
                                std::string(entry.explanation));
  }
  return board;
}

namespace {

std::string JoinIds(const std::set<std::string>& ids) {
  if (ids.empty()) return "-";
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ',';
    out += id;
  }
  return out;
}

std::string GroupsText(const std::vector<std::set<std::string>>& groups) {
  if (groups.empty()) return "-";
  std::string out;
  for (const auto& g : groups) {
    if (!out.empty()) out += '|';
    out += JoinIds(g);
  }
  return out;
}

std::string ModeDetail(const Mode& mode) {
  std::string out(ModeText(mode));
  if (mode.kind == ModeKind::kManipulation) {
    out += ':';
    out += ToString(mode.transform);
  }
  return out;
}

bool Intersects(const std::set<std::string>& a, const std::set<std::string>& b) {
  return std::any_of(a.begin(), a.end(), [&](const auto& id) { return b.contains(id); });
}

class Stepper {
 public:
  Stepper(SessionState& s, std::vector<Effect>& fx) : s_(s), fx_(fx) {}

  void operator()(const event::Voice& e) {
    const std::optional<Command> cmd = ParseCommand(e.utterance);
    if (!cmd) return Ignore(Reason::kNotRecognized);
    std::visit(*this, *cmd);
  }

  void operator()(const command::EnterSelection&) {
    if (s_.mode.kind == ModeKind::kSelection) return Ignore(Reason::kNoChange);
    s_.active_grab.reset();
    SetMode(Mode{ModeKind::kSelection});
  }

  void operator()(const command::Append&) {
    if (!InSelectionMode()) return;
    if (s_.highlighted.empty()) return Warn(Reason::kNothingHighlighted);
    const size_t before = s_.selected.size();
    s_.selected.insert(s_.highlighted.begin(), s_.highlighted.end());
    if (s_.selected.size() == before) return Ignore(Reason::kNoChange);
    Emit(EffectKind::kSelectionChanged, JoinIds(s_.selected));
  }

  void operator()(const command::Remove&) {
    if (!InSelectionMode()) return;
    if (s_.highlighted.empty()) return Warn(Reason::kNothingHighlighted);
    std::set<std::string> removed;
    for (const auto& id : s_.highlighted) {
      if (s_.selected.erase(id) > 0) removed.insert(id);
    }
    if (removed.empty()) return Ignore(Reason::kNoChange);
    Emit(EffectKind::kSelectionChanged, JoinIds(s_.selected));
    const size_t groups_before = s_.groups.size();
    std::erase_if(s_.groups, [&](const auto& g) { return Intersects(g, removed); });
    if (s_.groups.size() != groups_before) {
      Emit(EffectKind::kGroupChanged, GroupsText(s_.groups));
    }
  }

  void operator()(const command::Group&) {
    if (!InSelectionMode()) return;
    if (s_.selected.size() < 2) return Warn(Reason::kNeedTwo);
    if (std::find(s_.groups.begin(), s_.groups.end(), s_.selected) != s_.groups.end()) {
      return Ignore(Reason::kNoChange);
    }
    std::erase_if(s_.groups, [&](const auto& g) { return Intersects(g, s_.selected); });
    s_.groups.push_back(s_.selected);
    Emit(EffectKind::kGroupChanged, GroupsText(s_.groups));
  }

  void operator()(const command::Ungroup&) {
    if (!InSelectionMode()) return;
    if (s_.groups.empty()) return Warn(Reason::kNoGroup);
    const size_t before = s_.groups.size();
    std::erase_if(s_.groups,
                  [&](const auto& g) { return Intersects(g, s_.highlighted); });
    if (s_.groups.size() == before) s_.groups.pop_back();
    Emit(EffectKind::kGroupChanged, GroupsText(s_.groups));
  }

  void operator()(const command::SetTransform& c) {
    if (s_.selected.empty()) return Warn(Reason::kNoSelection);
    const Mode target{ModeKind::kManipulation, c.kind};
    if (s_.mode == target) return Ignore(Reason::kNoChange);
    s_.active_grab.reset();
    SetMode(target);
  }

  void operator()(const command::ChangeOperator& c) {
    if (!s_.grabbed_tree_node) return Warn(Reason::kNoNodeGrabbed);
    const CsgNode* node = s_.scene.FindNode(*s_.grabbed_tree_node);
    if (node == nullptr) return Warn(Reason::kUnknownNode);
    if (node->is_leaf()) return Warn(Reason::kLeafNotOperator);
    if (node->op() == c.kind) return Ignore(Reason::kNoChange);
    s_.scene = SetOperator(s_.scene, node->id(), c.kind);
    if (s_.active_grab) {
      s_.active_grab->baseline_scene =
          SetOperator(s_.active_grab->baseline_scene, *s_.grabbed_tree_node, c.kind);
    }
    Emit(EffectKind::kOperatorChanged,
         *s_.grabbed_tree_node + ":" + std::string(ToString(c.kind)));
  }

  void operator()(const event::HandMove& e) {
    if (!IsFinite(e.pos)) return Ignore(Reason::kInvalidInput);
    s_.hand_pos = e.pos;
    if (s_.mode.kind != ModeKind::kSelection) return Ignore(Reason::kWrongMode);
    std::set<std::string> hovered;
    for (const auto& [id, p] : s_.scene.primitives()) {
      if (PrimitiveContains(p, e.pos)) hovered.insert(id);
    }
    SetHighlight(std::move(hovered));
  }

  void operator()(const event::GrabStart& e) {
    if (!IsFinite(e.pos)) return Ignore(Reason::kInvalidInput);
    s_.hand_pos = e.pos;
    if (s_.mode.kind != ModeKind::kManipulation) return Ignore(Reason::kWrongMode);
    if (s_.active_grab) return Ignore(Reason::kAlreadyGrabbing);
    if (s_.selected.empty()) return Warn(Reason::kNoSelection);
    const HandleLayout layout = LayoutForSelection(s_.scene, s_.selected);

    std::optional<HandlePart> hit;
    double best = layout.box_half * HandleLayout::kHitTolerance;
    for (int a = 0; a < 3; ++a) {
      const double d = (e.pos - layout.box_centers[a]).norm();
      if (d <= best) {
        best = d;
        hit = static_cast<HandlePart>(a);
      }
    }
    if (!hit && (e.pos - layout.origin).norm() <=
                    layout.sphere_radius * HandleLayout::kHitTolerance) {
      hit = HandlePart::kCenterSphere;
    }
    if (!hit) return Ignore(Reason::kNoHandleHit);
    if (*hit == HandlePart::kCenterSphere &&
        s_.mode.transform == TransformKind::kScale) {
      return Warn(Reason::kUnsupported);
    }
    s_.active_grab = GrabBinding{*hit,          e.pos,  e.orientation,
                                 layout.origin, layout.axis_length, s_.scene};
  }

  void operator()(const event::GrabMove& e) {
    if (!IsFinite(e.pos)) return Ignore(Reason::kInvalidInput);
    s_.hand_pos = e.pos;
    if (!s_.active_grab) return Ignore(Reason::kNoActiveGrab);
    const GrabBinding& grab = *s_.active_grab;
    const std::optional<PoseDelta> delta = DeltaFor(grab, e);
    Scene next = grab.baseline_scene;
    if (delta) {
      try {
        next = ApplyPoseDelta(grab.baseline_scene, s_.selected, *delta);
      } catch (const Error&) {
        return Warn(Reason::kInvalidInput);
      }
    }
    if (next == s_.scene) return;
    s_.scene = std::move(next);
    Emit(EffectKind::kSceneEdited, JoinIds(s_.selected));
  }

  void operator()(const event::GrabEnd&) {
    if (!s_.active_grab) return Ignore(Reason::kNoActiveGrab);
    s_.active_grab.reset();
  }

  void operator()(const event::PalmUp& e) {
    if (e.visible == s_.tree_visible) return Ignore(Reason::kNoChange);
    s_.tree_visible = e.visible;
    if (!e.visible) s_.grabbed_tree_node.reset();
    Emit(e.visible ? EffectKind::kTreeShown : EffectKind::kTreeHidden);
  }

  void operator()(const event::GrabTreeNode& e) {
    if (!s_.tree_visible) return Ignore(Reason::kTreeHidden);
    if (s_.scene.FindNode(e.node_id) == nullptr) return Warn(Reason::kUnknownNode);
    s_.grabbed_tree_node = e.node_id;
    const std::vector<std::string> leaves = LeavesUnder(s_.scene, e.node_id);
    SetHighlight(std::set<std::string>(leaves.begin(), leaves.end()));
  }

  void operator()(const event::ReleaseTreeNode&) {
    if (!s_.grabbed_tree_node) return Ignore(Reason::kNoNodeGrabbed);
    s_.grabbed_tree_node.reset();
  }

 private:
  std::optional<PoseDelta> DeltaFor(const GrabBinding& grab,
                                    const event::GrabMove& e) const {
    const Vec3 moved = e.pos - grab.start_hand_pos;
    const Rotation turned = e.orientation * grab.start_hand_orientation.Inverse();
    if (grab.target == HandlePart::kCenterSphere) {
      if (s_.mode.transform == TransformKind::kTranslate) {
        if (moved.isZero(0.0)) return std::nullopt;
        return Translate{moved};
      }
      const Eigen::AngleAxisd aa(turned.quaternion());
      if (aa.angle() == 0.0) return std::nullopt;
      return RotateAbout{aa.axis(), aa.angle(), grab.pivot};
    }
    const Vec3 axis = Vec3::Unit(static_cast<int>(grab.target));
    switch (s_.mode.transform) {
      case TransformKind::kTranslate: {
        const double d = moved.dot(axis);
        if (d == 0.0) return std::nullopt;
        return Translate{d * axis};
      }
      case TransformKind::kScale: {
        const double f = std::clamp(1.0 + moved.dot(axis) / grab.axis_length,
                                    kMinScaleFactor, kMaxScaleFactor);
        if (f == 1.0) return std::nullopt;
        Vec3 factors = Vec3::Ones();
        factors[static_cast<int>(grab.target)] = f;
        return ScaleAxes{factors, grab.pivot};
      }
      case TransformKind::kRotate: {
        const double angle = turned.TwistAngle(axis);
        if (angle == 0.0) return std::nullopt;
        return RotateAbout{axis, angle, grab.pivot};
      }
    }
    return std::nullopt;
  }

  bool InSelectionMode() {
    if (s_.mode.kind == ModeKind::kSelection) return true;
    Ignore(Reason::kWrongMode);
    return false;
  }

  void SetMode(const Mode& mode) {
    s_.mode = mode;
    Emit(EffectKind::kModeChanged, ModeDetail(mode));
  }

  void SetHighlight(std::set<std::string> ids) {
    if (ids == s_.highlighted) return;
    s_.highlighted = std::move(ids);
    Emit(EffectKind::kHighlightChanged, JoinIds(s_.highlighted));
  }

  void Emit(EffectKind kind, std::string detail = {}) {
    fx_.push_back(Effect{kind, Reason::kNone, std::move(detail)});
  }
  void Warn(Reason reason) { fx_.push_back(Effect{EffectKind::kWarning, reason, {}}); }
  void Ignore(Reason reason) { fx_.push_back(Effect{EffectKind::kIgnored, reason, {}}); }

  SessionState& s_;
  std::vector<Effect>& fx_;
};

}  // namespace

StepResult Step(SessionState state, const InputEvent& event) {
  std::vector<Effect> effects;
  std::visit(Stepper(state, effects), event);
  state.event_log.push_back(LogEntry{event, effects});
  return StepResult{std::move(state), std::move(effects)};
}

ScriptResult RunScript(const Scene& scene, const std::vector<InputEvent>& events) {
  ScriptResult result{NewSession(scene), {}};
  for (size_t i = 0; i < events.size(); ++i) {
    StepResult r = Step(std::move(result.state), events[i]);
    result.state = std::move(r.state);
    for (auto& e : r.effects) result.effects.push_back({i, std::move(e)});
  }
  return result;
}

}  // namespace midair
