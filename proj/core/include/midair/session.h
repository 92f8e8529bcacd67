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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "midair/commands.h"
#include "midair/scene.h"

namespace midair {

namespace event {
struct Voice {
  std::string utterance;
};
struct HandMove {
  Vec3 pos;
};
struct GrabStart {
  Vec3 pos;
  Rotation orientation;
};
struct GrabMove {
  Vec3 pos;
  Rotation orientation;
};
struct GrabEnd {};
struct PalmUp {
  bool visible = false;
};
struct GrabTreeNode {
  std::string node_id;
};
struct ReleaseTreeNode {};
}  // namespace event

using InputEvent =
    std::variant<event::Voice, event::HandMove, event::GrabStart,
                 event::GrabMove, event::GrabEnd, event::PalmUp,
                 event::GrabTreeNode, event::ReleaseTreeNode>;

enum class ModeKind { kIdle, kSelection, kManipulation };

struct Mode {
  ModeKind kind = ModeKind::kIdle;
  TransformKind transform = TransformKind::kTranslate;  // Manipulation only

  friend bool operator==(const Mode& a, const Mode& b) {
    return a.kind == b.kind &&
           (a.kind != ModeKind::kManipulation || a.transform == b.transform);
  }
};

/// "Idle", "Selection", "Manipulation".
std::string_view ModeText(const Mode& mode);

enum class EffectKind {
  kModeChanged,
  kHighlightChanged,
  kSelectionChanged,
  kGroupChanged,
  kSceneEdited,
  kTreeShown,
  kTreeHidden,
  kOperatorChanged,
  kWarning,
  kIgnored,
};

enum class Reason {
  kNone,
  kNotRecognized,
  kWrongMode,
  kNoSelection,
  kNothingHighlighted,
  kNeedTwo,
  kNoGroup,
  kNoHandleHit,
  kUnsupported,
  kAlreadyGrabbing,
  kNoActiveGrab,
  kTreeHidden,
  kUnknownNode,
  kLeafNotOperator,
  kNoNodeGrabbed,
  kNoChange,
  kInvalidInput,
};

std::string_view ToString(EffectKind kind);
std::string_view ToString(Reason reason);

struct Effect {
  EffectKind kind;
  Reason reason = Reason::kNone;  // Warning and Ignored only
  std::string detail;

  friend bool operator==(const Effect&, const Effect&) = default;
};

/// "Kind", "Kind detail" or "Kind Reason".
std::string ToString(const Effect& effect);

enum class HandlePart { kAxisX, kAxisY, kAxisZ, kCenterSphere };

struct GrabBinding {
  HandlePart target;
  Vec3 start_hand_pos;
  Rotation start_hand_orientation;
  Vec3 pivot;          // selection bounds center at grab start
  double axis_length;  // handle axis length at grab start
  Scene baseline_scene;
};

struct LogEntry {
  InputEvent event;
  std::vector<Effect> effects;
};

struct SessionState {
  Scene scene;
  Mode mode{};
  std::set<std::string> highlighted{};
  std::set<std::string> selected{};
  std::vector<std::set<std::string>> groups{};  // disjoint, oldest first
  Vec3 hand_pos = Vec3::Zero();
  std::optional<GrabBinding> active_grab{};
  bool tree_visible = false;
  std::optional<std::string> grabbed_tree_node{};
  std::vector<LogEntry> event_log{};
};

SessionState NewSession(Scene scene);

struct StepResult {
  SessionState state;
  std::vector<Effect> effects;
};

/// Applies one input event. Misuse never throws; it produces Warning or
/// Ignored effects. The event and its effects are appended to event_log.
StepResult Step(SessionState state, const InputEvent& event);

struct IndexedEffect {
  size_t event_index;  // 0-based position in the event list
  Effect effect;
};

struct ScriptResult {
  SessionState state;
  std::vector<IndexedEffect> effects;
};

/// Left fold of Step over `events`.
ScriptResult RunScript(const Scene& scene,
                       const std::vector<InputEvent>& events);

enum class DisplayState { kDefault, kHighlighted, kSelected, kGrouped };

std::string_view ToString(DisplayState state);

/// Precedence Grouped > Selected > Highlighted > Default.
std::map<std::string, DisplayState> DisplayStates(const SessionState& state);

struct HandleLayout {
  Vec3 origin;
  double axis_length;
  double box_half;
  double sphere_radius;
  std::array<Vec3, 3> box_centers;

  static constexpr double kMinAxisLength = 0.1;
  static constexpr double kBoxHalfRatio = 0.08;
  static constexpr double kSphereRadiusRatio = 0.12;
  static constexpr double kHitTolerance = 1.5;
};

/// Layout around the bounds of the given primitives (must be non-empty).
HandleLayout LayoutForSelection(const Scene& scene,
                                const std::set<std::string>& ids);

/// std::nullopt unless in Manipulation mode with a non-empty selection.
std::optional<HandleLayout> ComputeHandleLayout(const SessionState& state);

struct InfoBoard {
  std::string mode_text;
  std::optional<std::string> active_transform;
  std::vector<std::pair<std::string, std::string>> commands;
};

InfoBoard InformationBoard(const SessionState& state);

/// Per-axis factor limits for one scaling grab.
inline constexpr double kMinScaleFactor = 0.01;
inline constexpr double kMaxScaleFactor = 100.0;

}  // namespace midair
