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

#include <iosfwd>
#include <optional>
#include <string>

namespace midair::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;   // bad arguments, unreadable or invalid input
inline constexpr int kExitScript = 3;  // script failed to parse

struct ReplayOptions {
  std::string scene_path;
  std::string script_path;
  std::string out_path;
  std::optional<std::string> effects_path;
};

/// Replays an event script against a scene and writes the resulting scene.
int RunReplay(const ReplayOptions& options, std::ostream& out, std::ostream& err);

struct MeshOptions {
  std::string scene_path;
  int resolution = 64;
  std::string format = "obj";
  std::string out_path;
};

/// Polygonizes the scene and writes OBJ or binary STL.
int RunMesh(const MeshOptions& options, std::ostream& out, std::ostream& err);

/// Prints per-user and mean recognition rates for a CSV of
/// user_label,recognized,unrecognized rows.
int RunStats(const std::string& csv_path, std::ostream& out, std::ostream& err);

struct ServeOptions {
  std::string scene_path;
  std::string bind = "127.0.0.1:8765";
};

/// Blocks until interrupted.
int RunServe(const ServeOptions& options, std::ostream& out, std::ostream& err);

}  // namespace midair::cli
