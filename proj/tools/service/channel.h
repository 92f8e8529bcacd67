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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "midair/mesher.h"
#include "midair/session.h"

namespace midair::service {

/// Work item for the mesh worker. `primitive` selects a single primitive's
/// shell instead of the combined solid.
struct MeshJob {
  Scene scene;
  int resolution;
  uint64_t seq;
  std::optional<std::string> primitive;
};

/// Serialized mesh message for a job.
std::string RunMeshJob(const MeshJob& job);

/// One client session, independent of the transport. Frames are handled
/// strictly in arrival order; each call returns the messages to send back
/// and, when the geometry changed, the mesh to recompute.
class SessionChannel {
 public:
  static constexpr int kDefaultResolution = 48;

  explicit SessionChannel(Scene scene);

  struct Reply {
    std::vector<std::string> messages;
    std::optional<MeshJob> mesh;
  };

  /// Messages sent when a client connects: the initial state and its mesh.
  Reply Greeting() const;

  /// Never throws; malformed input yields an error message.
  Reply HandleFrame(std::string_view frame);

  const SessionState& state() const { return state_; }
  uint64_t seq() const { return seq_; }
  int resolution() const { return resolution_; }

 private:
  MeshJob Job(std::optional<std::string> primitive = std::nullopt) const;

  SessionState state_;
  uint64_t seq_ = 0;
  int resolution_ = kDefaultResolution;
};

}  // namespace midair::service
