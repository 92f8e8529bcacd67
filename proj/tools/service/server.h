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
#include <memory>
#include <string>

#include "midair/scene.h"

namespace midair::service {

/// WebSocket front end. Each connection gets its own session seeded with a
/// copy of the initial scene. Frames are JSON text; see wire.h for the
/// messages sent back. Meshing runs off the I/O thread, at most one job per
/// (connection, mesh kind) at a time; newer requests replace queued ones.
class SessionServer {
 public:
  /// Binds immediately; port 0 picks a free port.
  SessionServer(Scene scene, const std::string& host, uint16_t port);
  ~SessionServer();

  SessionServer(const SessionServer&) = delete;
  SessionServer& operator=(const SessionServer&) = delete;

  uint16_t port() const;

  /// Serves until Stop() is called. Blocks the calling thread.
  void Run();
  /// Safe to call from any thread.
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace midair::service
