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

#include <json.hpp>

#include "midair/mesher.h"
#include "midair/session.h"

namespace midair::service {

/// {"state": {...}, "seq": n[, "ack": client_seq]}
nlohmann::json StateMessage(const SessionState& state, uint64_t seq,
                            const std::optional<nlohmann::json>& ack);

/// {"effects": [{"kind": ..., "reason"|"detail": ...}, ...], "seq": n}
nlohmann::json EffectsMessage(const std::vector<Effect>& effects, uint64_t seq);

/// {"mesh": {"vertices": [x0, y0, z0, ...], "triangles": [i0, i1, i2, ...],
///           "volume": v, "resolution": r[, "primitive": id]}, "seq": n}
nlohmann::json MeshMessage(const TriangleMesh& mesh, uint64_t seq, int resolution,
                           const std::optional<std::string>& primitive);

/// {"error": {"code": ..., "message": ...}}
nlohmann::json ErrorMessage(std::string_view code, std::string_view message);

/// Compact text frame; invalid UTF-8 in strings is replaced, never thrown.
std::string Frame(const nlohmann::json& message);

}  // namespace midair::service
