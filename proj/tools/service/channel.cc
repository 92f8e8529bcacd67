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

#include "service/channel.h"

#include <json.hpp>

#include "midair/errors.h"
#include "midair/scene_io.h"
#include "midair/script_io.h"
#include "service/wire.h"

namespace midair::service {

using nlohmann::json;

std::string RunMeshJob(const MeshJob& job) {
  const GridSpec spec(job.resolution);
  const TriangleMesh mesh =
      job.primitive ? Polygonize(job.scene, CsgNode::Leaf(*job.primitive), spec)
                    : Polygonize(job.scene, spec);
  return Frame(MeshMessage(mesh, job.seq, job.resolution, job.primitive));
}

SessionChannel::SessionChannel(Scene scene) : state_(NewSession(std::move(scene))) {}

MeshJob SessionChannel::Job(std::optional<std::string> primitive) const {
  return MeshJob{state_.scene, resolution_, seq_, std::move(primitive)};
}

SessionChannel::Reply SessionChannel::Greeting() const {
  return Reply{{Frame(StateMessage(state_, seq_, std::nullopt))}, Job()};
}

SessionChannel::Reply SessionChannel::HandleFrame(std::string_view frame) {
  Reply reply;
  const auto fail = [&](std::string_view code, std::string_view message) {
    reply.messages.push_back(Frame(ErrorMessage(code, message)));
    return reply;
  };

  json msg;
  try {
    msg = json::parse(frame.begin(), frame.end());
  } catch (const json::exception& e) {
    return fail("MalformedFrame", e.what());
  }
  if (!msg.is_object()) return fail("MalformedFrame", "frame must be a JSON object");
  std::optional<json> ack;
  if (msg.contains("seq")) ack = msg["seq"];

  try {
    if (msg.contains("event")) {
      const InputEvent event = ParseEventJson(msg["event"].dump());
      StepResult step = Step(std::move(state_), event);
      state_ = std::move(step.state);
      ++seq_;
      if (!step.effects.empty()) {
        reply.messages.push_back(Frame(EffectsMessage(step.effects, seq_)));
      }
      reply.messages.push_back(Frame(StateMessage(state_, seq_, ack)));
      for (const auto& e : step.effects) {
        if (e.kind == EffectKind::kSceneEdited || e.kind == EffectKind::kOperatorChanged) {
          reply.mesh = Job();
          break;
        }
      }
      // The session log grows without bound otherwise; clients only see
      // per-event effects.
      state_.event_log.clear();
      return reply;
    }
    if (msg.contains("load_scene")) {
      state_ = NewSession(ParseScene(msg["load_scene"].dump()));
      reply.messages.push_back(Frame(StateMessage(state_, seq_, ack)));
      reply.mesh = Job();
      return reply;
    }
    if (msg.contains("request_mesh")) {
      const json& req = msg["request_mesh"];
      if (!req.is_object()) return fail("MalformedFrame", "request_mesh must be an object");
      int resolution = resolution_;
      if (req.contains("resolution")) {
        if (!req["resolution"].is_number_integer()) {
          return fail("MalformedFrame", "resolution must be an integer");
        }
        const auto r = req["resolution"].get<int64_t>();
        if (r < GridSpec::kMinResolution || r > GridSpec::kMaxResolution) {
          return fail(ToString(ErrorCode::kResolutionOutOfRange),
                      "resolution must lie in [8, 1024]");
        }
        resolution = static_cast<int>(r);
      }
      std::optional<std::string> primitive;
      if (req.contains("primitive")) {
        if (!req["primitive"].is_string() ||
            !state_.scene.has_primitive(req["primitive"].get<std::string>())) {
          return fail(ToString(ErrorCode::kUnknownId), "unknown primitive");
        }
        primitive = req["primitive"].get<std::string>();
      } else {
        resolution_ = resolution;
      }
      MeshJob job = Job(std::move(primitive));
      job.resolution = resolution;
      reply.mesh = std::move(job);
      return reply;
    }
  } catch (const Error& e) {
    return fail(ToString(e.code()), e.what());
  } catch (const json::exception& e) {
    return fail("MalformedFrame", e.what());
  } catch (const std::exception& e) {
    return fail("InternalError", e.what());
  }
  return fail("MalformedFrame", "expected one of: event, load_scene, request_mesh");
}

}  // namespace midair::service
