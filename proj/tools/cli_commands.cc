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

#include "cli_commands.h"

#include <charconv>
#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <boost/asio/signal_set.hpp>

#include "midair/commands.h"
#include "midair/errors.h"
#include "midair/mesher.h"
#include "midair/scene_io.h"
#include "midair/script_io.h"
#include "midair/session.h"
#include "service/server.h"

namespace midair::cli {
namespace {

std::optional<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool WriteFile(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  out << data;
  return static_cast<bool>(out);
}

// Input errors (bad scene, bad CSV, bad resolution, bind failure) all map
// to the usage exit code.
template <typename F>
int Guard(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << ToString(e.code()) << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace

int RunReplay(const ReplayOptions& options, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    const Scene scene = LoadSceneFile(options.scene_path);
    const auto text = ReadFile(options.script_path);
    if (!text) {
      err << options.script_path << ": cannot read script file\n";
      return kExitUsage;
    }
    std::vector<InputEvent> events;
    try {
      events = ParseScript(*text);
    } catch (const Error& e) {
      err << options.script_path << ": " << e.what() << "\n";
      return kExitScript;
    }
    const ScriptResult result = RunScript(scene, events);
    if (!WriteFile(options.out_path, SerializeScene(result.state.scene))) {
      err << options.out_path << ": cannot write\n";
      return kExitUsage;
    }
    if (options.effects_path &&
        !WriteFile(*options.effects_path, FormatEffectLog(result.effects))) {
      err << *options.effects_path << ": cannot write\n";
      return kExitUsage;
    }
    out << "events " << events.size() << "\n";
    out << "effects " << result.effects.size() << "\n";
    return kExitOk;
  });
}

int RunMesh(const MeshOptions& options, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    MeshFormat format;
    if (options.format == "obj") {
      format = MeshFormat::kObj;
    } else if (options.format == "stl") {
      format = MeshFormat::kStlBinary;
    } else {
      err << "unknown format '" << options.format << "' (expected obj or stl)\n";
      return kExitUsage;
    }
    const GridSpec spec(options.resolution);
    const Scene scene = LoadSceneFile(options.scene_path);
    const TriangleMesh mesh = Polygonize(scene, spec);
    if (!WriteFile(options.out_path, ExportMesh(mesh, format))) {
      err << options.out_path << ": cannot write\n";
      return kExitUsage;
    }
    char volume[32];
    std::snprintf(volume, sizeof volume, "%.6g", MeshVolume(mesh));
    out << "vertices " << mesh.vertices.size() << "\n";
    out << "triangles " << mesh.triangles.size() << "\n";
    out << "volume " << volume << "\n";
    return kExitOk;
  });
}

int RunStats(const std::string& csv_path, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    const auto text = ReadFile(csv_path);
    if (!text) {
      err << csv_path << ": cannot read\n";
      return kExitUsage;
    }
    const auto records = ParseRecognitionCsv(*text);
    const RecognitionReport report = RecognitionStats(records);
    for (size_t i = 0; i < records.size(); ++i) {
      out << records[i].user_label << " " << FormatTenths(report.per_user_tenths[i]) << "%\n";
    }
    out << "mean " << FormatTenths(report.mean_tenths) << "%\n";
    out << "pooled " << FormatTenths(report.pooled_tenths) << "%\n";
    return kExitOk;
  });
}

int RunServe(const ServeOptions& options, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    const auto colon = options.bind.rfind(':');
    uint16_t port = 0;
    if (colon == std::string::npos ||
        std::from_chars(options.bind.data() + colon + 1,
                        options.bind.data() + options.bind.size(), port)
                .ec != std::errc{}) {
      err << "invalid --bind '" << options.bind << "' (expected HOST:PORT)\n";
      return kExitUsage;
    }
    const std::string host = options.bind.substr(0, colon);
    Scene scene = LoadSceneFile(options.scene_path);
    service::SessionServer server(std::move(scene), host, port);
    out << "listening on ws://" << host << ":" << server.port() << "\n" << std::flush;

    boost::asio::io_context signals_ctx;
    boost::asio::signal_set signals(signals_ctx, SIGINT, SIGTERM);
    signals.async_wait([&](const boost::system::error_code&, int) { server.Stop(); });
    std::jthread signal_thread([&] { signals_ctx.run(); });
    server.Run();
    signals_ctx.stop();
    return kExitOk;
  });
}

}  // namespace midair::cli
