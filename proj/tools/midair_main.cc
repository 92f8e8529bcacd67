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

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include "cli_commands.h"

namespace {

void ConfigureLogging() {
  spdlog::set_level(spdlog::level::warn);
  if (const char* level = std::getenv("MIDAIR_LOG")) {
    spdlog::set_level(spdlog::level::from_str(level));
  }
}

}  // namespace

int main(int argc, char** argv) {
  ConfigureLogging();
  namespace cli = midair::cli;

  CLI::App app{"midair: CSG scene editing by voice and hand input"};
  app.require_subcommand(1);

  cli::ReplayOptions replay;
  auto* replay_cmd = app.add_subcommand("replay", "Run an event script against a scene");
  replay_cmd->add_option("--scene", replay.scene_path, "Scene JSON")->required();
  replay_cmd->add_option("--script", replay.script_path, "Event script (JSON lines)")
      ->required();
  replay_cmd->add_option("--out", replay.out_path, "Resulting scene JSON")->required();
  replay_cmd->add_option("--effects", replay.effects_path, "Effect log output");

  cli::MeshOptions mesh;
  auto* mesh_cmd = app.add_subcommand("mesh", "Polygonize a scene");
  mesh_cmd->add_option("--scene", mesh.scene_path, "Scene JSON")->required();
  mesh_cmd->add_option("--resolution", mesh.resolution, "Cells along the longest axis")
      ->capture_default_str();
  mesh_cmd->add_option("--format", mesh.format, "obj or stl")->capture_default_str();
  mesh_cmd->add_option("--out", mesh.out_path, "Output mesh file")->required();

  std::string csv_path;
  auto* stats_cmd = app.add_subcommand("stats", "Voice recognition rates from a CSV");
  stats_cmd->add_option("csv,--csv", csv_path, "user_label,recognized,unrecognized rows")
      ->required();

  cli::ServeOptions serve;
  auto* serve_cmd = app.add_subcommand("serve", "WebSocket session server");
  serve_cmd->add_option("--scene", serve.scene_path, "Initial scene JSON")->required();
  serve_cmd->add_option("--bind", serve.bind, "HOST:PORT")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitUsage;
  }

  if (*replay_cmd) return cli::RunReplay(replay, std::cout, std::cerr);
  if (*mesh_cmd) return cli::RunMesh(mesh, std::cout, std::cerr);
  if (*stats_cmd) return cli::RunStats(csv_path, std::cout, std::cerr);
  return cli::RunServe(serve, std::cout, std::cerr);
}
