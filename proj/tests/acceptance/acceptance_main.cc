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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "midair/commands.h"
#include "midair/errors.h"
#include "midair/mesher.h"
#include "midair/scene_io.h"
#include "midair/script_io.h"
#include "midair/sdf.h"
#include "midair/session.h"
#include "session_fuzz.h"
#include "test_support.h"

#ifdef MIDAIR_HAVE_CLI
#include "cli_commands.h"
#endif

using namespace midair;
using namespace midair::testing;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void Criterion(const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = budget_s <= 0 || secs < budget_s;
  const bool pass = r.ok && in_time;
  if (!pass) ++failures;
  char timing[64];
  if (budget_s > 0) {
    std::snprintf(timing, sizeof timing, "%.2fs, budget %.0fs", secs, budget_s);
  } else {
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
  }
  std::printf("%s %-24s %s (%s)%s\n", pass ? "PASS" : "FAIL", name, r.detail.c_str(), timing,
              in_time ? "" : " over time budget");
  std::fflush(stdout);
}

std::string Fmt(const char* fmt, double a, double b = 0, double c = 0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, fmt, a, b, c);
  return buf;
}

Outcome RoundTrip() {
  for (const auto& name : StudyObjects()) {
    const Scene s = LoadFixture(name);
    const Scene back = ParseScene(SerializeScene(s));
    if (!Equivalent(s, back) || SerializeScene(back) != SerializeScene(s)) {
      return {false, name + " differs after parse(serialize)"};
    }
  }
  return {true, "3 fixtures structurally identical"};
}

Outcome SignAgreement() {
  int64_t checked = 0;
  for (const auto& name : StudyObjects()) {
    const Scene s = LoadFixture(name);
    const Aabb box = NodeAabb(s, s.root());
    int64_t here = 0;
    for (const Vec3& p : RandomPoints(box, 20000, 2024, 0.1 * box.Diagonal())) {
      const double d = SignedDistance(s, p);
      if (std::abs(d) <= 1e-9) continue;
      if ((d < 0) != Contains(s, p)) return {false, name + ": sign mismatch"};
      ++here;
    }
    if (here < 10000) return {false, name + ": fewer than 1e4 points off the band"};
    checked += here;
  }
  return {true, Fmt("%.0f points, 100%% agreement outside 1e-9", checked)};
}

Outcome MeshFidelity() {
  const TriangleMesh sphere = Polygonize(LoadFixture("unit_sphere"), GridSpec(64));
  const double sphere_expected = 4.0 / 3.0 * std::numbers::pi;
  const double sphere_err = std::abs(MeshVolume(sphere) - sphere_expected) / sphere_expected;
  const int64_t bad = CountBadEdges(sphere);
  const int64_t chi = EulerCharacteristic(sphere);
  const TriangleMesh box = Polygonize(LoadFixture("box_2x1x1"), GridSpec(64));
  const double box_err = std::abs(MeshVolume(box) - 2.0) / 2.0;
  const bool ok = bad == 0 && chi == 2 && sphere_err < 0.02 && box_err < 0.02;
  return {ok, Fmt("sphere bad edges %.0f chi %.0f vol err %.3f%%", bad, chi, 100 * sphere_err) +
                  Fmt(", box vol err %.3f%% (tol 2%%)", 100 * box_err)};
}

Outcome CrossOracleVolume() {
  double worst = 0;
  std::string detail;
  for (const auto& name : StudyObjects()) {
    const Scene s = LoadFixture(name);
    const double mesh = MeshVolume(Polygonize(s, GridSpec(128)));
    const double mc = MonteCarloVolume(s, s.root(), 1000000, 20261017);
    const double rel = std::abs(mesh - mc) / mc;
    worst = std::max(worst, rel);
    detail += name + Fmt(" %.3f%% ", 100 * rel);
  }
  return {worst < 0.03, detail + "(tol 3%)"};
}

Outcome StudyTasksGolden() {
  const ScriptResult r = RunScript(LoadFixture("object1"),
                                   ParseScript(ReadText(GoldenPath("study_tasks_script.jsonl"))));
  const bool scene_ok = SerializeScene(r.state.scene) == ReadText(GoldenPath("study_tasks_scene.json"));
  const bool log_ok =
      FormatEffectLog(r.effects) == ReadText(GoldenPath("study_tasks_effects.txt"));
  return {scene_ok && log_ok, std::string("scene ") + (scene_ok ? "identical" : "differs") +
                                  ", effect log " + (log_ok ? "identical" : "differs")};
}

Outcome StudyRates() {
  const std::string expected =
      "P1 83.3%\nP2 59.8%\nP3 68.1%\nP4 67.1%\nP5 75.0%\nmean 70.7%\n";
  std::ostringstream out;
#ifdef MIDAIR_HAVE_CLI
  std::ostringstream err;
  if (cli::RunStats(FixturePath("recognition.csv"), out, err) != cli::kExitOk) {
    return {false, "stats failed: " + err.str()};
  }
#else
  const auto records = ParseRecognitionCsv(ReadText(FixturePath("recognition.csv")));
  const auto report = RecognitionStats(records);
  for (size_t i = 0; i < records.size(); ++i) {
    out << records[i].user_label << ' ' << FormatTenths(report.per_user_tenths[i]) << "%\n";
  }
  out << "mean " << FormatTenths(report.mean_tenths) << "%\n";
#endif
  const bool ok = out.str().rfind(expected, 0) == 0;
  return {ok, ok ? "83.3/59.8/68.1/67.1/75.0 mean 70.7" : "got: " + out.str()};
}

Outcome UnsupportedScale() {
  SessionState state = NewSession(LoadFixture("object1"));
  const auto step = [&](InputEvent e) {
    StepResult r = Step(std::move(state), std::move(e));
    state = std::move(r.state);
    return r.effects;
  };
  step(event::Voice{"select"});
  step(event::HandMove{state.scene.primitive("knob").pose.translation});
  step(event::Voice{"append"});
  step(event::Voice{"scale"});
  const Scene before = state.scene;
  const HandleLayout layout = *ComputeHandleLayout(state);
  const auto effects = step(event::GrabStart{layout.origin, Rotation()});
  const bool warned = effects.size() == 1 && effects[0].kind == EffectKind::kWarning &&
                      effects[0].reason == Reason::kUnsupported;
  step(event::GrabMove{layout.origin + Vec3(0.3, 0.2, 0.1), Rotation()});
  step(event::GrabEnd{});
  const bool unchanged = state.scene == before;
  return {warned && unchanged, std::string(warned ? "Warning(Unsupported)" : "no warning") +
                                   (unchanged ? ", scene unchanged" : ", scene changed")};
}

Outcome Fuzz() {
  const Scene scene = LoadFixture("object1");
  EventFuzzer fuzz(scene, 7);
  std::mt19937_64 rng(8);
  int64_t steps = 0;
  for (int seq = 0; seq < 100000; ++seq) {
    SessionState state = NewSession(scene);
    const int n = 1 + static_cast<int>(rng() % 40);
    for (int i = 0; i < n; ++i) {
      const InputEvent e = fuzz.Next(state);
      const SessionState prev = state;
      StepResult r = Step(std::move(state), e);
      const std::string violation = CheckTransition(prev, e, r.state);
      if (!violation.empty()) {
        return {false, violation + " at sequence " + std::to_string(seq) + ": " + EventToJson(e)};
      }
      state = std::move(r.state);
      ++steps;
    }
  }
  return {true, Fmt("1e5 sequences, %.0f events, 0 violations", steps)};
}

}  // namespace

int main() {
  Criterion("scene round-trip", 1, RoundTrip);
  Criterion("sdf/contains agreement", 5, SignAgreement);
  Criterion("mesh fidelity", 5, MeshFidelity);
  Criterion("cross-oracle volume", 60, CrossOracleVolume);
  Criterion("study task script", 1, StudyTasksGolden);
  Criterion("recognition rates", 1, StudyRates);
  Criterion("unsupported scale", 0, UnsupportedScale);
  Criterion("fuzz robustness", 120, Fuzz);
  std::printf("%s: %d failing\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
