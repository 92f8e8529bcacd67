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

#include <string>
#include <string_view>

#include "midair/scene.h"

namespace midair {

/// Parses the strict JSON scene format. Unknown keys are rejected.
/// Throws Error(kSyntax), Error(kSchema) or Error(kValue).
Scene ParseScene(std::string_view text);

/// Deterministic JSON: sorted keys, primitives ordered by id, numbers rounded
/// to 9 significant digits, quaternions in canonical (w >= 0) form.
std::string SerializeScene(const Scene& scene);

/// Rounds to 9 significant digits; magnitudes below 1e-12 become +0.
double RoundForOutput(double value);

Scene LoadSceneFile(const std::string& path);

}  // namespace midair
