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
#include <vector>

#include "midair/session.h"

namespace midair {

/// One event as a compact JSON object, e.g. {"voice":"select"} or
/// {"grab_start":{"pos":[0,1,0],"orient":[1,0,0,0]}}. "orient" defaults to
/// identity. Throws Error(kScript) with a description of the problem.
InputEvent ParseEventJson(std::string_view text);
std::string EventToJson(const InputEvent& event);

/// One event per line; blank lines are skipped. Errors name the 1-based
/// line number. Throws Error(kScript).
std::vector<InputEvent> ParseScript(std::string_view text);

/// One line per effect: "<event index> <effect>".
std::string FormatEffectLog(const std::vector<IndexedEffect>& effects);

}  // namespace midair
