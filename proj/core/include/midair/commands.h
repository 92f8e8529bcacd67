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

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "midair/scene.h"

namespace midair {

enum class TransformKind { kTranslate, kRotate, kScale };

std::string_view ToString(TransformKind kind);

namespace command {
struct EnterSelection {};
struct Append {};
struct Remove {};
struct Group {};
struct Ungroup {};
struct SetTransform {
  TransformKind kind;
};
struct ChangeOperator {
  OpKind kind;
};
}  // namespace command

using Command =
    std::variant<command::EnterSelection, command::Append, command::Remove,
                 command::Group, command::Ungroup, command::SetTransform,
                 command::ChangeOperator>;

/// Trim, ASCII-lowercase, treat '-' as a space, collapse whitespace runs.
std::string NormalizeUtterance(std::string_view utterance);

/// Exact match of the normalized utterance against the fixed lexicon;
/// std::nullopt means "not recognized". Never throws.
std::optional<Command> ParseCommand(std::string_view utterance);

struct LexiconEntry {
  std::string_view utterance;
  std::string_view explanation;
};
/// The eleven voice commands in display order.
const std::vector<LexiconEntry>& Lexicon();

struct RecognitionRecord {
  std::string user_label;
  int64_t recognized = 0;
  int64_t unrecognized = 0;
};

/// Rates are kept as integer tenths of a percent so that 1-decimal rounding
/// (half up) is exact.
struct RecognitionReport {
  std::vector<int64_t> per_user_tenths;
  int64_t mean_tenths = 0;    // mean of the rounded per-user rates
  int64_t pooled_tenths = 0;  // total recognized / total utterances
  int64_t total_recognized = 0;
  int64_t total_unrecognized = 0;

  static double Percent(int64_t tenths) { return tenths / 10.0; }
};

/// Throws Error(kEmptyInput) or Error(kZeroTotal).
RecognitionReport RecognitionStats(const std::vector<RecognitionRecord>& records);

/// "user_label,recognized,unrecognized" rows; a header row starting with
/// "user_label" and blank lines are skipped. Throws Error(kMalformedCsv).
std::vector<RecognitionRecord> ParseRecognitionCsv(std::string_view text);

/// "83.3" style, always one decimal.
std::string FormatTenths(int64_t tenths);

}  // namespace midair
