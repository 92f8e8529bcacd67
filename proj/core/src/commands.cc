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

#include "midair/commands.h"

#include <charconv>

#include "midair/errors.h"

namespace midair {

std::string_view ToString(TransformKind kind) {
  switch (kind) {
    case TransformKind::kTranslate: return "translate";
    case TransformKind::kRotate: return "rotate";
    case TransformKind::kScale: return "scale";
  }
  return "translate";
}

namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v' || c == '-';
}

}  // namespace

std::string NormalizeUtterance(std::string_view utterance) {
  std::string out;
  out.reserve(utterance.size());
  bool pending_space = false;
  for (char c : utterance) {
    if (IsSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
  }
  return out;
}

const std::vector<LexiconEntry>& Lexicon() {
  static const std::vector<LexiconEntry> entries = {
      {"select", "Enter selection mode"},
      {"append", "Add the highlighted primitives to the selection"},
      {"remove", "Remove the highlighted primitives from the selection"},
      {"group", "Group all selected primitives"},
      {"un-group", "Dissolve the hovered group, or the most recent one"},
      {"translate", "Move the selection with the handles"},
      {"rotate", "Rotate the selection with the handles"},
      {"scale", "Scale the selection with the axis handles"},
      {"change to union", "Make the grabbed tree node a union"},
      {"change to inter", "Make the grabbed tree node an intersection"},
      {"change to sub", "Make the grabbed tree node a subtraction"},
  };
  return entries;
}

std::optional<Command> ParseCommand(std::string_view utterance) {
  const std::string u = NormalizeUtterance(utterance);
  if (u == "select") return command::EnterSelection{};
  if (u == "append") return command::Append{};
  if (u == "remove") return command::Remove{};
  if (u == "group") return command::Group{};
  if (u == "un group") return command::Ungroup{};
  if (u == "translate") return command::SetTransform{TransformKind::kTranslate};
  if (u == "rotate") return command::SetTransform{TransformKind::kRotate};
  if (u == "scale") return command::SetTransform{TransformKind::kScale};
  if (u == "change to union") return command::ChangeOperator{OpKind::kUnion};
  if (u == "change to inter") return command::ChangeOperator{OpKind::kIntersection};
  if (u == "change to sub") return command::ChangeOperator{OpKind::kDifference};
  return std::nullopt;
}

namespace {

// round(100 * num / den, 1 decimal) in tenths, half rounded up.
int64_t RoundedTenths(int64_t num, int64_t den) {
  return (2000 * num + den) / (2 * den);
}

}  // namespace

RecognitionReport RecognitionStats(const std::vector<RecognitionRecord>& records) {
  if (records.empty()) throw Error(ErrorCode::kEmptyInput, "no recognition records");
  RecognitionReport report;
  int64_t sum_tenths = 0;
  for (const auto& r : records) {
    if (r.recognized < 0 || r.unrecognized < 0) {
      throw Error(ErrorCode::kValue, "counts for '" + r.user_label + "' are negative");
    }
    const int64_t total = r.recognized + r.unrecognized;
    if (total == 0) {
      throw Error(ErrorCode::kZeroTotal,
                  "user '" + r.user_label + "' has no recorded utterances");
    }
    const int64_t tenths = RoundedTenths(r.recognized, total);
    report.per_user_tenths.push_back(tenths);
    sum_tenths += tenths;
    report.total_recognized += r.recognized;
    report.total_unrecognized += r.unrecognized;
  }
  const auto n = static_cast<int64_t>(records.size());
  report.mean_tenths = (2 * sum_tenths + n) / (2 * n);
  report.pooled_tenths = RoundedTenths(
      report.total_recognized, report.total_recognized + report.total_unrecognized);
  return report;
}

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

int64_t ParseCount(std::string_view field, size_t line_no) {
  field = Trim(field);
  int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() ||
      value < 0) {
    throw Error(ErrorCode::kMalformedCsv,
                "line " + std::to_string(line_no) + ": '" + std::string(field) +
                    "' is not a non-negative integer");
  }
  return value;
}

}  // namespace

std::vector<RecognitionRecord> ParseRecognitionCsv(std::string_view text) {
  std::vector<RecognitionRecord> records;
  size_t line_no = 0;
  while (!text.empty()) {
    const size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    line = Trim(line);
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    size_t start = 0;
    for (size_t comma; (comma = line.find(',', start)) != std::string_view::npos;
         start = comma + 1) {
      fields.push_back(line.substr(start, comma - start));
    }
    fields.push_back(line.substr(start));
    if (records.empty() && Trim(fields[0]) == "user_label") continue;
    if (fields.size() != 3) {
      throw Error(ErrorCode::kMalformedCsv,
                  "line " + std::to_string(line_no) + ": expected 3 fields, got " +
                      std::to_string(fields.size()));
    }
    records.push_back({std::string(Trim(fields[0])), ParseCount(fields[1], line_no),
                       ParseCount(fields[2], line_no)});
  }
  return records;
}

std::string FormatTenths(int64_t tenths) {
  const char* sign = tenths < 0 ? "-" : "";
  const int64_t a = tenths < 0 ? -tenths : tenths;
  return sign + std::to_string(a / 10) + "." + std::to_string(a % 10);
}

}  // namespace midair
