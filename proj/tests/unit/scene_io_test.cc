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

#include "midair/scene_io.h"

#include <cmath>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "midair/errors.h"
#include "test_support.h"

using namespace midair;
using namespace midair::testing;

namespace {

ErrorCode ParseCode(const std::string& text) {
  try {
    ParseScene(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed: " << text;
  return ErrorCode::kScript;
}

const char kSphere[] =
    R"({"name": "", "primitives": [{"id": "s", "kind": "sphere", "params": {"radius": 1}}],
        "root": {"leaf": "s"}})";

}  // namespace

TEST(ParseScene, MinimalSphere) {
  const Scene s = ParseScene(kSphere);
  EXPECT_EQ(s.name(), "");
  ASSERT_EQ(s.primitives().size(), 1u);
  EXPECT_TRUE(s.root().is_leaf());
  const Primitive& p = s.primitive("s");
  EXPECT_EQ(std::get<Sphere>(p.shape).radius, 1.0);
  EXPECT_EQ(p.pose.translation, Vec3::Zero());
  EXPECT_EQ(p.pose.scale, Vec3::Ones());
  EXPECT_EQ(p.pose.rotation, Rotation());
}

TEST(ParseScene, SyntaxErrors) {
  EXPECT_EQ(ParseCode(""), ErrorCode::kSyntax);
  EXPECT_EQ(ParseCode("{"), ErrorCode::kSyntax);
  EXPECT_EQ(ParseCode(R"({"name": "x",})"), ErrorCode::kSyntax);
}

TEST(ParseScene, SchemaErrors) {
  EXPECT_EQ(ParseCode("[]"), ErrorCode::kSchema);
  EXPECT_EQ(ParseCode(R"({"name": "x", "primitives": [], "root": {"leaf": "s"}})"),
            ErrorCode::kSchema);
  // Unknown top-level key.
  EXPECT_EQ(ParseCode(R"({"name": "", "extra": 1, "primitives": [{"id": "s", "kind": "sphere",
      "params": {"radius": 1}}], "root": {"leaf": "s"}})"),
            ErrorCode::kSchema);
  // Unknown primitive kind.
  EXPECT_EQ(ParseCode(R"({"name": "", "primitives": [{"id": "s", "kind": "torus",
      "params": {"radius": 1}}], "root": {"leaf": "s"}})"),
            ErrorCode::kSchema);
  // Param belonging to another kind.
  EXPECT_EQ(ParseCode(R"({"name": "", "primitives": [{"id": "s", "kind": "sphere",
      "params": {"radius": 1, "height": 2}}], "root": {"leaf": "s"}})"),
            ErrorCode::kSchema);
  // Difference with three children.
  EXPECT_EQ(ParseCode(R"({"name": "", "primitives": [
      {"id": "a", "kind": "sphere", "params": {"radius": 1}},
      {"id": "b", "kind": "sphere", "params": {"radius": 1}},
      {"id": "c", "kind": "sphere", "params": {"radius": 1}}],
      "root": {"op": "difference", "id": "d",
               "children": [{"leaf": "a"}, {"leaf": "b"}, {"leaf": "c"}]}})"),
            ErrorCode::kSchema);
  // Unknown operator.
  EXPECT_EQ(ParseCode(R"({"name": "", "primitives": [
      {"id": "a", "kind": "sphere", "params": {"radius": 1}},
      {"id": "b", "kind": "sphere", "params": {"radius": 1}}],
      "root": {"op": "xor", "id": "d", "children": [{"leaf": "a"}, {"leaf": "b"}]}})"),
            ErrorCode::kSchema);
  // Dangling leaf.
  EXPECT_EQ(ParseCode(R"({"name": "", "primitives": [
      {"id": "a", "kind": "sphere", "params": {"radius": 1}}], "root": {"leaf": "b"}})"),
            ErrorCode::kSchema);
  // Node mixing leaf and op keys.
  EXPECT_EQ(ParseCode(R"({"name": "", "primitives": [
      {"id": "a", "kind": "sphere", "params": {"radius": 1}}],
      "root": {"leaf": "a", "op": "union"}})"),
            ErrorCode::kSchema);
  // Wrong vector length.
  EXPECT_EQ(ParseCode(R"({"name": "", "primitives": [{"id": "b", "kind": "box",
      "params": {"half_extents": [1, 1]}}], "root": {"leaf": "b"}})"),
            ErrorCode::kSchema);
}

TEST(ParseScene, ValueErrors) {
  EXPECT_EQ(ParseCode(R"({"name": "", "primitives": [{"id": "s", "kind": "sphere",
      "params": {"radius": -1}}], "root": {"leaf": "s"}})"),
            ErrorCode::kValue);
  EXPECT_EQ(ParseCode(R"({"name": "", "primitives": [{"id": "b", "kind": "box",
      "params": {"half_extents": [1, 0, 1]}}], "root": {"leaf": "b"}})"),
            ErrorCode::kValue);
  EXPECT_EQ(ParseCode(R"({"name": "", "primitives": [{"id": "s", "kind": "sphere",
      "params": {"radius": 1}, "pose": {"rotation": [0, 0, 0, 0]}}], "root": {"leaf": "s"}})"),
            ErrorCode::kValue);
  EXPECT_EQ(ParseCode(R"({"name": "", "primitives": [{"id": "s", "kind": "sphere",
      "params": {"radius": 1}, "pose": {"scale": [1, 1e7, 1]}}], "root": {"leaf": "s"}})"),
            ErrorCode::kValue);
  EXPECT_EQ(ParseCode(R"({"name": "", "primitives": [{"id": "s", "kind": "sphere",
      "params": {"radius": 1e999}}], "root": {"leaf": "s"}})"),
            ErrorCode::kValue);
}

TEST(ParseScene, NormalizesRotation) {
  const Scene s = ParseScene(R"({"name": "", "primitives": [{"id": "s", "kind": "sphere",
      "params": {"radius": 1}, "pose": {"rotation": [2, 0, 2, 0]}}], "root": {"leaf": "s"}})");
  EXPECT_NEAR(s.primitive("s").pose.rotation.quaternion().norm(), 1.0, 1e-12);
}

TEST(SerializeScene, FixturesRoundTrip) {
  for (const auto& name : StudyObjects()) {
    const Scene s = LoadFixture(name);
    const std::string text = SerializeScene(s);
    const Scene back = ParseScene(text);
    EXPECT_TRUE(Equivalent(s, back)) << name;
    // A second trip is byte-stable.
    EXPECT_EQ(SerializeScene(back), text) << name;
  }
}

TEST(SerializeScene, Deterministic) {
  const Scene s = ParseScene(kSphere);
  const std::string a = SerializeScene(s);
  EXPECT_EQ(a, SerializeScene(ParseScene(kSphere)));
  EXPECT_EQ(a.back(), '\n');
  // Keys appear sorted.
  const auto j = nlohmann::json::parse(a);
  EXPECT_EQ(j.begin().key(), "name");
  EXPECT_LT(a.find("\"name\""), a.find("\"primitives\""));
  EXPECT_LT(a.find("\"primitives\""), a.find("\"root\""));
}

TEST(SerializeScene, RotatedBoxQuaternionIsUnitAndCanonical) {
  Primitive p = MakeBox("b", Vec3(1, 2, 3));
  p.pose.rotation = Rotation(-std::cos(M_PI / 4), 0, -std::sin(M_PI / 4), 0);
  const auto j = nlohmann::json::parse(SerializeScene(SingleScene(p)));
  const auto& q = j["primitives"][0]["pose"]["rotation"];
  const double norm = std::sqrt(std::pow(q[0].get<double>(), 2) + std::pow(q[1].get<double>(), 2) +
                                std::pow(q[2].get<double>(), 2) + std::pow(q[3].get<double>(), 2));
  EXPECT_NEAR(norm, 1.0, 1e-9);
  EXPECT_GE(q[0].get<double>(), 0.0);
}

TEST(SerializeScene, PreservesLabels) {
  const Scene s = LoadFixture("object1");
  const Scene back = ParseScene(SerializeScene(s));
  EXPECT_EQ(back.primitive("ball").label, std::optional<std::string>("circle"));
  EXPECT_EQ(back.primitive("plate").label, std::nullopt);
}

TEST(RoundForOutput, NineSignificantDigits) {
  EXPECT_EQ(RoundForOutput(0.1234567891234), 0.123456789);
  EXPECT_EQ(RoundForOutput(123456789123.0), 123456789000.0);
  EXPECT_EQ(RoundForOutput(1e-13), 0.0);
  EXPECT_FALSE(std::signbit(RoundForOutput(-1e-13)));
}

TEST(LoadSceneFile, MissingFile) {
  try {
    LoadSceneFile("/nonexistent/scene.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSyntax);
  }
}
