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

#include <bit>
#include <cstdio>
#include <cstring>

#include "midair/mesher.h"

namespace midair {

namespace {

void AppendLe(std::string& out, const void* data, size_t n) {
  const auto* bytes = static_cast<const char*>(data);
  if constexpr (std::endian::native == std::endian::little) {
    out.append(bytes, n);
  } else {
    for (size_t i = 0; i < n; ++i) out.push_back(bytes[n - 1 - i]);
  }
}

void AppendFloat(std::string& out, double v) {
  const float f = static_cast<float>(v);
  AppendLe(out, &f, sizeof(f));
}

std::string ToObj(const TriangleMesh& mesh) {
  std::string out = "# midair mesh\n";
  char line[128];
  for (const Vec3& v : mesh.vertices) {
    std::snprintf(line, sizeof(line), "v %.9g %.9g %.9g\n", v.x(), v.y(), v.z());
    out += line;
  }
  for (const auto& t : mesh.triangles) {
    std::snprintf(line, sizeof(line), "f %u %u %u\n", t[0] + 1, t[1] + 1, t[2] + 1);
    out += line;
  }
  return out;
}

std::string ToStl(const TriangleMesh& mesh) {
  std::string out;
  out.reserve(84 + 50 * mesh.triangles.size());
  char header[80] = {};
  std::strncpy(header, "midair binary STL", sizeof(header));
  out.append(header, sizeof(header));
  const auto count = static_cast<uint32_t>(mesh.triangles.size());
  AppendLe(out, &count, sizeof(count));
  for (const auto& t : mesh.triangles) {
    const Vec3& a = mesh.vertices[t[0]];
    const Vec3& b = mesh.vertices[t[1]];
    const Vec3& c = mesh.vertices[t[2]];
    Vec3 n = (b - a).cross(c - a);
    const double len = n.norm();
    n = len > 0.0 ? Vec3(n / len) : Vec3::Zero();
    for (const Vec3* v : std::initializer_list<const Vec3*>{&n, &a, &b, &c}) {
      AppendFloat(out, v->x());
      AppendFloat(out, v->y());
      AppendFloat(out, v->z());
    }
    const uint16_t attributes = 0;
    AppendLe(out, &attributes, sizeof(attributes));
  }
  return out;
}

}  // namespace

std::string ExportMesh(const TriangleMesh& mesh, MeshFormat format) {
  return format == MeshFormat::kObj ? ToObj(mesh) : ToStl(mesh);
}

}  // namespace midair
