// Copyright 2026 The SCS Projection Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "scs/types.hpp"

namespace scs {

struct Sphere {
  Point3d center;
  double radius;
  Color albedo;
};

struct Checker {
  Color albedo2;
  int cells;
};

/// Parallelogram corner + s*edge_u + t*edge_v, s,t in [0,1].
struct Quad {
  Point3d corner;
  Vector3d edge_u;
  Vector3d edge_v;
  Color albedo;
  std::optional<Checker> checker;
};

/// Unlit sphere whose color identifies it exactly in rendered images.
struct Marker {
  Point3d center;
  double radius;
  Color id_color;
};

using Primitive = std::variant<Sphere, Quad, Marker>;

struct Scene {
  Color background = Color::Zero();
  /// Direction the light travels (unit length).
  Vector3d light_dir = Vector3d(0, -1, 0);
  std::vector<Primitive> primitives;
};

struct Hit {
  double t;
  Point3d point;
  Vector3d normal;  // unit, facing the incoming ray
  Color color;      // albedo at the hit point
  bool unlit = false;
};

inline constexpr double kHitEpsilon = 1e-6;

enum class SceneErrorCode {
  kMalformed,
  kUnknownKind,
  kUnknownField,
  kNonFinite,
  kNonUnitLight,
  kInvalidValue,
};

std::string_view to_string(SceneErrorCode code);

class SceneError : public Error {
 public:
  SceneError(SceneErrorCode code, std::string path, const std::string& detail)
      : Error(ErrorKind::kSceneParse,
              std::string(to_string(code)) + " at " + (path.empty() ? "/" : path) + ": " + detail),
        code_(code),
        path_(std::move(path)) {}

  SceneErrorCode code() const noexcept { return code_; }
  /// JSON pointer to the offending field.
  const std::string& path() const noexcept { return path_; }

 private:
  SceneErrorCode code_;
  std::string path_;
};

Scene parse_scene(std::string_view text);
std::string serialize_scene(const Scene& scene);
Scene load_scene_file(const std::filesystem::path& path);

/// Nearest hit with t > kHitEpsilon; equal t resolves to the earlier primitive.
std::optional<Hit> intersect(const Scene& scene, const Point3d& origin, const Vector3d& dir);

/// Lambert with a fixed 10% ambient term; markers return their id color.
Color shade(const Hit& hit, const Scene& scene);

/// Shaded color along a ray, background on a miss.
Color trace(const Scene& scene, const Point3d& origin, const Vector3d& dir, double* depth = nullptr);

bool operator==(const Scene& a, const Scene& b);

}  // namespace scs
