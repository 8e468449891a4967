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

#include <cstdint>
#include <map>
#include <vector>

#include "scs/geometry.hpp"
#include "scs/image.hpp"
#include "scs/scene.hpp"

namespace scs {

/// One rendered cube face. Texel (i, j) has face coordinates
/// ((i + 0.5) / resolution, (j + 0.5) / resolution); j = 0 is the top row.
struct FaceImage {
  Face face = Face::kPosX;
  int resolution = 0;
  std::vector<Rgb8> color;
  /// Distance from the cubemap center along the texel ray; +inf on a miss.
  std::vector<double> depth;

  const Rgb8& texel(int i, int j) const { return color[static_cast<std::size_t>(j) * resolution + i]; }
  double texel_depth(int i, int j) const { return depth[static_cast<std::size_t>(j) * resolution + i]; }
};

/// Four cardinal-offset cubemaps; only requested faces are present.
struct CubemapSet {
  int resolution = 0;
  CubemapCenters centers;
  std::map<CubeFace, FaceImage> faces;

  const Point3d& center(Cardinal c) const { return centers[static_cast<int>(c)]; }
  const FaceImage* find(const CubeFace& cf) const {
    auto it = faces.find(cf);
    return it == faces.end() ? nullptr : &it->second;
  }
  int pass_count() const { return static_cast<int>(faces.size()); }
};

/// Process-wide count of render passes (render_face + render_planar calls).
std::uint64_t total_render_passes();

FaceImage render_face(const Scene& scene, const Point3d& center, Face face, int resolution);

CubemapSet render_cubemaps(const Scene& scene, const HeadPose& head, const FaceSet& faces, int resolution);

Image render_planar(const Scene& scene, const Frustum& frustum, int width, int height);

struct OracleOptions {
  /// Samples per pixel axis; 2 gives 4x supersampling.
  int supersample = 1;
};

/// Exact per-eye image on the cylinder: for each fragment F the eye is
/// estimated from the head-to-F direction and a ray is traced from the eye
/// through F.
Image render_oracle(const Scene& scene, const HeadPose& head, const ScreenConfig& screen, Eye eye,
                    OracleOptions options = {});

}  // namespace scs
