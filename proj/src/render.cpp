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

#include "scs/render.hpp"

#include <atomic>

#include "scs/parallel.hpp"

namespace scs {

namespace {

std::atomic<std::uint64_t> g_render_passes{0};

}  // namespace

std::uint64_t total_render_passes() { return g_render_passes.load(); }

FaceImage render_face(const Scene& scene, const Point3d& center, Face face, int resolution) {
  if (resolution < 2) throw Error(ErrorKind::kInputDomain, "cube face resolution must be >= 2");
  FaceImage image;
  image.face = face;
  image.resolution = resolution;
  const auto texels = static_cast<std::size_t>(resolution) * resolution;
  image.color.resize(texels);
  image.depth.resize(texels);
  parallel_for(resolution, [&](int j) {
    for (int i = 0; i < resolution; ++i) {
      const Vector3d dir =
          texel_direction(face, (i + 0.5) / resolution, (j + 0.5) / resolution).normalized();
      double depth;
      const Color c = trace(scene, center, dir, &depth);
      const auto index = static_cast<std::size_t>(j) * resolution + i;
      image.color[index] = quantize(c);
      image.depth[index] = depth;
    }
  });
  ++g_render_passes;
  return image;
}

CubemapSet render_cubemaps(const Scene& scene, const HeadPose& head, const FaceSet& faces, int resolution) {
  if (faces.empty()) throw Error(ErrorKind::kInputDomain, "render_cubemaps: empty face set");
  CubemapSet set;
  set.resolution = resolution;
  set.centers = cubemap_centers(head);
  for (const CubeFace& cf : faces) {
    set.faces.emplace(cf, render_face(scene, set.center(cf.cubemap), cf.face, resolution));
  }
  return set;
}

Image render_planar(const Scene& scene, const Frustum& frustum, int width, int height) {
  if (width < 1 || height < 1) throw Error(ErrorKind::kInputDomain, "planar image must be at least 1x1");
  if (!(frustum.near_distance > 0) || !(frustum.right > frustum.left) || !(frustum.top > frustum.bottom)) {
    throw Error(ErrorKind::kDegenerateFrustum, "render_planar: degenerate frustum");
  }
  Image image(width, height);
  const Vector3d forward = frustum.forward();
  parallel_for(height, [&](int j) {
    const double y = frustum.bottom + (j + 0.5) * (frustum.top - frustum.bottom) / height;
    for (int i = 0; i < width; ++i) {
      const double x = frustum.left + (i + 0.5) * (frustum.right - frustum.left) / width;
      const Vector3d dir =
          (x * frustum.right_axis + y * frustum.up_axis + frustum.near_distance * forward).normalized();
      image.at(i, j) = quantize(trace(scene, frustum.eye, dir));
    }
  });
  ++g_render_passes;
  return image;
}

Image render_oracle(const Scene& scene, const HeadPose& head, const ScreenConfig& screen, Eye eye,
                    OracleOptions options) {
  screen.validate();
  head.validate(screen);
  const int ss = std::max(1, options.supersample);
  Image image(screen.canvas_width, screen.canvas_height);
  parallel_for(screen.canvas_height, [&](int y) {
    for (int x = 0; x < screen.canvas_width; ++x) {
      Color sum = Color::Zero();
      for (int sy = 0; sy < ss; ++sy) {
        for (int sx = 0; sx < ss; ++sx) {
          const Point3d fragment = surface_point(x + (sx + 0.5) / ss, y + (sy + 0.5) / ss, screen);
          const Vector3d view_dir = (fragment - head.position).normalized();
          const Point3d origin = eye_position(head, view_dir, eye);
          sum += trace(scene, origin, (fragment - origin).normalized());
        }
      }
      image.at(x, y) = quantize(sum / (ss * ss));
    }
  });
  return image;
}

}  // namespace scs
