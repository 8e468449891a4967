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

#include "scs/projection.hpp"

#include <cmath>

#include "scs/parallel.hpp"

namespace scs {

namespace {

Rgb8 lookup_nearest(const FaceImage& face, double u, double v) {
  const int res = face.resolution;
  const int i = std::min(static_cast<int>(u * res), res - 1);
  const int j = std::min(static_cast<int>(v * res), res - 1);
  return face.texel(i, j);
}

Rgb8 lookup_bilinear(const FaceImage& face, double u, double v) {
  const int res = face.resolution;
  const double fx = std::clamp(u * res - 0.5, 0.0, res - 1.0);
  const double fy = std::clamp(v * res - 0.5, 0.0, res - 1.0);
  const int i0 = static_cast<int>(fx);
  const int j0 = static_cast<int>(fy);
  const int i1 = std::min(i0 + 1, res - 1);
  const int j1 = std::min(j0 + 1, res - 1);
  const double ax = fx - i0;
  const double ay = fy - j0;
  const auto channel = [&](std::uint8_t Rgb8::*c) {
    const double top = (1 - ax) * (face.texel(i0, j0).*c) + ax * (face.texel(i1, j0).*c);
    const double bottom = (1 - ax) * (face.texel(i0, j1).*c) + ax * (face.texel(i1, j1).*c);
    return quantize_channel(((1 - ay) * top + ay * bottom) / 255.0);
  };
  return {channel(&Rgb8::r), channel(&Rgb8::g), channel(&Rgb8::b)};
}

}  // namespace

SampleTrace sample_fragment(const CubemapSet& cubemaps, const HeadPose& head, const ScreenConfig& screen, int x, int y,
                            Eye eye, SamplingOptions options) {
  const Point3d fragment = fragment_world_point(x, y, screen);
  const SampleChoice choice = choose_sample(head, fragment, eye);
  const FaceImage* face = cubemaps.find({choice.cubemap, choice.face});
  if (face == nullptr) {
    throw Error(ErrorKind::kCullingViolation, "fragment (" + std::to_string(x) + "," + std::to_string(y) +
                                                  ") needs unrendered face " +
                                                  to_string(CubeFace{choice.cubemap, choice.face}));
  }
  const auto coords = face_coords_on(choice.face, fragment - cubemaps.center(choice.cubemap));
  SampleTrace trace;
  trace.x = x;
  trace.y = y;
  trace.eye = eye;
  trace.cubemap = choice.cubemap;
  trace.face = choice.face;
  trace.u = coords.u;
  trace.v = coords.v;
  trace.color = options.bilinear ? lookup_bilinear(*face, coords.u, coords.v) : lookup_nearest(*face, coords.u, coords.v);
  return trace;
}

void sample_canvases(const CubemapSet& cubemaps, StereoCanvas& stereo, SamplingOptions options) {
  const ScreenConfig& screen = stereo.screen;
  stereo.left = Image(screen.canvas_width, screen.canvas_height);
  stereo.right = Image(screen.canvas_width, screen.canvas_height);
  parallel_for(screen.canvas_height, [&](int y) {
    for (int x = 0; x < screen.canvas_width; ++x) {
      stereo.left.at(x, y) = sample_fragment(cubemaps, stereo.head, screen, x, y, Eye::kLeft, options).color;
      stereo.right.at(x, y) = sample_fragment(cubemaps, stereo.head, screen, x, y, Eye::kRight, options).color;
    }
  });
}

ScsResult render_scs(const Scene& scene, const HeadPose& head, const ScreenConfig& screen, int cube_resolution,
                     SamplingOptions options) {
  ScsResult result;
  result.faces = visible_faces(head, screen);
  const CubemapSet cubemaps = render_cubemaps(scene, head, result.faces, cube_resolution);
  result.pass_count = cubemaps.pass_count();
  result.stereo.screen = screen;
  result.stereo.head = head;
  sample_canvases(cubemaps, result.stereo, options);
  return result;
}

ScsResult render_scs_center_mode(const Scene& scene, const ScreenConfig& screen, int cube_resolution, double ipd,
                                 SamplingOptions options) {
  return render_scs(scene, HeadPose::centered(screen, ipd), screen, cube_resolution, options);
}

Image compose(const StereoCanvas& stereo, ComposeMode mode) {
  const Image& l = stereo.left;
  const Image& r = stereo.right;
  if (l.width() != r.width() || l.height() != r.height()) {
    throw Error(ErrorKind::kInputDomain, "stereo pair dimensions differ");
  }
  switch (mode) {
    case ComposeMode::kLeftOnly: return l;
    case ComposeMode::kRightOnly: return r;
    case ComposeMode::kAnaglyph: {
      Image out(l.width(), l.height());
      for (int y = 0; y < l.height(); ++y) {
        for (int x = 0; x < l.width(); ++x) out.at(x, y) = {l.at(x, y).r, r.at(x, y).g, r.at(x, y).b};
      }
      return out;
    }
    case ComposeMode::kSideBySide: {
      Image out(2 * l.width(), l.height());
      for (int y = 0; y < l.height(); ++y) {
        for (int x = 0; x < l.width(); ++x) {
          out.at(x, y) = l.at(x, y);
          out.at(l.width() + x, y) = r.at(x, y);
        }
      }
      return out;
    }
  }
  return l;
}

}  // namespace scs
