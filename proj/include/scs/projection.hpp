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

#include "scs/geometry.hpp"
#include "scs/image.hpp"
#include "scs/render.hpp"
#include "scs/scene.hpp"

namespace scs {

struct StereoCanvas {
  Image left;
  Image right;
  ScreenConfig screen;
  HeadPose head;
};

/// Which cubemap texel a canvas fragment was filled from.
struct SampleTrace {
  int x = 0;
  int y = 0;
  Eye eye = Eye::kLeft;
  Cardinal cubemap = Cardinal::kNorth;
  Face face = Face::kPosX;
  double u = 0;
  double v = 0;
  Rgb8 color;
};

struct SamplingOptions {
  bool bilinear = false;
};

/// Samples one fragment of one eye from the cubemaps.
///
/// The cubemap is the one whose center is nearest the eye estimated from the
/// head-to-fragment direction. The face is the one that direction falls in;
/// inside that face the texel is addressed by the ray from the cubemap center
/// to the fragment's point on the screen, so the image stays attached to the
/// physical surface as the head moves. Throws kCullingViolation when the face
/// was not rendered.
SampleTrace sample_fragment(const CubemapSet& cubemaps, const HeadPose& head, const ScreenConfig& screen, int x, int y,
                            Eye eye, SamplingOptions options = {});

struct ScsResult {
  StereoCanvas stereo;
  FaceSet faces;
  int pass_count = 0;
};

ScsResult render_scs(const Scene& scene, const HeadPose& head, const ScreenConfig& screen, int cube_resolution,
                     SamplingOptions options = {});

/// Multi-user approximation: the head is pinned to the cylinder center at
/// half the screen height.
ScsResult render_scs_center_mode(const Scene& scene, const ScreenConfig& screen, int cube_resolution,
                                 double ipd = kDefaultIpd, SamplingOptions options = {});

/// Fills both canvases of `stereo` from an already rendered cubemap set.
void sample_canvases(const CubemapSet& cubemaps, StereoCanvas& stereo, SamplingOptions options = {});

enum class ComposeMode { kAnaglyph, kSideBySide, kLeftOnly, kRightOnly };

/// Anaglyph takes red from the left eye and green/blue from the right.
Image compose(const StereoCanvas& stereo, ComposeMode mode);

}  // namespace scs
