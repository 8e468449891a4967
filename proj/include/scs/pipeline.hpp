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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scs/geometry.hpp"
#include "scs/image.hpp"
#include "scs/projection.hpp"
#include "scs/scene.hpp"

namespace scs {

enum class RenderMode { kScs, kCenter, kStitch, kOracle, kDiff };
enum class OutputKind { kLeft, kRight, kBoth, kAnaglyph, kSideBySide };

std::string_view to_string(RenderMode mode);
RenderMode parse_render_mode(std::string_view name);
std::string_view to_string(OutputKind kind);
OutputKind parse_output_kind(std::string_view name);

/// Everything needed to produce one stereo frame, shared by the CLI and the
/// frame service.
struct RenderJob {
  RenderMode mode = RenderMode::kScs;
  HeadPose head;
  ScreenConfig screen;
  int cube_resolution = 512;
  int slit_count = 32;
  bool stitch_stereo = true;
  int oracle_supersample = 1;
  bool bilinear = false;
};

struct RenderOutput {
  StereoCanvas canvas;
  int pass_count = 0;
  double wall_ms = 0;
};

/// Diff mode renders SCS and the oracle and returns per-eye heat images.
RenderOutput run_render_job(const Scene& scene, const RenderJob& job);

/// Images to emit for `kind`, labelled "left"/"right" for kBoth and by the
/// kind name otherwise.
std::vector<std::pair<std::string, Image>> select_output(const StereoCanvas& canvas, OutputKind kind);

}  // namespace scs
