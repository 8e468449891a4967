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

#include "scs/pipeline.hpp"

#include <chrono>

#include "scs/analysis.hpp"
#include "scs/render.hpp"
#include "scs/stitch.hpp"

namespace scs {

std::string_view to_string(RenderMode mode) {
  switch (mode) {
    case RenderMode::kScs: return "scs";
    case RenderMode::kCenter: return "center";
    case RenderMode::kStitch: return "stitch";
    case RenderMode::kOracle: return "oracle";
    case RenderMode::kDiff: return "diff";
  }
  return "?";
}

RenderMode parse_render_mode(std::string_view name) {
  for (RenderMode m : {RenderMode::kScs, RenderMode::kCenter, RenderMode::kStitch, RenderMode::kOracle,
                       RenderMode::kDiff}) {
    if (to_string(m) == name) return m;
  }
  throw Error(ErrorKind::kInputDomain, "unknown mode: " + std::string(name));
}

std::string_view to_string(OutputKind kind) {
  switch (kind) {
    case OutputKind::kLeft: return "left";
    case OutputKind::kRight: return "right";
    case OutputKind::kBoth: return "both";
    case OutputKind::kAnaglyph: return "anaglyph";
    case OutputKind::kSideBySide: return "sbs";
  }
  return "?";
}

OutputKind parse_output_kind(std::string_view name) {
  for (OutputKind k : {OutputKind::kLeft, OutputKind::kRight, OutputKind::kBoth, OutputKind::kAnaglyph,
                       OutputKind::kSideBySide}) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorKind::kInputDomain, "unknown output kind: " + std::string(name));
}

RenderOutput run_render_job(const Scene& scene, const RenderJob& job) {
  job.screen.validate();
  const auto start = std::chrono::steady_clock::now();
  RenderOutput out;
  const SamplingOptions sampling{job.bilinear};

  switch (job.mode) {
    case RenderMode::kScs: {
      ScsResult r = render_scs(scene, job.head, job.screen, job.cube_resolution, sampling);
      out.canvas = std::move(r.stereo);
      out.pass_count = r.pass_count;
      break;
    }
    case RenderMode::kCenter: {
      ScsResult r = render_scs_center_mode(scene, job.screen, job.cube_resolution, job.head.ipd, sampling);
      out.canvas = std::move(r.stereo);
      out.pass_count = r.pass_count;
      break;
    }
    case RenderMode::kStitch: {
      StitchResult r = render_stitch(scene, job.head, job.screen, StitchConfig{job.slit_count}, job.stitch_stereo);
      out.canvas = std::move(r.canvas);
      out.pass_count = r.pass_count;
      break;
    }
    case RenderMode::kOracle: {
      const OracleOptions options{job.oracle_supersample};
      out.canvas.screen = job.screen;
      out.canvas.head = job.head;
      out.canvas.left = render_oracle(scene, job.head, job.screen, Eye::kLeft, options);
      out.canvas.right = render_oracle(scene, job.head, job.screen, Eye::kRight, options);
      out.pass_count = 2;
      break;
    }
    case RenderMode::kDiff: {
      ScsResult r = render_scs(scene, job.head, job.screen, job.cube_resolution, sampling);
      const OracleOptions options{job.oracle_supersample};
      out.canvas.screen = job.screen;
      out.canvas.head = job.head;
      out.canvas.left = diff_heat_image(r.stereo.left, render_oracle(scene, job.head, job.screen, Eye::kLeft, options));
      out.canvas.right =
          diff_heat_image(r.stereo.right, render_oracle(scene, job.head, job.screen, Eye::kRight, options));
      out.pass_count = r.pass_count;
      break;
    }
  }
  out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::vector<std::pair<std::string, Image>> select_output(const StereoCanvas& canvas, OutputKind kind) {
  switch (kind) {
    case OutputKind::kLeft: return {{"left", canvas.left}};
    case OutputKind::kRight: return {{"right", canvas.right}};
    case OutputKind::kBoth: return {{"left", canvas.left}, {"right", canvas.right}};
    case OutputKind::kAnaglyph: return {{"anaglyph", compose(canvas, ComposeMode::kAnaglyph)}};
    case OutputKind::kSideBySide: return {{"sbs", compose(canvas, ComposeMode::kSideBySide)}};
  }
  return {};
}

}  // namespace scs
