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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "scs/geometry.hpp"
#include "scs/image.hpp"
#include "scs/projection.hpp"
#include "scs/scene.hpp"

namespace scs {

/// Metrics over channel values normalized to [0,1].
struct DiffReport {
  double rmse = 0;
  double mean_abs = 0;
  double max_abs = 0;
  double differing_pixel_fraction = 0;
};

DiffReport image_diff(const Image& a, const Image& b);

/// Per-pixel max channel difference as a grayscale image.
Image diff_heat_image(const Image& a, const Image& b);

/// Centroid column of pixels exactly equal to `marker_color` in the left
/// image minus the same in the right image. Throws kProbeMiss if either eye
/// has no matching pixel.
double disparity_probe(const StereoCanvas& stereo, const Rgb8& marker_color);

enum class BenchMode { kScs, kStitch, kOracle };

std::string_view to_string(BenchMode mode);
BenchMode parse_bench_mode(std::string_view name);

struct BenchSpec {
  std::vector<HeadPose> poses;
  std::vector<BenchMode> modes;
  /// Cube resolutions swept by SCS rows.
  std::vector<int> cube_resolutions = {256};
  /// Slit counts swept by stitch rows (always stereo).
  std::vector<int> slit_counts = {32};
  /// Oracle samples per pixel axis for the reference image.
  int oracle_supersample = 1;
};

struct BenchRow {
  BenchMode mode = BenchMode::kScs;
  HeadPose head;
  int cube_resolution = 0;  // 0 when not applicable
  int slit_count = 0;       // 0 when not applicable
  int pass_count = 0;
  double wall_ms = 0;
  /// Side-by-side stereo pair against the oracle's side-by-side pair.
  DiffReport diff;
};

/// One row per (pose, mode, applicable resolution), in that nesting order.
std::vector<BenchRow> bench_sweep(const Scene& scene, const ScreenConfig& screen, const BenchSpec& spec);

inline constexpr std::string_view kBenchCsvHeader =
    "mode,head_x,head_y,head_z,ipd,cube_res,slits,passes,wall_ms,rmse,mean_abs,max_abs";

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace scs
