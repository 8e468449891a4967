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

#include <utility>

#include "scs/geometry.hpp"
#include "scs/projection.hpp"
#include "scs/scene.hpp"

namespace scs {

/// Slit-stitching baseline: the arc is cut into `slit_count` equal azimuth
/// ranges, each approximated by the planar chord between its end points.
struct StitchConfig {
  int slit_count = 32;

  /// Planar render width of one slit: ceil(canvas_width / slit_count).
  int slit_width(const ScreenConfig& screen) const {
    return (screen.canvas_width + slit_count - 1) / slit_count;
  }
  void validate() const;
};

/// Azimuth range [begin, end) of slit `index`, degrees.
std::pair<double, double> slit_azimuths(int index, const StitchConfig& config, const ScreenConfig& screen);

/// Chord rectangle between the slit's boundary azimuths, floor to ceiling.
ScreenRect slit_geometry(int index, const StitchConfig& config, const ScreenConfig& screen);

/// Slit that canvas column `x` is pasted from, and the planar column within it.
std::pair<int, int> slit_column(int x, const StitchConfig& config, const ScreenConfig& screen);

struct StitchResult {
  /// For mono renders both images hold the head-centered view.
  StereoCanvas canvas;
  bool stereo = false;
  int pass_count = 0;
};

StitchResult render_stitch(const Scene& scene, const HeadPose& head, const ScreenConfig& screen,
                           const StitchConfig& config, bool stereo);

}  // namespace scs
