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

#include "scs/stitch.hpp"

#include <cmath>
#include <numbers>

#include "scs/render.hpp"

namespace scs {

namespace {

constexpr double kSlitNear = 0.01;
constexpr double kSlitFar = 1000.0;

Point3d cylinder_point(double azimuth_degrees, double y, double radius) {
  const double theta = azimuth_degrees * std::numbers::pi / 180.0;
  return {radius * std::sin(theta), y, radius * std::cos(theta)};
}

}  // namespace

void StitchConfig::validate() const {
  if (slit_count < 1) throw Error(ErrorKind::kInputDomain, "slit count must be >= 1");
}

std::pair<double, double> slit_azimuths(int index, const StitchConfig& config, const ScreenConfig& screen) {
  config.validate();
  if (index < 0 || index >= config.slit_count) {
    throw Error(ErrorKind::kInputDomain, "slit index out of range: " + std::to_string(index));
  }
  const double span = screen.arc_degrees / config.slit_count;
  const double begin = -screen.arc_degrees / 2 + index * span;
  return {begin, begin + span};
}

ScreenRect slit_geometry(int index, const StitchConfig& config, const ScreenConfig& screen) {
  const auto [begin, end] = slit_azimuths(index, config, screen);
  return {cylinder_point(begin, 0, screen.radius), cylinder_point(end, 0, screen.radius),
          cylinder_point(end, screen.height, screen.radius), cylinder_point(begin, screen.height, screen.radius)};
}

std::pair<int, int> slit_column(int x, const StitchConfig& config, const ScreenConfig& screen) {
  const double span = screen.arc_degrees / config.slit_count;
  const double offset = canvas_to_azimuth(x, screen) + screen.arc_degrees / 2;
  const int slit = std::clamp(static_cast<int>(std::floor(offset / span)), 0, config.slit_count - 1);
  const double s = (offset - slit * span) / span;
  const int width = config.slit_width(screen);
  return {slit, std::clamp(static_cast<int>(std::floor(s * width)), 0, width - 1)};
}

StitchResult render_stitch(const Scene& scene, const HeadPose& head, const ScreenConfig& screen,
                           const StitchConfig& config, bool stereo) {
  screen.validate();
  config.validate();
  head.validate(screen);

  StitchResult result;
  result.stereo = stereo;
  result.canvas.screen = screen;
  result.canvas.head = head;
  result.canvas.left = Image(screen.canvas_width, screen.canvas_height);
  result.canvas.right = Image(screen.canvas_width, screen.canvas_height);

  std::vector<std::vector<std::pair<int, int>>> columns(config.slit_count);
  for (int x = 0; x < screen.canvas_width; ++x) {
    const auto [slit, planar_x] = slit_column(x, config, screen);
    columns[slit].emplace_back(x, planar_x);
  }

  const int width = config.slit_width(screen);
  for (int slit = 0; slit < config.slit_count; ++slit) {
    const ScreenRect rect = slit_geometry(slit, config, screen);
    const auto [begin, end] = slit_azimuths(slit, config, screen);
    const Vector3d view_dir = cylinder_point((begin + end) / 2, head.position.y(), screen.radius) - head.position;

    const auto paste = [&](Eye eye, Image& target) {
      const Frustum frustum = off_axis_frustum(eye_position(head, view_dir, eye), rect, kSlitNear, kSlitFar);
      const Image planar = render_planar(scene, frustum, width, screen.canvas_height);
      ++result.pass_count;
      for (const auto& [x, planar_x] : columns[slit]) {
        for (int y = 0; y < screen.canvas_height; ++y) target.at(x, y) = planar.at(planar_x, y);
      }
    };
    if (stereo) {
      paste(Eye::kLeft, result.canvas.left);
      paste(Eye::kRight, result.canvas.right);
    } else {
      paste(Eye::kCenter, result.canvas.left);
    }
  }
  if (!stereo) result.canvas.right = result.canvas.left;
  return result;
}

}  // namespace scs
