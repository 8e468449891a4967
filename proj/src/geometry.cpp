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

#include "scs/geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace scs {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInputDomain: return "input-domain";
    case ErrorKind::kDegenerateDirection: return "degenerate-direction";
    case ErrorKind::kDegenerateFrustum: return "degenerate-frustum";
    case ErrorKind::kInvalidHead: return "invalid-head";
    case ErrorKind::kSceneParse: return "scene-parse";
    case ErrorKind::kCullingViolation: return "culling-violation";
    case ErrorKind::kProbeMiss: return "probe-miss";
    case ErrorKind::kIo: return "io";
  }
  return "unknown";
}

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

bool finite(const Eigen::Vector3d& v) { return v.allFinite(); }

}  // namespace

void ScreenConfig::validate() const {
  if (!(radius > 0) || !std::isfinite(radius)) {
    throw Error(ErrorKind::kInputDomain, "screen radius must be positive");
  }
  if (!(height > 0) || !std::isfinite(height)) {
    throw Error(ErrorKind::kInputDomain, "screen height must be positive");
  }
  if (!(arc_degrees > 0 && arc_degrees <= 360)) {
    throw Error(ErrorKind::kInputDomain, "screen arc must be in (0, 360] degrees");
  }
  if (canvas_width < 1 || canvas_height < 1) {
    throw Error(ErrorKind::kInputDomain, "canvas dimensions must be at least 1");
  }
}

void HeadPose::validate(const ScreenConfig& screen, double margin) const {
  if (!finite(position) || !std::isfinite(ipd)) {
    throw Error(ErrorKind::kInvalidHead, "head pose must be finite");
  }
  if (ipd < 0) throw Error(ErrorKind::kInvalidHead, "ipd must be non-negative");
  const double horizontal = std::hypot(position.x(), position.z());
  const double limit = screen.radius - ipd / 2 - margin;
  if (horizontal > limit) {
    std::ostringstream msg;
    msg << "head is " << horizontal << " m from the axis; limit is " << limit << " m";
    throw Error(ErrorKind::kInvalidHead, msg.str());
  }
  if (position.y() < 0 || position.y() > screen.height) {
    throw Error(ErrorKind::kInvalidHead, "head height outside [0, screen height]");
  }
}

std::string_view to_string(Cardinal c) {
  switch (c) {
    case Cardinal::kNorth: return "North";
    case Cardinal::kEast: return "East";
    case Cardinal::kSouth: return "South";
    case Cardinal::kWest: return "West";
  }
  return "?";
}

std::string_view to_string(Face f) {
  switch (f) {
    case Face::kPosX: return "+X";
    case Face::kNegX: return "-X";
    case Face::kPosY: return "+Y";
    case Face::kNegY: return "-Y";
    case Face::kPosZ: return "+Z";
    case Face::kNegZ: return "-Z";
  }
  return "?";
}

std::string_view to_string(Eye e) {
  switch (e) {
    case Eye::kLeft: return "left";
    case Eye::kRight: return "right";
    case Eye::kCenter: return "center";
  }
  return "?";
}

Cardinal parse_cardinal(std::string_view name) {
  for (Cardinal c : kCardinals) {
    if (to_string(c) == name) return c;
  }
  throw Error(ErrorKind::kInputDomain, "unknown cubemap name: " + std::string(name));
}

Face parse_face(std::string_view name) {
  for (Face f : kFaces) {
    if (to_string(f) == name) return f;
  }
  throw Error(ErrorKind::kInputDomain, "unknown face name: " + std::string(name));
}

std::string to_string(const CubeFace& cf) {
  std::string out(to_string(cf.cubemap));
  out += '.';
  out += to_string(cf.face);
  return out;
}

double canvas_to_azimuth(int x, const ScreenConfig& screen) {
  if (x < 0 || x >= screen.canvas_width) {
    throw Error(ErrorKind::kInputDomain, "canvas column out of range: " + std::to_string(x));
  }
  return -screen.arc_degrees / 2 + (x + 0.5) * screen.degrees_per_column();
}

int azimuth_to_canvas(double azimuth_degrees, const ScreenConfig& screen) {
  const double column = (azimuth_degrees + screen.arc_degrees / 2) / screen.degrees_per_column();
  if (!(column >= 0 && column < screen.canvas_width)) {
    throw Error(ErrorKind::kInputDomain, "azimuth outside the screen arc");
  }
  return static_cast<int>(std::floor(column));
}

Point3d surface_point(double column, double row, const ScreenConfig& screen) {
  const double theta = (-screen.arc_degrees / 2 + column * screen.degrees_per_column()) * kDegToRad;
  const double y = row * screen.height / screen.canvas_height;
  return {screen.radius * std::sin(theta), y, screen.radius * std::cos(theta)};
}

Point3d fragment_world_point(int x, int y, const ScreenConfig& screen) {
  if (x < 0 || x >= screen.canvas_width || y < 0 || y >= screen.canvas_height) {
    throw Error(ErrorKind::kInputDomain, "fragment out of canvas bounds");
  }
  return surface_point(x + 0.5, y + 0.5, screen);
}

Point3d eye_position(const HeadPose& head, const Vector3d& view_dir, Eye eye) {
  if (eye == Eye::kCenter) return head.position;
  const auto eyes = eye_positions(head, view_dir);
  return eye == Eye::kLeft ? eyes.left : eyes.right;
}

CubemapCenters cubemap_centers(const HeadPose& head) {
  CubemapCenters centers;
  for (Cardinal c : kCardinals) {
    centers[static_cast<int>(c)] = head.position + (head.ipd / 2) * cardinal_axis<double>(c);
  }
  return centers;
}

SampleChoice choose_sample(const HeadPose& head, const Point3d& surface, Eye eye) {
  SampleChoice choice;
  choice.view_dir = (surface - head.position).normalized();
  choice.eye = eye_position(head, choice.view_dir, eye);
  choice.cubemap = select_cubemap(choice.eye - head.position);
  choice.face = dominant_face(choice.view_dir);
  return choice;
}

FaceSet visible_faces(const HeadPose& head, const ScreenConfig& screen) {
  screen.validate();
  head.validate(screen);

  // Along a column the horizontal direction is fixed, so the cubemap is fixed
  // and the elevation is monotone in the row: the extreme rows decide +/-Y and
  // the rows straddling head height decide whether the side face is reached.
  const double center_row = head.position.y() * screen.canvas_height / screen.height - 0.5;
  const int last_row = screen.canvas_height - 1;
  const std::array<int, 4> rows = {
      0, last_row, std::clamp(static_cast<int>(std::floor(center_row)), 0, last_row),
      std::clamp(static_cast<int>(std::ceil(center_row)), 0, last_row)};

  FaceSet faces;
  for (int x = 0; x < screen.canvas_width; ++x) {
    for (Eye eye : {Eye::kLeft, Eye::kRight}) {
      for (int y : rows) {
        const Point3d surface = fragment_world_point(x, y, screen);
        const SampleChoice choice = choose_sample(head, surface, eye);
        dilated_faces(surface - head.position, kFaceBoundaryEpsilon, faces, choice.cubemap);
      }
    }
  }
  return faces;
}

FaceSet all_faces() {
  FaceSet faces;
  for (Cardinal c : kCardinals) {
    for (Face f : kFaces) faces.insert({c, f});
  }
  return faces;
}

Frustum off_axis_frustum(const Point3d& eye, const ScreenRect& rect, double near_distance, double far_distance) {
  if (!(near_distance > 0) || !(far_distance > near_distance)) {
    throw Error(ErrorKind::kDegenerateFrustum, "frustum requires 0 < near < far");
  }
  const Vector3d right_edge = rect.lower_right - rect.lower_left;
  const Vector3d up_edge = rect.upper_left - rect.lower_left;
  if (right_edge.norm() == 0 || up_edge.norm() == 0) {
    throw Error(ErrorKind::kDegenerateFrustum, "screen rectangle has a zero-length edge");
  }
  Frustum f;
  f.eye = eye;
  f.near_distance = near_distance;
  f.far_distance = far_distance;
  f.right_axis = right_edge.normalized();
  f.up_axis = (up_edge - up_edge.dot(f.right_axis) * f.right_axis);
  if (f.up_axis.norm() <= 1e-12 * up_edge.norm()) {
    throw Error(ErrorKind::kDegenerateFrustum, "screen rectangle edges are parallel");
  }
  f.up_axis.normalize();
  f.normal = f.up_axis.cross(f.right_axis);

  const double scale = std::max({1.0, right_edge.norm(), up_edge.norm()});
  if (std::abs((rect.upper_right - rect.lower_left).dot(f.normal)) > 1e-9 * scale) {
    throw Error(ErrorKind::kDegenerateFrustum, "screen rectangle corners are not coplanar");
  }

  const Vector3d to_ll = rect.lower_left - eye;
  const Vector3d to_lr = rect.lower_right - eye;
  const Vector3d to_ul = rect.upper_left - eye;
  const double distance = -to_ll.dot(f.normal);
  if (std::abs(distance) <= 1e-12 * scale) {
    throw Error(ErrorKind::kDegenerateFrustum, "eye lies on the screen plane");
  }
  if (distance < 0) {
    throw Error(ErrorKind::kDegenerateFrustum, "eye is behind the screen plane");
  }
  const double k = near_distance / distance;
  f.left = f.right_axis.dot(to_ll) * k;
  f.right = f.right_axis.dot(to_lr) * k;
  f.bottom = f.up_axis.dot(to_ll) * k;
  f.top = f.up_axis.dot(to_ul) * k;
  return f;
}

Eigen::Vector3d project_to_ndc(const Frustum& frustum, const Point3d& point) {
  const Vector3d rel = point - frustum.eye;
  const double depth = rel.dot(frustum.forward());
  const double x = rel.dot(frustum.right_axis) * frustum.near_distance / depth;
  const double y = rel.dot(frustum.up_axis) * frustum.near_distance / depth;
  return {(2 * x - (frustum.right + frustum.left)) / (frustum.right - frustum.left),
          (2 * y - (frustum.top + frustum.bottom)) / (frustum.top - frustum.bottom), depth};
}

}  // namespace scs
