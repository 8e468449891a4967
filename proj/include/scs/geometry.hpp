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

#include <algorithm>
#include <array>
#include <cmath>
#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "scs/types.hpp"

namespace scs {

// World frame: Y up, origin on the cylinder axis at floor level. Azimuth 0
// looks along +Z ("north") and increases toward +X ("east"). Facing a
// direction d, the right-hand side is cross(up, d).

/// Physical cylindrical display and the canvas that covers it. The canvas
/// maps linearly onto arc (columns) and height (rows); row 0 is the bottom.
struct ScreenConfig {
  double radius = 3.0;
  double height = 2.3;
  double arc_degrees = 270.0;
  int canvas_width = 2700;
  int canvas_height = 230;

  static ScreenConfig cavern() { return {}; }

  double degrees_per_column() const { return arc_degrees / canvas_width; }
  void validate() const;
};

inline constexpr double kDefaultIpd = 0.064;
inline constexpr double kHeadMargin = 0.01;

struct HeadPose {
  Point3d position = Point3d(0.0, 1.15, 0.0);
  double ipd = kDefaultIpd;

  static HeadPose centered(const ScreenConfig& screen, double ipd = kDefaultIpd) {
    return {Point3d(0.0, screen.height / 2.0, 0.0), ipd};
  }

  /// Throws kInvalidHead unless the head (and every cubemap center) stays
  /// strictly inside the screen.
  void validate(const ScreenConfig& screen, double margin = kHeadMargin) const;
};

enum class Cardinal : std::uint8_t { kNorth, kEast, kSouth, kWest };
inline constexpr std::array<Cardinal, 4> kCardinals = {
    Cardinal::kNorth, Cardinal::kEast, Cardinal::kSouth, Cardinal::kWest};

/// Cube faces in tie-break priority order.
enum class Face : std::uint8_t { kPosX, kNegX, kPosY, kNegY, kPosZ, kNegZ };
inline constexpr std::array<Face, 6> kFaces = {Face::kPosX, Face::kNegX, Face::kPosY,
                                               Face::kNegY, Face::kPosZ, Face::kNegZ};

enum class Eye : std::uint8_t { kLeft, kRight, kCenter };

std::string_view to_string(Cardinal c);
std::string_view to_string(Face f);
std::string_view to_string(Eye e);
Cardinal parse_cardinal(std::string_view name);
Face parse_face(std::string_view name);

/// One (cubemap, face) render target. Ordered by cardinal then face priority.
struct CubeFace {
  Cardinal cubemap;
  Face face;
  auto operator<=>(const CubeFace&) const = default;
};

std::string to_string(const CubeFace& cf);

using FaceSet = std::set<CubeFace>;

inline constexpr int face_axis(Face f) { return static_cast<int>(f) / 2; }
inline constexpr double face_sign(Face f) { return static_cast<int>(f) % 2 == 0 ? 1.0 : -1.0; }

template <typename Scalar>
Vector3<Scalar> cardinal_axis(Cardinal c) {
  switch (c) {
    case Cardinal::kNorth: return Vector3<Scalar>(0, 0, 1);
    case Cardinal::kEast: return Vector3<Scalar>(1, 0, 0);
    case Cardinal::kSouth: return Vector3<Scalar>(0, 0, -1);
    case Cardinal::kWest: return Vector3<Scalar>(-1, 0, 0);
  }
  return Vector3<Scalar>::Zero();
}

// ---------------------------------------------------------------------------
// Canvas <-> cylinder

/// Azimuth in degrees of the center of canvas column `x`.
double canvas_to_azimuth(int x, const ScreenConfig& screen);
/// Column whose pixel footprint contains `azimuth_degrees`.
int azimuth_to_canvas(double azimuth_degrees, const ScreenConfig& screen);

/// Point on the cylinder for fractional canvas coordinates (column, row),
/// pixel centers at +0.5. No bounds check.
Point3d surface_point(double column, double row, const ScreenConfig& screen);

/// World point of the center of fragment (x, y).
Point3d fragment_world_point(int x, int y, const ScreenConfig& screen);

// ---------------------------------------------------------------------------
// Eyes and cubemap centers

template <typename Scalar>
struct EyePair {
  Vector3<Scalar> left;
  Vector3<Scalar> right;
};

/// Unit right-hand axis for a viewer looking along `view_dir`, kept level.
template <typename Derived>
Vector3<typename Derived::Scalar> level_right_axis(const Eigen::MatrixBase<Derived>& view_dir) {
  using Scalar = typename Derived::Scalar;
  Vector3<Scalar> horizontal(view_dir.x(), Scalar(0), view_dir.z());
  const Scalar norm = horizontal.norm();
  if (!(norm > Scalar(0))) {
    throw Error(ErrorKind::kDegenerateDirection, "view direction has no horizontal component");
  }
  horizontal /= norm;
  // cross(up, d) with up = +Y.
  return Vector3<Scalar>(horizontal.z(), Scalar(0), -horizontal.x());
}

template <typename Derived>
EyePair<typename Derived::Scalar> eye_positions(const Vector3<typename Derived::Scalar>& head, typename Derived::Scalar ipd,
                                                const Eigen::MatrixBase<Derived>& view_dir) {
  const auto right_axis = level_right_axis(view_dir);
  const auto half = ipd / 2;
  return {head - half * right_axis, head + half * right_axis};
}

inline EyePair<double> eye_positions(const HeadPose& head, const Vector3d& view_dir) {
  return eye_positions(head.position, head.ipd, view_dir);
}

/// Eye position for `eye`; kCenter returns the head itself.
Point3d eye_position(const HeadPose& head, const Vector3d& view_dir, Eye eye);

using CubemapCenters = std::array<Point3d, 4>;

/// Cubemap centers indexed by Cardinal, offset ipd/2 along each axis.
CubemapCenters cubemap_centers(const HeadPose& head);

/// Cardinal whose axis has the largest dot with `eye_offset`. Ties resolve
/// North > East > South > West, so the zero offset selects North.
template <typename Derived>
Cardinal select_cubemap(const Eigen::MatrixBase<Derived>& eye_offset) {
  using Scalar = typename Derived::Scalar;
  Cardinal best = Cardinal::kNorth;
  Scalar best_dot = cardinal_axis<Scalar>(best).dot(eye_offset);
  for (Cardinal c : {Cardinal::kEast, Cardinal::kSouth, Cardinal::kWest}) {
    const Scalar d = cardinal_axis<Scalar>(c).dot(eye_offset);
    if (d > best_dot) {
      best = c;
      best_dot = d;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Cubemap addressing. Per-face (u, v) with ma the major-axis magnitude:
//   +X: u = (-z/ma + 1)/2  v = (-y/ma + 1)/2
//   -X: u = ( z/ma + 1)/2  v = (-y/ma + 1)/2
//   +Y: u = ( x/ma + 1)/2  v = ( z/ma + 1)/2
//   -Y: u = ( x/ma + 1)/2  v = (-z/ma + 1)/2
//   +Z: u = ( x/ma + 1)/2  v = (-y/ma + 1)/2
//   -Z: u = (-x/ma + 1)/2  v = (-y/ma + 1)/2
// v = 0 is the top row of a face image.

template <typename Scalar>
struct FaceCoord {
  Face face;
  Scalar u;
  Scalar v;
};

/// Face of the maximum-magnitude component; ties follow kFaces order.
template <typename Derived>
Face dominant_face(const Eigen::MatrixBase<Derived>& dir) {
  const auto ax = std::abs(dir.x());
  const auto ay = std::abs(dir.y());
  const auto az = std::abs(dir.z());
  if (ax >= ay && ax >= az) return dir.x() > 0 ? Face::kPosX : Face::kNegX;
  if (ay >= az) return dir.y() > 0 ? Face::kPosY : Face::kNegY;
  return dir.z() > 0 ? Face::kPosZ : Face::kNegZ;
}

namespace detail {

template <typename Scalar>
void face_plane_coords(Face face, Scalar x, Scalar y, Scalar z, Scalar& sc, Scalar& tc) {
  switch (face) {
    case Face::kPosX: sc = -z; tc = -y; break;
    case Face::kNegX: sc = z; tc = -y; break;
    case Face::kPosY: sc = x; tc = z; break;
    case Face::kNegY: sc = x; tc = -z; break;
    case Face::kPosZ: sc = x; tc = -y; break;
    case Face::kNegZ: sc = -x; tc = -y; break;
  }
}

}  // namespace detail

template <typename Derived>
FaceCoord<typename Derived::Scalar> face_for_direction(const Eigen::MatrixBase<Derived>& dir) {
  using Scalar = typename Derived::Scalar;
  if (!(dir.cwiseAbs().maxCoeff() > Scalar(0))) {
    throw Error(ErrorKind::kInputDomain, "face_for_direction: zero direction");
  }
  const Face face = dominant_face(dir);
  const Scalar ma = std::abs(dir[face_axis(face)]);
  Scalar sc{}, tc{};
  detail::face_plane_coords(face, dir.x(), dir.y(), dir.z(), sc, tc);
  return {face, (sc / ma + 1) / 2, (tc / ma + 1) / 2};
}

/// Coordinates of `dir` projected onto the plane of a given `face`, clamped
/// to [0,1]. Directions at or behind the face plane saturate at the edge.
template <typename Derived>
FaceCoord<typename Derived::Scalar> face_coords_on(Face face, const Eigen::MatrixBase<Derived>& dir) {
  using Scalar = typename Derived::Scalar;
  const Scalar along = Scalar(face_sign(face)) * dir[face_axis(face)];
  const Scalar ma = std::max(along, Scalar(1e-12) * dir.norm());
  Scalar sc{}, tc{};
  detail::face_plane_coords(face, dir.x(), dir.y(), dir.z(), sc, tc);
  const auto unit = [](Scalar s) { return std::clamp((s + 1) / 2, Scalar(0), Scalar(1)); };
  return {face, unit(sc / ma), unit(tc / ma)};
}

/// Inverse of face_for_direction: a (non-normalized) direction on the unit
/// cube for face coordinates (u, v).
template <typename Scalar>
Vector3<Scalar> texel_direction(Face face, Scalar u, Scalar v) {
  const Scalar a = 2 * u - 1;
  const Scalar b = 2 * v - 1;
  switch (face) {
    case Face::kPosX: return Vector3<Scalar>(1, -b, -a);
    case Face::kNegX: return Vector3<Scalar>(-1, -b, a);
    case Face::kPosY: return Vector3<Scalar>(a, 1, b);
    case Face::kNegY: return Vector3<Scalar>(a, -1, -b);
    case Face::kPosZ: return Vector3<Scalar>(a, -b, 1);
    case Face::kNegZ: return Vector3<Scalar>(-a, -b, -1);
  }
  return Vector3<Scalar>::Zero();
}

/// Relative tolerance for conservative face-boundary dilation.
inline constexpr double kFaceBoundaryEpsilon = 1e-6;

/// Every face whose axis component is within a relative `epsilon` of the
/// dominant one (always includes dominant_face).
template <typename Derived>
void dilated_faces(const Eigen::MatrixBase<Derived>& dir, double epsilon, FaceSet& out, Cardinal cubemap) {
  const auto abs = dir.cwiseAbs().eval();
  const auto threshold = abs.maxCoeff() * (1.0 - epsilon);
  out.insert({cubemap, dominant_face(dir)});
  for (int axis = 0; axis < 3; ++axis) {
    if (abs[axis] > 0 && abs[axis] >= threshold) {
      const bool positive = dir[axis] > 0;
      out.insert({cubemap, static_cast<Face>(2 * axis + (positive ? 0 : 1))});
    }
  }
}

// ---------------------------------------------------------------------------
// Sampling decisions shared by the projection and the culler

/// Which cubemap and face a fragment at `surface` is sampled from for `eye`.
/// The cubemap is the one nearest the estimated eye; the face is the one the
/// head-relative view direction falls in.
struct SampleChoice {
  Vector3d view_dir;  // normalized surface - head
  Point3d eye;
  Cardinal cubemap;
  Face face;
};

SampleChoice choose_sample(const HeadPose& head, const Point3d& surface, Eye eye);

/// Exact set of (cubemap, face) pairs the projection reads for `head`,
/// dilated by kFaceBoundaryEpsilon at face boundaries.
FaceSet visible_faces(const HeadPose& head, const ScreenConfig& screen);

FaceSet all_faces();

// ---------------------------------------------------------------------------
// Off-axis projection

/// Planar screen rectangle as seen by a viewer, corners counter-clockwise
/// from the lower left.
struct ScreenRect {
  Point3d lower_left;
  Point3d lower_right;
  Point3d upper_right;
  Point3d upper_left;
};

/// Generalized perspective frustum. `right`, `up` span the screen plane and
/// `normal` points from the plane toward the eye; extents are on the near
/// plane.
struct Frustum {
  Point3d eye;
  double left = 0, right = 0, bottom = 0, top = 0;
  double near_distance = 0, far_distance = 0;
  Vector3d right_axis;
  Vector3d up_axis;
  Vector3d normal;

  Vector3d forward() const { return -normal; }
};

Frustum off_axis_frustum(const Point3d& eye, const ScreenRect& rect, double near_distance, double far_distance);

/// Normalized device coordinates (x, y in [-1,1] inside the frustum; z is
/// the eye-space depth along forward()).
Eigen::Vector3d project_to_ndc(const Frustum& frustum, const Point3d& point);

}  // namespace scs
