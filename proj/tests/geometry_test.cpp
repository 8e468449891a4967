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

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "scs/geometry.hpp"
#include "test_support.hpp"

namespace scs {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 1e-12;

ScreenConfig small_screen(int w, int h, double arc = 270) {
  ScreenConfig s;
  s.arc_degrees = arc;
  s.canvas_width = w;
  s.canvas_height = h;
  return s;
}

template <typename A, typename B>
void expect_near(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b, double tol = kEps) {
  EXPECT_LE((a - b).cwiseAbs().maxCoeff(), tol) << "got " << a.transpose() << " want " << b.transpose();
}

TEST(CanvasAzimuth, PixelCenters) {
  const ScreenConfig s = small_screen(270, 23);
  EXPECT_NEAR(canvas_to_azimuth(0, s), -134.5, kEps);
  EXPECT_NEAR(canvas_to_azimuth(269, s), 134.5, kEps);
  EXPECT_NEAR(canvas_to_azimuth(1350, ScreenConfig::cavern()), 0.05, kEps);
}

TEST(CanvasAzimuth, OutOfRangeThrows) {
  const ScreenConfig s = ScreenConfig::cavern();
  EXPECT_THROW(canvas_to_azimuth(-1, s), Error);
  EXPECT_THROW(canvas_to_azimuth(s.canvas_width, s), Error);
  EXPECT_THROW(azimuth_to_canvas(135.0, s), Error);
}

TEST(CanvasAzimuth, ExhaustiveRoundTrip) {
  for (int w : {1, 7, 270, 2700, 8192}) {
    for (double arc : {90.0, 270.0, 360.0}) {
      const ScreenConfig s = small_screen(w, 10, arc);
      for (int x = 0; x < w; ++x) {
        ASSERT_EQ(azimuth_to_canvas(canvas_to_azimuth(x, s), s), x) << "w=" << w << " arc=" << arc;
      }
    }
  }
}

TEST(FragmentWorldPoint, CardinalPoints) {
  // Odd canvas so a column center sits exactly at azimuth 0 and 90.
  ScreenConfig s = small_screen(271, 23, 271);
  const int north = 135;
  const int east = 225;
  EXPECT_NEAR(canvas_to_azimuth(north, s), 0.0, kEps);
  EXPECT_NEAR(canvas_to_azimuth(east, s), 90.0, kEps);
  expect_near(fragment_world_point(north, 11, s), Vector3d(0, 1.15, 3), 1e-12);
  expect_near(fragment_world_point(east, 11, s), Vector3d(3, 1.15, 0), 1e-12);
}

TEST(FragmentWorldPoint, Corner) {
  const ScreenConfig s = small_screen(270, 23);
  const double a = -134.5 * kPi / 180;
  expect_near(fragment_world_point(0, 0, s), Vector3d(3 * std::sin(a), 0.05, 3 * std::cos(a)));
}

TEST(FragmentWorldPoint, OnCylinder) {
  const ScreenConfig s = ScreenConfig::cavern();
  for (int x = 0; x < s.canvas_width; x += 37) {
    for (int y = 0; y < s.canvas_height; y += 11) {
      const Point3d p = fragment_world_point(x, y, s);
      EXPECT_NEAR(std::hypot(p.x(), p.z()), s.radius, 1e-9);
      EXPECT_GE(p.y(), 0);
      EXPECT_LE(p.y(), s.height);
    }
  }
}

TEST(EyePositions, SpecExamples) {
  const HeadPose head;
  auto north = eye_positions(head, Vector3d(0, 0, 1));
  expect_near(north.left, Vector3d(-0.032, 1.15, 0));
  expect_near(north.right, Vector3d(0.032, 1.15, 0));
  auto east = eye_positions(head, Vector3d(1, 0, 0));
  expect_near(east.right, Vector3d(0, 1.15, -0.032));
  auto diag = eye_positions(head, Vector3d(1, 0, 1).normalized());
  expect_near(diag.right - head.position, Vector3d(0.032 / std::sqrt(2.0), 0, -0.032 / std::sqrt(2.0)));
}

TEST(EyePositions, VerticalDirectionThrows) {
  try {
    eye_positions(HeadPose{}, Vector3d(0, 1, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDegenerateDirection);
  }
}

TEST(EyePositions, Invariants) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 500; ++i) {
    const HeadPose head{Point3d(u(rng), 1 + u(rng), u(rng)), 0.05 + 0.02 * u(rng)};
    Vector3d d(u(rng), 0.5 * u(rng), u(rng));
    if (std::hypot(d.x(), d.z()) < 1e-3) continue;
    d.normalize();
    const auto eyes = eye_positions(head, d);
    EXPECT_NEAR((eyes.right - eyes.left).norm(), head.ipd, 1e-12);
    expect_near((eyes.left + eyes.right) / 2, head.position, 1e-12);
    EXPECT_NEAR(eyes.left.y(), head.position.y(), 1e-15);
    EXPECT_NEAR((eyes.right - eyes.left).dot(Vector3d(d.x(), 0, d.z())), 0, 1e-12);
    // Facing +Z the right eye sits at +X, and d x offset points up.
    EXPECT_GT(Vector3d(d.x(), 0, d.z()).cross(eyes.right - head.position).y(), 0);
  }
}

TEST(EyePositions, FloatScalar) {
  const Eigen::Vector3f head(0, 1.15f, 0);
  const auto eyes = eye_positions(head, 0.064f, Eigen::Vector3f(0, 0, 1));
  EXPECT_FLOAT_EQ(eyes.right.x(), 0.032f);
}

TEST(CubemapCenters, SpecExamples) {
  const HeadPose head;
  expect_near(cubemap_centers(head)[static_cast<int>(Cardinal::kEast)], Vector3d(0.032, 1.15, 0));
  for (const Point3d& c : cubemap_centers(HeadPose{head.position, 0})) expect_near(c, head.position, 0);
  const HeadPose off{Point3d(1, 1.15, -0.5), 0.06};
  expect_near(cubemap_centers(off)[static_cast<int>(Cardinal::kNorth)], Vector3d(1, 1.15, -0.47));
}

TEST(SelectCubemap, SpecExamples) {
  EXPECT_EQ(select_cubemap(Vector3d(0.032, 0, 0)), Cardinal::kEast);
  EXPECT_EQ(select_cubemap(Vector3d(0, 0, 0)), Cardinal::kNorth);
  EXPECT_EQ(select_cubemap(Vector3d(1, 0, 1).normalized()), Cardinal::kNorth);
  EXPECT_EQ(select_cubemap(Vector3d(-1, 0, -1)), Cardinal::kSouth);
  EXPECT_EQ(select_cubemap(Vector3d(0, 0, -0.1)), Cardinal::kSouth);
  EXPECT_EQ(select_cubemap(Vector3d(-0.1, 0, 0.01)), Cardinal::kWest);
}

TEST(FaceForDirection, SpecExamples) {
  auto z = face_for_direction(Vector3d(0, 0, 1));
  EXPECT_EQ(z.face, Face::kPosZ);
  EXPECT_DOUBLE_EQ(z.u, 0.5);
  EXPECT_DOUBLE_EQ(z.v, 0.5);
  auto x = face_for_direction(Vector3d(1, 0, 0));
  EXPECT_EQ(x.face, Face::kPosX);
  EXPECT_DOUBLE_EQ(x.u, 0.5);
  auto edge = face_for_direction(Vector3d(1, 0, 1).normalized());
  EXPECT_EQ(edge.face, Face::kPosX);
  EXPECT_NEAR(edge.u, 0.0, 1e-15);
  EXPECT_NEAR(edge.v, 0.5, 1e-15);
}

TEST(FaceForDirection, ZeroThrows) {
  try {
    face_for_direction(Vector3d::Zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInputDomain);
  }
}

TEST(FaceForDirection, ScaleInvariantAndInvertible) {
  std::mt19937 rng(11);
  std::normal_distribution<double> n;
  for (int i = 0; i < 2000; ++i) {
    const Vector3d d(n(rng), n(rng), n(rng));
    const auto a = face_for_direction(d);
    const auto b = face_for_direction((3.7 * d).eval());
    EXPECT_EQ(a.face, b.face);
    EXPECT_NEAR(a.u, b.u, 1e-12);
    EXPECT_NEAR(a.v, b.v, 1e-12);
    EXPECT_GE(a.u, 0);
    EXPECT_LE(a.u, 1);
    EXPECT_GE(a.v, 0);
    EXPECT_LE(a.v, 1);
    const Vector3d back = texel_direction(a.face, a.u, a.v);
    EXPECT_LE((back.normalized() - d.normalized()).norm(), 1e-12);
  }
}

TEST(FaceForDirection, Partition) {
  // Exactly one face wins per direction, and it is the face whose outward
  // normal has the largest dot (ties aside).
  std::mt19937 rng(3);
  std::normal_distribution<double> n;
  for (int i = 0; i < 2000; ++i) {
    const Vector3d d(n(rng), n(rng), n(rng));
    const Face f = face_for_direction(d).face;
    Vector3d normal = Vector3d::Zero();
    normal[face_axis(f)] = face_sign(f);
    for (Face g : kFaces) {
      Vector3d other = Vector3d::Zero();
      other[face_axis(g)] = face_sign(g);
      EXPECT_GE(normal.dot(d), other.dot(d));
    }
  }
}

TEST(FaceCoordsOn, MatchesFaceForDirectionOnOwnFace) {
  std::mt19937 rng(5);
  std::normal_distribution<double> n;
  for (int i = 0; i < 500; ++i) {
    const Vector3d d(n(rng), n(rng), n(rng));
    const auto a = face_for_direction(d);
    const auto b = face_coords_on(a.face, d);
    EXPECT_NEAR(a.u, b.u, 1e-12);
    EXPECT_NEAR(a.v, b.v, 1e-12);
  }
  // Beyond the edge the coordinates clamp.
  const auto c = face_coords_on(Face::kPosZ, Vector3d(2, 0, 1));
  EXPECT_EQ(c.u, 1.0);
  const auto back = face_coords_on(Face::kPosZ, Vector3d(0.1, 0, -1));
  EXPECT_GE(back.u, 0.0);
  EXPECT_LE(back.u, 1.0);
}

TEST(VisibleFaces, CenterHeadIsSixFaces) {
  const ScreenConfig s = ScreenConfig::cavern();
  const auto start = std::chrono::steady_clock::now();
  const FaceSet faces = visible_faces(HeadPose{}, s);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const FaceSet expected = {{Cardinal::kEast, Face::kPosZ},  {Cardinal::kWest, Face::kPosZ},
                            {Cardinal::kNorth, Face::kPosX}, {Cardinal::kSouth, Face::kPosX},
                            {Cardinal::kNorth, Face::kNegX}, {Cardinal::kSouth, Face::kNegX}};
  EXPECT_EQ(faces, expected);
  EXPECT_LT(seconds, 1.0);
}

TEST(VisibleFaces, MatchesBruteForce) {
  const ScreenConfig s = ScreenConfig::cavern();
  const std::vector<HeadPose> poses = {
      {Point3d(0, 1.15, 0), 0.064},   {Point3d(0, 1.15, 2.7), 0.064}, {Point3d(2.0, 1.15, -1.5), 0.064},
      {Point3d(-1, 0.4, 1.2), 0.064}, {Point3d(0.5, 2.2, 0.1), 0.08}, {Point3d(0.3, 1.15, -0.2), 0.0},
  };
  for (const HeadPose& head : poses) {
    EXPECT_EQ(testing::as_pairs(visible_faces(head, s)), testing::ref_visible_faces(head, s))
        << "head " << head.position.transpose();
  }
}

TEST(VisibleFaces, MidHeightBound) {
  const ScreenConfig s = ScreenConfig::cavern();
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> unit(0, 1);
  for (int i = 0; i < 100; ++i) {
    const double r = 0.9 * s.radius * std::sqrt(unit(rng));
    const double a = 2 * kPi * unit(rng);
    const HeadPose head{Point3d(r * std::sin(a), s.height / 2, r * std::cos(a)), kDefaultIpd};
    const auto n = visible_faces(head, s).size();
    EXPECT_GE(n, 6u);
    EXPECT_LE(n, 20u);
  }
}

TEST(VisibleFaces, ZeroIpdFullCircle) {
  const ScreenConfig s = small_screen(3600, 230, 360);
  const FaceSet faces = visible_faces(HeadPose{Point3d(0, 1.15, 0), 0}, s);
  const FaceSet expected = {{Cardinal::kNorth, Face::kPosX},
                            {Cardinal::kNorth, Face::kNegX},
                            {Cardinal::kNorth, Face::kPosZ},
                            {Cardinal::kNorth, Face::kNegZ}};
  EXPECT_EQ(faces, expected);
  EXPECT_EQ(visible_faces(HeadPose{Point3d(0, 1.15, 0), 0}, s), faces);
}

TEST(VisibleFaces, InvalidHeadThrows) {
  const ScreenConfig s = ScreenConfig::cavern();
  for (const HeadPose& head : {HeadPose{Point3d(3.5, 1.15, 0), 0.064}, HeadPose{Point3d(0, -0.1, 0), 0.064},
                               HeadPose{Point3d(0, 1.15, 0), -0.01}}) {
    try {
      visible_faces(head, s);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kInvalidHead);
    }
  }
}

TEST(CubeFaceNames, RoundTrip) {
  for (Cardinal c : kCardinals) EXPECT_EQ(parse_cardinal(to_string(c)), c);
  for (Face f : kFaces) EXPECT_EQ(parse_face(to_string(f)), f);
  EXPECT_EQ(to_string(CubeFace{Cardinal::kSouth, Face::kNegX}), "South.-X");
  EXPECT_EQ(all_faces().size(), 24u);
}

ScreenRect unit_square() {
  return {Point3d(-0.5, -0.5, 0), Point3d(0.5, -0.5, 0), Point3d(0.5, 0.5, 0), Point3d(-0.5, 0.5, 0)};
}

TEST(OffAxisFrustum, Centered) {
  const Frustum f = off_axis_frustum(Point3d(0, 0, -1), unit_square(), 1, 100);
  EXPECT_NEAR(f.left, -0.5, kEps);
  EXPECT_NEAR(f.right, 0.5, kEps);
  EXPECT_NEAR(f.bottom, -0.5, kEps);
  EXPECT_NEAR(f.top, 0.5, kEps);
  // The viewer looks along +Z with +X on the right, so the normal is -Z.
  expect_near(f.normal, Vector3d(0, 0, -1));
}

TEST(OffAxisFrustum, ShiftedEye) {
  const Frustum f = off_axis_frustum(Point3d(0.25, 0, -1), unit_square(), 1, 100);
  EXPECT_NEAR(f.left, -0.75, kEps);
  EXPECT_NEAR(f.right, 0.25, kEps);
  EXPECT_NEAR(f.bottom, -0.5, kEps);
  EXPECT_NEAR(f.top, 0.5, kEps);
}

TEST(OffAxisFrustum, Errors) {
  const auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kIo;
  };
  EXPECT_EQ(kind_of([] { off_axis_frustum(Point3d(0, 0, -1), unit_square(), 10, 1); }), ErrorKind::kDegenerateFrustum);
  EXPECT_EQ(kind_of([] { off_axis_frustum(Point3d(0.2, 0.1, 0), unit_square(), 0.1, 1); }),
            ErrorKind::kDegenerateFrustum);
  // Behind the screen: the rect runs left to right as seen from -Z only.
  EXPECT_EQ(kind_of([] { off_axis_frustum(Point3d(0, 0, 1), unit_square(), 0.1, 1); }),
            ErrorKind::kDegenerateFrustum);
  ScreenRect bent = unit_square();
  bent.upper_right.z() = 0.3;
  EXPECT_EQ(kind_of([&] { off_axis_frustum(Point3d(0, 0, -1), bent, 0.1, 1); }), ErrorKind::kDegenerateFrustum);
}

TEST(OffAxisFrustum, CornersProjectToUnitSquare) {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 200; ++i) {
    // A tilted rectangle on the cylinder and an eye inside it.
    const double a = 180 * u(rng) * kPi / 180, b = a + 0.3;
    const ScreenRect rect = {Point3d(3 * std::sin(a), 0, 3 * std::cos(a)), Point3d(3 * std::sin(b), 0, 3 * std::cos(b)),
                             Point3d(3 * std::sin(b), 2.3, 3 * std::cos(b)),
                             Point3d(3 * std::sin(a), 2.3, 3 * std::cos(a))};
    const Point3d eye(u(rng), 1.15 + u(rng), u(rng));
    const Frustum f = off_axis_frustum(eye, rect, 0.01, 100);
    expect_near(project_to_ndc(f, rect.lower_left).head<2>(), Eigen::Vector2d(-1, -1), 1e-9);
    expect_near(project_to_ndc(f, rect.upper_right).head<2>(), Eigen::Vector2d(1, 1), 1e-9);
    expect_near(project_to_ndc(f, rect.lower_right).head<2>(), Eigen::Vector2d(1, -1), 1e-9);
    expect_near(project_to_ndc(f, rect.upper_left).head<2>(), Eigen::Vector2d(-1, 1), 1e-9);
  }
}

}  // namespace
}  // namespace scs
