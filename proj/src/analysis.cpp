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

#include "scs/analysis.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ostream>

#include "scs/render.hpp"
#include "scs/stitch.hpp"

namespace scs {

DiffReport image_diff(const Image& a, const Image& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw Error(ErrorKind::kInputDomain, "image_diff: dimension mismatch");
  }
  DiffReport report;
  const auto& pa = a.pixels();
  const auto& pb = b.pixels();
  if (pa.empty()) return report;
  double sum_abs = 0, sum_sq = 0;
  int max_abs = 0;
  std::size_t differing = 0;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    const int d[3] = {std::abs(pa[i].r - pb[i].r), std::abs(pa[i].g - pb[i].g), std::abs(pa[i].b - pb[i].b)};
    for (int c : d) {
      sum_abs += c;
      sum_sq += static_cast<double>(c) * c;
      max_abs = std::max(max_abs, c);
    }
    if (d[0] || d[1] || d[2]) ++differing;
  }
  const double n = 3.0 * pa.size();
  report.mean_abs = sum_abs / n / 255.0;
  report.rmse = std::sqrt(sum_sq / n) / 255.0;
  report.max_abs = max_abs / 255.0;
  report.differing_pixel_fraction = static_cast<double>(differing) / pa.size();
  return report;
}

Image diff_heat_image(const Image& a, const Image& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw Error(ErrorKind::kInputDomain, "diff_heat_image: dimension mismatch");
  }
  Image out(a.width(), a.height());
  for (int y = 0; y < a.height(); ++y) {
    for (int x = 0; x < a.width(); ++x) {
      const Rgb8& p = a.at(x, y);
      const Rgb8& q = b.at(x, y);
      const auto d = static_cast<std::uint8_t>(std::max({std::abs(p.r - q.r), std::abs(p.g - q.g), std::abs(p.b - q.b)}));
      out.at(x, y) = {d, d, d};
    }
  }
  return out;
}

namespace {

double centroid_column(const Image& image, const Rgb8& color, const char* eye) {
  double sum = 0;
  long long count = 0;
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      if (image.at(x, y) == color) {
        sum += x;
        ++count;
      }
    }
  }
  if (count == 0) throw Error(ErrorKind::kProbeMiss, std::string("marker not found in ") + eye + " image");
  return sum / count;
}

}  // namespace

double disparity_probe(const StereoCanvas& stereo, const Rgb8& marker_color) {
  return centroid_column(stereo.left, marker_color, "left") - centroid_column(stereo.right, marker_color, "right");
}

std::string_view to_string(BenchMode mode) {
  switch (mode) {
    case BenchMode::kScs: return "scs";
    case BenchMode::kStitch: return "stitch";
    case BenchMode::kOracle: return "oracle";
  }
  return "?";
}

BenchMode parse_bench_mode(std::string_view name) {
  for (BenchMode m : {BenchMode::kScs, BenchMode::kStitch, BenchMode::kOracle}) {
    if (to_string(m) == name) return m;
  }
  throw Error(ErrorKind::kInputDomain, "unknown bench mode: " + std::string(name));
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return std::max(ms, 1e-6);
}

}  // namespace

std::vector<BenchRow> bench_sweep(const Scene& scene, const ScreenConfig& screen, const BenchSpec& spec) {
  if (spec.poses.empty()) throw Error(ErrorKind::kInputDomain, "bench_sweep: no head poses");
  if (spec.modes.empty()) throw Error(ErrorKind::kInputDomain, "bench_sweep: no modes");
  if (spec.cube_resolutions.empty() || spec.slit_counts.empty()) {
    throw Error(ErrorKind::kInputDomain, "bench_sweep: no resolutions");
  }

  std::vector<BenchRow> rows;
  for (const HeadPose& head : spec.poses) {
    head.validate(screen);
    StereoCanvas oracle{Image(), Image(), screen, head};
    const auto oracle_start = Clock::now();
    oracle.left = render_oracle(scene, head, screen, Eye::kLeft, {spec.oracle_supersample});
    oracle.right = render_oracle(scene, head, screen, Eye::kRight, {spec.oracle_supersample});
    const double oracle_ms = elapsed_ms(oracle_start);
    const Image reference = compose(oracle, ComposeMode::kSideBySide);

    for (BenchMode mode : spec.modes) {
      switch (mode) {
        case BenchMode::kScs:
          for (int res : spec.cube_resolutions) {
            const auto start = Clock::now();
            const ScsResult r = render_scs(scene, head, screen, res);
            BenchRow row{mode, head, res, 0, r.pass_count, elapsed_ms(start), {}};
            row.diff = image_diff(compose(r.stereo, ComposeMode::kSideBySide), reference);
            rows.push_back(row);
          }
          break;
        case BenchMode::kStitch:
          for (int slits : spec.slit_counts) {
            const auto start = Clock::now();
            const StitchResult r = render_stitch(scene, head, screen, StitchConfig{slits}, true);
            BenchRow row{mode, head, 0, slits, r.pass_count, elapsed_ms(start), {}};
            row.diff = image_diff(compose(r.canvas, ComposeMode::kSideBySide), reference);
            rows.push_back(row);
          }
          break;
        case BenchMode::kOracle:
          rows.push_back(BenchRow{mode, head, 0, 0, 2, oracle_ms, {}});
          break;
      }
    }
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << kBenchCsvHeader << '\n';
  char buffer[512];
  for (const BenchRow& r : rows) {
    const std::string cube = r.cube_resolution > 0 ? std::to_string(r.cube_resolution) : "";
    const std::string slits = r.slit_count > 0 ? std::to_string(r.slit_count) : "";
    std::snprintf(buffer, sizeof(buffer), "%s,%.6g,%.6g,%.6g,%.6g,%s,%s,%d,%.3f,%.6g,%.6g,%.6g\n",
                  std::string(to_string(r.mode)).c_str(), r.head.position.x(), r.head.position.y(),
                  r.head.position.z(), r.head.ipd, cube.c_str(), slits.c_str(), r.pass_count, r.wall_ms, r.diff.rmse,
                  r.diff.mean_abs, r.diff.max_abs);
    out << buffer;
  }
}

}  // namespace scs
