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

#include "scs/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "scs/analysis.hpp"
#include "scs/pipeline.hpp"
#include "scs/service.hpp"

#ifndef SCS_DEFAULT_SCENE_DIR
#define SCS_DEFAULT_SCENE_DIR "scenes"
#endif

namespace scs {

namespace {

/// Failure with the exit status it maps to.
struct CliFailure {
  int status;
  std::string reason;
  std::string detail;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw CliFailure{kExitBadArgs, "bad-args", "cannot parse " + what + " '" + text + "'"};
  }
}

Point3d parse_point(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw CliFailure{kExitBadArgs, "bad-args", "expected x,y,z but got '" + text + "'"};
  return {parse_double(parts[0], "head x"), parse_double(parts[1], "head y"), parse_double(parts[2], "head z")};
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> values;
  for (const auto& part : split(text, ',')) {
    try {
      values.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw CliFailure{kExitBadArgs, "bad-args", "cannot parse " + what + " '" + part + "'"};
    }
  }
  if (values.empty()) throw CliFailure{kExitBadArgs, "bad-args", what + " list is empty"};
  return values;
}

std::filesystem::path scene_dir() {
  if (const char* env = std::getenv("SCS_SCENE_DIR")) return env;
  return SCS_DEFAULT_SCENE_DIR;
}

/// A path to an existing file, or the id of a bundled scene.
std::filesystem::path resolve_scene(const std::string& name) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(name, ec)) return name;
  const auto bundled = scene_dir() / (name + ".json");
  if (std::filesystem::is_regular_file(bundled, ec)) return bundled;
  return name;
}

Scene load_scene(const std::string& name) {
  const auto path = resolve_scene(name);
  try {
    return load_scene_file(path);
  } catch (const Error& e) {
    throw CliFailure{kExitSceneError, "scene", path.string() + ": " + e.what()};
  }
}

struct ScreenFlags {
  ScreenConfig screen;

  void add(CLI::App& cmd) {
    cmd.add_option("--radius", screen.radius, "Cylinder radius in meters")->capture_default_str();
    cmd.add_option("--height", screen.height, "Screen height in meters")->capture_default_str();
    cmd.add_option("--arc", screen.arc_degrees, "Screen arc in degrees")->capture_default_str();
    cmd.add_option("--canvas-width", screen.canvas_width, "Canvas columns")->capture_default_str();
    cmd.add_option("--canvas-height", screen.canvas_height, "Canvas rows")->capture_default_str();
  }

  ScreenConfig checked() const {
    try {
      screen.validate();
    } catch (const Error& e) {
      throw CliFailure{kExitBadArgs, "bad-args", e.what()};
    }
    return screen;
  }
};

HeadPose checked_head(const std::string& head_text, double ipd, const ScreenConfig& screen) {
  HeadPose head = HeadPose::centered(screen, ipd);
  if (!head_text.empty()) head.position = parse_point(head_text);
  try {
    head.validate(screen);
  } catch (const Error& e) {
    throw CliFailure{kExitBadArgs, "bad-args", e.what()};
  }
  return head;
}

std::filesystem::path with_suffix(const std::filesystem::path& path, const std::string& label) {
  auto out = path;
  out.replace_filename(path.stem().string() + "_" + label + path.extension().string());
  return out;
}

struct RenderFlags {
  ScreenFlags screen;
  std::string scene;
  std::string mode = "scs";
  std::string head;
  double ipd = kDefaultIpd;
  int cube_res = 512;
  int slits = 32;
  bool stereo = false;
  int supersample = 1;
  bool bilinear = false;
  std::string out;
  std::string kind = "anaglyph";
  std::string format;
  long long seed = 0;

  CLI::Option* cube_res_opt = nullptr;
  CLI::Option* slits_opt = nullptr;
  CLI::Option* stereo_opt = nullptr;
  CLI::Option* supersample_opt = nullptr;
  CLI::Option* bilinear_opt = nullptr;
  CLI::Option* head_opt = nullptr;
};

int cmd_render(const RenderFlags& f, std::ostream& out) {
  RenderJob job;
  try {
    job.mode = parse_render_mode(f.mode);
  } catch (const Error& e) {
    throw CliFailure{kExitBadArgs, "bad-args", e.what()};
  }
  OutputKind kind;
  try {
    kind = parse_output_kind(f.kind);
  } catch (const Error& e) {
    throw CliFailure{kExitBadArgs, "bad-args", e.what()};
  }

  const bool uses_cubes = job.mode == RenderMode::kScs || job.mode == RenderMode::kCenter ||
                          job.mode == RenderMode::kDiff;
  if (!uses_cubes && (f.cube_res_opt->count() || f.bilinear_opt->count())) {
    throw CliFailure{kExitBadArgs, "bad-args", "--cube-res/--bilinear apply only to scs, center and diff modes"};
  }
  if (job.mode != RenderMode::kStitch && (f.slits_opt->count() || f.stereo_opt->count())) {
    throw CliFailure{kExitBadArgs, "bad-args", "--slits/--stereo apply only to stitch mode"};
  }
  if (job.mode != RenderMode::kOracle && job.mode != RenderMode::kDiff && f.supersample_opt->count()) {
    throw CliFailure{kExitBadArgs, "bad-args", "--supersample applies only to oracle and diff modes"};
  }
  if (job.mode == RenderMode::kCenter && f.head_opt->count()) {
    throw CliFailure{kExitBadArgs, "bad-args", "center mode pins the head; --head is not allowed"};
  }
  if (f.cube_res < 2) throw CliFailure{kExitBadArgs, "bad-args", "--cube-res must be >= 2"};
  if (f.slits < 1) throw CliFailure{kExitBadArgs, "bad-args", "--slits must be >= 1"};
  if (f.supersample < 1) throw CliFailure{kExitBadArgs, "bad-args", "--supersample must be >= 1"};

  std::string format = f.format;
  if (format.empty()) format = std::filesystem::path(f.out).extension() == ".png" ? "png" : "ppm";
  if (format != "ppm" && format != "png") throw CliFailure{kExitBadArgs, "bad-args", "--format must be ppm or png"};

  job.screen = f.screen.checked();
  job.head = checked_head(f.head, f.ipd, job.screen);
  job.cube_resolution = f.cube_res;
  job.slit_count = f.slits;
  job.stitch_stereo = f.stereo;
  job.oracle_supersample = f.supersample;
  job.bilinear = f.bilinear;

  const Scene scene = load_scene(f.scene);

  RenderOutput output;
  try {
    output = run_render_job(scene, job);
  } catch (const Error& e) {
    throw CliFailure{kExitRenderError, "render", e.what()};
  }

  const auto images = select_output(output.canvas, kind);
  std::string written;
  for (const auto& [label, image] : images) {
    const std::filesystem::path path = images.size() > 1 ? with_suffix(f.out, label) : std::filesystem::path(f.out);
    try {
      write_file_atomic(path, encode_image(image, format == "png" ? ImageFormat::kPng : ImageFormat::kPpm));
    } catch (const Error& e) {
      throw CliFailure{kExitIoError, "io", e.what()};
    }
    written += (written.empty() ? "" : ",") + path.string();
  }

  char summary[512];
  std::snprintf(summary, sizeof(summary), "render mode=%s passes=%d wall_ms=%.3f width=%d height=%d out=%s",
                std::string(to_string(job.mode)).c_str(), output.pass_count, output.wall_ms,
                output.canvas.left.width(), output.canvas.left.height(), written.c_str());
  out << summary << '\n';
  return kExitOk;
}

int cmd_faces(const ScreenFlags& screen_flags, const std::string& head_text, double ipd, std::ostream& out) {
  const ScreenConfig screen = screen_flags.checked();
  const HeadPose head = checked_head(head_text, ipd, screen);
  const FaceSet faces = visible_faces(head, screen);
  for (const CubeFace& cf : faces) out << to_string(cf) << '\n';
  out << "count=" << faces.size() << '\n';
  return kExitOk;
}

std::vector<HeadPose> read_poses_file(const std::string& path, double ipd, const ScreenConfig& screen) {
  std::ifstream in(path);
  if (!in) throw CliFailure{kExitIoError, "io", "cannot read poses file " + path};
  std::vector<HeadPose> poses;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line.erase(0, line.find_first_not_of(" \t\r"));
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (line.empty()) continue;
    auto parts = split(line, ',');
    if (parts.size() != 3 && parts.size() != 4) {
      throw CliFailure{kExitBadArgs, "bad-args", path + ":" + std::to_string(line_no) + ": expected x,y,z[,ipd]"};
    }
    const double pose_ipd = parts.size() == 4 ? parse_double(parts[3], "ipd") : ipd;
    poses.push_back(checked_head(parts[0] + "," + parts[1] + "," + parts[2], pose_ipd, screen));
  }
  return poses;
}

struct BenchFlags {
  ScreenFlags screen;
  std::string scene = "depth-rings";
  std::vector<std::string> heads;
  std::string poses_file;
  std::string modes = "scs,stitch";
  std::string cube_res = "256";
  std::string slits = "32";
  double ipd = kDefaultIpd;
  int supersample = 1;
  std::string out;
};

int cmd_bench(const BenchFlags& f, std::ostream& out) {
  const ScreenConfig screen = f.screen.checked();
  BenchSpec spec;
  for (const auto& m : split(f.modes, ',')) {
    try {
      spec.modes.push_back(parse_bench_mode(m));
    } catch (const Error& e) {
      throw CliFailure{kExitBadArgs, "bad-args", e.what()};
    }
  }
  if (spec.modes.empty()) throw CliFailure{kExitBadArgs, "bad-args", "mode list is empty"};
  spec.cube_resolutions = parse_int_list(f.cube_res, "cube resolution");
  spec.slit_counts = parse_int_list(f.slits, "slit count");
  for (int r : spec.cube_resolutions) {
    if (r < 2) throw CliFailure{kExitBadArgs, "bad-args", "cube resolutions must be >= 2"};
  }
  for (int n : spec.slit_counts) {
    if (n < 1) throw CliFailure{kExitBadArgs, "bad-args", "slit counts must be >= 1"};
  }
  if (f.supersample < 1) throw CliFailure{kExitBadArgs, "bad-args", "--supersample must be >= 1"};
  spec.oracle_supersample = f.supersample;

  if (!f.poses_file.empty()) spec.poses = read_poses_file(f.poses_file, f.ipd, screen);
  for (const auto& h : f.heads) spec.poses.push_back(checked_head(h, f.ipd, screen));
  if (spec.poses.empty()) {
    spec.poses.push_back(HeadPose::centered(screen, f.ipd));
    HeadPose edge = HeadPose::centered(screen, f.ipd);
    edge.position.z() = 0.9 * screen.radius;
    spec.poses.push_back(edge);
  }

  const Scene scene = load_scene(f.scene);
  std::vector<BenchRow> rows;
  try {
    rows = bench_sweep(scene, screen, spec);
  } catch (const Error& e) {
    throw CliFailure{kExitRenderError, "render", e.what()};
  }

  std::ostringstream csv;
  write_bench_csv(csv, rows);
  if (f.out.empty()) {
    out << csv.str();
  } else {
    try {
      write_file_atomic(f.out, csv.str());
    } catch (const Error& e) {
      throw CliFailure{kExitIoError, "io", e.what()};
    }
  }
  return kExitOk;
}

struct ServeFlags {
  std::string host = "0.0.0.0";
  int port = kDefaultServicePort;
  std::string scenes;
  int max_renders = 2;
  std::string cors_origin = "*";
};

int cmd_serve(const ServeFlags& f, std::ostream& out) {
  ServiceConfig config;
  config.scene_dir = f.scenes.empty() ? scene_dir() : std::filesystem::path(f.scenes);
  config.max_concurrent_renders = std::max(1, f.max_renders);
  config.cors_origin = f.cors_origin;
  FrameService service(config);
  HttpServer server(service);
  const int port = server.bind(f.host, f.port);
  if (port < 0) throw CliFailure{kExitIoError, "io", "cannot bind " + f.host + ":" + std::to_string(f.port)};
  out << "serve listening on " << f.host << ":" << port << std::endl;
  server.listen_after_bind();
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stereoscopic cylindrical screen renderer", "scs"};
  app.require_subcommand(1);

  RenderFlags render;
  auto* render_cmd = app.add_subcommand("render", "Render a stereo frame to image file(s)");
  render_cmd->add_option("--scene", render.scene, "Scene file or bundled scene id")->required();
  render_cmd->add_option("--mode", render.mode, "scs | center | stitch | oracle | diff")->capture_default_str();
  render.head_opt = render_cmd->add_option("--head", render.head, "Head position x,y,z in meters");
  render_cmd->add_option("--ipd", render.ipd, "Interpupillary distance in meters")->capture_default_str();
  render.cube_res_opt = render_cmd->add_option("--cube-res", render.cube_res, "Cube face resolution")
                            ->capture_default_str();
  render.bilinear_opt = render_cmd->add_flag("--bilinear", render.bilinear, "Bilinear cubemap sampling");
  render.slits_opt = render_cmd->add_option("--slits", render.slits, "Stitch slit count")->capture_default_str();
  render.stereo_opt = render_cmd->add_flag("--stereo", render.stereo, "Stitch both eyes");
  render.supersample_opt =
      render_cmd->add_option("--supersample", render.supersample, "Oracle samples per pixel axis");
  render_cmd->add_option("--out", render.out, "Output image path")->required();
  render_cmd->add_option("--kind", render.kind, "left | right | both | anaglyph | sbs")->capture_default_str();
  render_cmd->add_option("--format", render.format, "ppm | png (default from extension)");
  render_cmd->add_option("--seed", render.seed, "Reserved; rendering is deterministic");
  render.screen.add(*render_cmd);

  ScreenFlags faces_screen;
  std::string faces_head;
  double faces_ipd = kDefaultIpd;
  auto* faces_cmd = app.add_subcommand("faces", "List the cube faces the projection reads");
  faces_cmd->add_option("--head", faces_head, "Head position x,y,z in meters");
  faces_cmd->add_option("--ipd", faces_ipd, "Interpupillary distance in meters")->capture_default_str();
  faces_screen.add(*faces_cmd);

  BenchFlags bench;
  auto* bench_cmd = app.add_subcommand("bench", "Sweep renderers and write a CSV table");
  bench_cmd->add_option("--scene", bench.scene, "Scene file or bundled scene id")->capture_default_str();
  bench_cmd->add_option("--head", bench.heads, "Head position x,y,z (repeatable)");
  bench_cmd->add_option("--poses-file", bench.poses_file, "File with one x,y,z[,ipd] per line");
  bench_cmd->add_option("--modes", bench.modes, "Comma list of scs, stitch, oracle")->capture_default_str();
  bench_cmd->add_option("--cube-res", bench.cube_res, "Comma list of cube resolutions")->capture_default_str();
  bench_cmd->add_option("--slits", bench.slits, "Comma list of slit counts")->capture_default_str();
  bench_cmd->add_option("--ipd", bench.ipd, "Interpupillary distance in meters")->capture_default_str();
  bench_cmd->add_option("--supersample", bench.supersample, "Oracle samples per pixel axis")->capture_default_str();
  bench_cmd->add_option("--out", bench.out, "CSV output path (default stdout)");
  bench.screen.add(*bench_cmd);

  ServeFlags serve;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP frame service");
  serve_cmd->add_option("--host", serve.host, "Bind address")->capture_default_str();
  serve_cmd->add_option("--port", serve.port, "TCP port")->capture_default_str();
  serve_cmd->add_option("--scenes", serve.scenes, "Scene fixture directory");
  serve_cmd->add_option("--max-renders", serve.max_renders, "Concurrent request cap")->capture_default_str();
  serve_cmd->add_option("--cors-origin", serve.cors_origin, "Allowed viewer origin")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: bad-args: " << e.what() << '\n';
    return kExitBadArgs;
  }

  try {
    if (*render_cmd) return cmd_render(render, out);
    if (*faces_cmd) return cmd_faces(faces_screen, faces_head, faces_ipd, out);
    if (*bench_cmd) return cmd_bench(bench, out);
    if (*serve_cmd) return cmd_serve(serve, out);
  } catch (const CliFailure& f) {
    std::string detail = f.detail;
    for (char& c : detail) {
      if (c == '\n') c = ' ';
    }
    err << "error: " << f.reason << ": " << detail << '\n';
    return f.status;
  } catch (const Error& e) {
    err << "error: render: " << e.what() << '\n';
    return kExitRenderError;
  }
  return kExitBadArgs;
}

}  // namespace scs
