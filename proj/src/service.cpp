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

#include "scs/service.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "httplib.h"
#include "json.hpp"
#include "scs/pipeline.hpp"

namespace scs {

using nlohmann::json;

const std::string* HttpReply::header(std::string_view name) const {
  for (const auto& [key, value] : headers) {
    if (key == name) return &value;
  }
  return nullptr;
}

namespace {

constexpr std::array<double, 4> kCanvasScales = {0.1, 0.2, 0.5, 1.0};
constexpr int kMaxCubeResolution = 1024;
constexpr int kMaxSlits = 256;

/// A client mistake with the HTTP status it maps to.
struct RequestError {
  int status;
  std::string field;
  std::string message;
};

HttpReply json_reply(int status, const json& body) {
  HttpReply reply;
  reply.status = status;
  reply.body = body.dump();
  return reply;
}

HttpReply error_reply(const RequestError& e) {
  json body = {{"error", e.message}};
  if (!e.field.empty()) body["field"] = e.field;
  return json_reply(e.status, body);
}

json parse_body(std::string_view body) {
  try {
    json doc = json::parse(body.empty() ? std::string_view("{}") : body);
    if (!doc.is_object()) throw RequestError{400, "", "request body must be a JSON object"};
    return doc;
  } catch (const json::parse_error& e) {
    throw RequestError{400, "", std::string("malformed JSON: ") + e.what()};
  } catch (const json::out_of_range& e) {
    throw RequestError{400, "", std::string("number out of range: ") + e.what()};
  }
}

void reject_unknown(const json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw RequestError{400, path + "/" + key, "unknown field"};
    }
  }
}

double number_field(const json& obj, const std::string& path, const char* key, double fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number() || !std::isfinite(it->get<double>())) {
    throw RequestError{400, path + "/" + key, "expected a finite number"};
  }
  return it->get<double>();
}

std::string string_field(const json& obj, const char* key, const std::string& fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_string()) throw RequestError{400, std::string("/") + key, "expected a string"};
  return it->get<std::string>();
}

int int_field(const json& obj, const char* key, int fallback, int lo, int hi) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number_integer()) throw RequestError{400, std::string("/") + key, "expected an integer"};
  const long long v = it->get<long long>();
  if (v < lo || v > hi) {
    throw RequestError{400, std::string("/") + key,
                       "must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]"};
  }
  return static_cast<int>(v);
}

/// Screen overrides, canvas scale preset, head and ipd shared by /render and
/// /faces.
struct PoseRequest {
  ScreenConfig screen;
  HeadPose head;
};

PoseRequest read_pose(const json& doc) {
  PoseRequest req;
  if (auto it = doc.find("screen"); it != doc.end()) {
    if (!it->is_object()) throw RequestError{400, "/screen", "expected an object"};
    reject_unknown(*it, "/screen", {"radius", "height", "arc"});
    req.screen.radius = number_field(*it, "/screen", "radius", req.screen.radius);
    req.screen.height = number_field(*it, "/screen", "height", req.screen.height);
    req.screen.arc_degrees = number_field(*it, "/screen", "arc", req.screen.arc_degrees);
  }
  const double scale = number_field(doc, "", "scale", 1.0);
  if (std::find(kCanvasScales.begin(), kCanvasScales.end(), scale) == kCanvasScales.end()) {
    throw RequestError{400, "/scale", "scale must be one of 0.1, 0.2, 0.5, 1"};
  }
  const ScreenConfig defaults;
  req.screen.canvas_width = static_cast<int>(std::lround(defaults.canvas_width * scale));
  req.screen.canvas_height = static_cast<int>(std::lround(defaults.canvas_height * scale));
  try {
    req.screen.validate();
  } catch (const Error& e) {
    throw RequestError{400, "/screen", e.what()};
  }

  req.head = HeadPose::centered(req.screen);
  req.head.ipd = number_field(doc, "", "ipd", kDefaultIpd);
  if (auto it = doc.find("head"); it != doc.end()) {
    if (!it->is_object()) throw RequestError{400, "/head", "expected an object"};
    reject_unknown(*it, "/head", {"x", "y", "z"});
    req.head.position = {number_field(*it, "/head", "x", req.head.position.x()),
                         number_field(*it, "/head", "y", req.head.position.y()),
                         number_field(*it, "/head", "z", req.head.position.z())};
  }
  try {
    req.head.validate(req.screen);
  } catch (const Error& e) {
    throw RequestError{422, "/head", e.what()};
  }
  return req;
}

std::string display_name(const std::string& id) {
  std::string name = id;
  std::replace(name.begin(), name.end(), '-', ' ');
  return name;
}

}  // namespace

FrameService::FrameService(ServiceConfig config) : config_(std::move(config)) {
  std::error_code ec;
  if (config_.scene_dir.empty() || !std::filesystem::is_directory(config_.scene_dir, ec)) return;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(config_.scene_dir, ec)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    try {
      scenes_.push_back({path.stem().string(), load_scene_file(path)});
    } catch (const Error& e) {
      warnings_.push_back(path.stem().string() + ": " + e.what());
    }
  }
}

HttpReply FrameService::list_scenes() const {
  json list = json::array();
  for (const auto& entry : scenes_) {
    list.push_back({{"id", entry.id},
                    {"name", display_name(entry.id)},
                    {"primitive_count", entry.scene.primitives.size()}});
  }
  HttpReply reply = json_reply(200, list);
  if (!warnings_.empty()) {
    std::string joined;
    for (const auto& w : warnings_) joined += (joined.empty() ? "" : "; ") + w;
    std::replace(joined.begin(), joined.end(), '\n', ' ');
    reply.headers.emplace_back("X-Scene-Warning", joined);
  }
  return reply;
}

HttpReply FrameService::render(std::string_view body, std::string_view accept) const {
  try {
    const json doc = parse_body(body);
    reject_unknown(doc, "", {"scene", "head", "ipd", "mode", "kind", "cube_res", "slits", "scale", "format", "screen"});

    RenderJob job;
    try {
      job.mode = parse_render_mode(string_field(doc, "mode", "scs"));
    } catch (const Error& e) {
      throw RequestError{400, "/mode", e.what()};
    }
    OutputKind kind;
    try {
      kind = parse_output_kind(string_field(doc, "kind", "anaglyph"));
    } catch (const Error& e) {
      throw RequestError{400, "/kind", e.what()};
    }
    if (kind == OutputKind::kBoth) throw RequestError{400, "/kind", "kind 'both' is CLI-only; use sbs"};

    const bool uses_cubes = job.mode == RenderMode::kScs || job.mode == RenderMode::kCenter ||
                            job.mode == RenderMode::kDiff;
    if (doc.contains("cube_res") && !uses_cubes) {
      throw RequestError{400, "/cube_res", "cube_res applies only to scs, center and diff modes"};
    }
    if (doc.contains("slits") && job.mode != RenderMode::kStitch) {
      throw RequestError{400, "/slits", "slits applies only to stitch mode"};
    }
    job.cube_resolution = int_field(doc, "cube_res", 256, 2, kMaxCubeResolution);
    job.slit_count = int_field(doc, "slits", 32, 1, kMaxSlits);
    job.stitch_stereo = true;

    std::string format = string_field(doc, "format", "");
    if (format.empty()) {
      format = accept.find("image/x-portable-pixmap") != std::string_view::npos ? "ppm" : "png";
    }
    if (format != "png" && format != "ppm") throw RequestError{400, "/format", "format must be png or ppm"};

    const std::string scene_id = string_field(doc, "scene", "");
    if (scene_id.empty()) throw RequestError{400, "/scene", "missing scene id"};
    const auto entry = std::find_if(scenes_.begin(), scenes_.end(), [&](const Entry& e) { return e.id == scene_id; });
    if (entry == scenes_.end()) throw RequestError{404, "/scene", "unknown scene '" + scene_id + "'"};

    const PoseRequest pose = read_pose(doc);
    job.screen = pose.screen;
    job.head = pose.head;
    if (job.mode == RenderMode::kCenter) job.head = HeadPose::centered(job.screen, job.head.ipd);

    const RenderOutput output = run_render_job(entry->scene, job);
    const auto images = select_output(output.canvas, kind);

    HttpReply reply;
    reply.status = 200;
    const bool png = format == "png";
    reply.content_type = png ? "image/png" : "image/x-portable-pixmap";
    reply.body = encode_image(images.front().second, png ? ImageFormat::kPng : ImageFormat::kPpm);
    char ms[32];
    std::snprintf(ms, sizeof(ms), "%.3f", output.wall_ms);
    reply.headers.emplace_back("X-Pass-Count", std::to_string(output.pass_count));
    reply.headers.emplace_back("X-Render-Ms", ms);
    return reply;
  } catch (const RequestError& e) {
    return error_reply(e);
  } catch (const Error& e) {
    return error_reply({e.kind() == ErrorKind::kInvalidHead ? 422 : 500, "", e.what()});
  }
}

HttpReply FrameService::faces(std::string_view body) const {
  try {
    const json doc = parse_body(body);
    reject_unknown(doc, "", {"head", "ipd", "screen", "scale"});
    const PoseRequest pose = read_pose(doc);
    const FaceSet set = visible_faces(pose.head, pose.screen);
    json list = json::array();
    for (const CubeFace& cf : set) {
      list.push_back({{"cubemap", std::string(to_string(cf.cubemap))}, {"face", std::string(to_string(cf.face))}});
    }
    return json_reply(200, {{"faces", list}, {"count", set.size()}});
  } catch (const RequestError& e) {
    return error_reply(e);
  } catch (const Error& e) {
    return error_reply({e.kind() == ErrorKind::kInvalidHead ? 422 : 500, "", e.what()});
  }
}

struct HttpServer::Impl {
  const FrameService& service;
  httplib::Server server;

  explicit Impl(const FrameService& s) : service(s) {}

  void send(const HttpReply& reply, httplib::Response& res) const {
    res.status = reply.status;
    for (const auto& [key, value] : reply.headers) res.set_header(key, value);
    res.set_content(reply.body, reply.content_type);
  }
};

HttpServer::HttpServer(const FrameService& service) : impl_(std::make_unique<Impl>(service)) {
  auto& server = impl_->server;
  const int workers = std::max(1, service.config().max_concurrent_renders);
  server.new_task_queue = [workers] { return new httplib::ThreadPool(static_cast<size_t>(workers)); };

  const std::string origin = service.config().cors_origin;
  server.set_default_headers({
      {"Access-Control-Allow-Origin", origin},
      {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
      {"Access-Control-Allow-Headers", "Content-Type, Accept"},
      {"Access-Control-Expose-Headers", "X-Pass-Count, X-Render-Ms, X-Scene-Warning"},
  });
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  Impl* impl = impl_.get();
  server.Get("/scenes", [impl](const httplib::Request&, httplib::Response& res) {
    impl->send(impl->service.list_scenes(), res);
  });
  server.Post("/render", [impl](const httplib::Request& req, httplib::Response& res) {
    impl->send(impl->service.render(req.body, req.get_header_value("Accept")), res);
  });
  server.Post("/faces", [impl](const httplib::Request& req, httplib::Response& res) {
    impl->send(impl->service.faces(req.body), res);
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen_after_bind() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_) impl_->server.stop();
}

void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace scs
