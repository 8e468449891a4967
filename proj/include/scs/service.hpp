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

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scs/geometry.hpp"
#include "scs/scene.hpp"

namespace scs {

inline constexpr int kDefaultServicePort = 8787;

struct ServiceConfig {
  std::filesystem::path scene_dir;
  /// Upper bound on requests handled at once; the rest wait in FIFO order.
  int max_concurrent_renders = 2;
  std::string cors_origin = "*";
};

struct HttpReply {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
  std::vector<std::pair<std::string, std::string>> headers;

  const std::string* header(std::string_view name) const;
};

/// Request handling for the interactive viewer. Scenes are loaded once at
/// construction; every handler is const and safe to call concurrently.
class FrameService {
 public:
  explicit FrameService(ServiceConfig config);

  /// GET /scenes
  HttpReply list_scenes() const;
  /// POST /render
  HttpReply render(std::string_view body, std::string_view accept = {}) const;
  /// POST /faces
  HttpReply faces(std::string_view body) const;

  const ServiceConfig& config() const { return config_; }

 private:
  struct Entry {
    std::string id;
    Scene scene;
  };

  ServiceConfig config_;
  std::vector<Entry> scenes_;
  std::vector<std::string> warnings_;
};

/// cpp-httplib front end over a FrameService.
class HttpServer {
 public:
  explicit HttpServer(const FrameService& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds to `port` (0 picks a free one) and returns the bound port, or -1.
  int bind(const std::string& host, int port);
  /// Blocks serving requests until stop().
  bool listen_after_bind();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace scs
