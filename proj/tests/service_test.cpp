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

#include <filesystem>
#include <fstream>
#include <thread>

#include <unistd.h>

#include "scs/service.hpp"
#include "test_support.hpp"

// After Eigen: httplib pulls in <resolv.h>, whose _res macro clashes with
// Eigen parameter names.
#include "httplib.h"
#include "json.hpp"

namespace scs {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

FrameService bundled_service() { return FrameService(ServiceConfig{SCS_TEST_SCENE_DIR}); }

int pass_count(const HttpReply& reply) {
  const std::string* h = reply.header("X-Pass-Count");
  return h ? std::stoi(*h) : -1;
}

TEST(FrameService, ListsBundledScenes) {
  const HttpReply reply = bundled_service().list_scenes();
  EXPECT_EQ(reply.status, 200);
  EXPECT_EQ(reply.header("X-Scene-Warning"), nullptr);
  const json list = json::parse(reply.body);
  ASSERT_EQ(list.size(), 3u);
  EXPECT_EQ(list[0]["id"], "checker-room");
  EXPECT_EQ(list[1]["id"], "depth-rings");
  EXPECT_EQ(list[1]["name"], "depth rings");
  EXPECT_EQ(list[2]["id"], "marker-sweep");
  EXPECT_GT(list[2]["primitive_count"].get<int>(), 0);
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("scs_service_test_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

TEST(FrameService, EmptyAndBrokenFixtureDirectories) {
  TempDir dir;
  EXPECT_EQ(FrameService(ServiceConfig{dir.path()}).list_scenes().body, "[]");
  EXPECT_EQ(FrameService(ServiceConfig{dir.path()}).list_scenes().status, 200);

  fs::copy_file(fs::path(SCS_TEST_SCENE_DIR) / "depth-rings.json", dir.path() / "good.json");
  std::ofstream(dir.path() / "broken.json") << "{ not json";
  const HttpReply reply = FrameService(ServiceConfig{dir.path()}).list_scenes();
  EXPECT_EQ(reply.status, 200);
  EXPECT_EQ(json::parse(reply.body).size(), 1u);
  ASSERT_NE(reply.header("X-Scene-Warning"), nullptr);
  EXPECT_NE(reply.header("X-Scene-Warning")->find("broken"), std::string::npos);
}

TEST(FrameService, RenderCenterHead) {
  const FrameService service = bundled_service();
  const HttpReply reply = service.render(
      R"({"scene":"depth-rings","head":{"x":0,"y":1.15,"z":0},"mode":"scs","kind":"anaglyph","scale":0.1,"cube_res":32})");
  ASSERT_EQ(reply.status, 200) << reply.body;
  EXPECT_EQ(reply.content_type, "image/png");
  EXPECT_EQ(pass_count(reply), 6);
  EXPECT_NE(reply.header("X-Render-Ms"), nullptr);
  EXPECT_EQ(reply.body.substr(1, 3), "PNG");
}

TEST(FrameService, RenderFormatNegotiation) {
  const FrameService service = bundled_service();
  const std::string body = R"({"scene":"checker-room","scale":0.1,"cube_res":8,"kind":"sbs"})";
  const HttpReply ppm = service.render(body, "image/x-portable-pixmap");
  ASSERT_EQ(ppm.status, 200);
  EXPECT_EQ(ppm.body.substr(0, 13), "P6\n540 23\n255");
  EXPECT_EQ(service.render(body, "image/png, */*").content_type, "image/png");
}

TEST(FrameService, RenderErrors) {
  const FrameService service = bundled_service();
  const auto check = [&](const std::string& body, int status, const std::string& field) {
    const HttpReply r = service.render(body);
    EXPECT_EQ(r.status, status) << body << " -> " << r.body;
    const json j = json::parse(r.body);
    EXPECT_TRUE(j.contains("error"));
    if (!field.empty()) EXPECT_EQ(j.value("field", ""), field) << body;
  };
  check(R"({"scene":"depth-rings","head":{"x":3.5,"y":1.15,"z":0},"scale":0.1})", 422, "/head");
  check(R"({"scene":"nowhere","scale":0.1})", 404, "/scene");
  check(R"({"scene":"depth-rings","scale":0.3})", 400, "/scale");
  check(R"({"scene":"depth-rings","mode":"stitch","cube_res":64})", 400, "/cube_res");
  check(R"({"scene":"depth-rings","slits":8})", 400, "/slits");
  check(R"({"scene":"depth-rings","cube_res":4096})", 400, "/cube_res");
  check(R"({"scene":"depth-rings","kind":"both"})", 400, "/kind");
  check(R"({"scene":"depth-rings","mode":"fast"})", 400, "/mode");
  check(R"({"scene":"depth-rings","colour":1})", 400, "/colour");
  check(R"({"scene":"depth-rings","head":{"x":"a"}})", 400, "/head/x");
  check("not json", 400, "");
  check(R"({"scene":"depth-rings","ipd":1e400})", 400, "");
}

TEST(FrameService, FacesMatchesPassCount) {
  const FrameService service = bundled_service();
  const json center = json::parse(service.faces(R"({"head":{"x":0,"y":1.15,"z":0}})").body);
  EXPECT_EQ(center["count"], 6);
  EXPECT_EQ(center["faces"].size(), 6u);
  EXPECT_EQ(center["faces"][0]["cubemap"], "North");
  EXPECT_EQ(center["faces"][0]["face"], "+X");

  for (const char* head : {R"({"x":0,"y":1.15,"z":2.7})", R"({"x":-1.9,"y":1.15,"z":-1.9})",
                           R"({"x":1.2,"y":0.8,"z":0.4})"}) {
    const std::string pose = std::string(R"("head":)") + head + R"(,"scale":0.2)";
    const HttpReply faces = service.faces("{" + pose + "}");
    ASSERT_EQ(faces.status, 200) << faces.body;
    const int count = json::parse(faces.body)["count"];
    EXPECT_LE(count, 20);
    const HttpReply render = service.render(R"({"scene":"depth-rings","cube_res":4,)" + pose + "}");
    ASSERT_EQ(render.status, 200) << render.body;
    EXPECT_EQ(pass_count(render), count) << head;
  }

  const HttpReply mono = service.faces(R"({"ipd":0,"screen":{"arc":360}})");
  ASSERT_EQ(mono.status, 200) << mono.body;
  EXPECT_EQ(json::parse(mono.body)["count"], 4);
  EXPECT_EQ(service.faces(R"({"ipd":0,"screen":{"arc":360}})").body, mono.body);

  EXPECT_EQ(service.faces(R"({"head":{"x":0,"y":1.15,"z":3.2}})").status, 422);
  EXPECT_EQ(service.faces(R"({"bogus":1})").status, 400);
}

TEST(FrameService, IdenticalRequestsAreByteIdentical) {
  const FrameService service = bundled_service();
  const std::string body = R"({"scene":"marker-sweep","head":{"x":0.4,"y":1.1,"z":-0.2},"scale":0.1,"cube_res":32})";
  EXPECT_EQ(service.render(body).body, service.render(body).body);
  const std::string stitch = R"({"scene":"marker-sweep","mode":"stitch","slits":16,"scale":0.1,"kind":"left"})";
  const HttpReply r = service.render(stitch);
  EXPECT_EQ(pass_count(r), 32);
  EXPECT_EQ(r.body, service.render(stitch).body);
}

TEST(FrameService, OtherModes) {
  const FrameService service = bundled_service();
  EXPECT_EQ(pass_count(service.render(R"({"scene":"depth-rings","mode":"center","head":{"x":1,"y":1,"z":1},"scale":0.1,"cube_res":4})")), 6);
  EXPECT_EQ(pass_count(service.render(R"({"scene":"depth-rings","mode":"oracle","scale":0.1})")), 2);
  const HttpReply diff = service.render(R"({"scene":"depth-rings","mode":"diff","scale":0.1,"cube_res":8,"kind":"left"})");
  EXPECT_EQ(diff.status, 200);
  EXPECT_EQ(pass_count(diff), 6);
}

class HttpServerTest : public ::testing::Test {
 protected:
  void SetUp() override {
    service_ = std::make_unique<FrameService>(ServiceConfig{SCS_TEST_SCENE_DIR, 2, "http://viewer.test"});
    server_ = std::make_unique<HttpServer>(*service_);
    port_ = server_->bind("127.0.0.1", 0);
    ASSERT_GT(port_, 0);
    thread_ = std::thread([this] { server_->listen_after_bind(); });
    server_->wait_until_ready();
  }
  void TearDown() override {
    server_->stop();
    if (thread_.joinable()) thread_.join();
  }

  std::unique_ptr<FrameService> service_;
  std::unique_ptr<HttpServer> server_;
  std::thread thread_;
  int port_ = 0;
};

TEST_F(HttpServerTest, EndToEnd) {
  httplib::Client client("127.0.0.1", port_);
  auto scenes = client.Get("/scenes");
  ASSERT_TRUE(scenes);
  EXPECT_EQ(scenes->status, 200);
  EXPECT_EQ(json::parse(scenes->body).size(), 3u);
  EXPECT_EQ(scenes->get_header_value("Access-Control-Allow-Origin"), "http://viewer.test");

  auto faces = client.Post("/faces", R"({"head":{"x":0,"y":1.15,"z":0}})", "application/json");
  ASSERT_TRUE(faces);
  EXPECT_EQ(json::parse(faces->body)["count"], 6);

  httplib::Headers accept = {{"Accept", "image/x-portable-pixmap"}};
  auto render = client.Post("/render", accept, R"({"scene":"depth-rings","scale":0.1,"cube_res":16})",
                            "application/json");
  ASSERT_TRUE(render);
  EXPECT_EQ(render->status, 200);
  EXPECT_EQ(render->get_header_value("X-Pass-Count"), "6");
  EXPECT_EQ(render->get_header_value("Content-Type"), "image/x-portable-pixmap");
  EXPECT_NE(render->get_header_value("Access-Control-Expose-Headers").find("X-Pass-Count"), std::string::npos);
  EXPECT_EQ(render->body, service_->render(R"({"scene":"depth-rings","scale":0.1,"cube_res":16})",
                                           "image/x-portable-pixmap")
                              .body);

  auto bad = client.Post("/render", R"({"scene":"x"})", "application/json");
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->status, 404);

  auto preflight = client.Options("/render");
  ASSERT_TRUE(preflight);
  EXPECT_EQ(preflight->status, 204);
  EXPECT_EQ(preflight->get_header_value("Access-Control-Allow-Methods"), "GET, POST, OPTIONS");
}

TEST_F(HttpServerTest, ConcurrentRequestsAgree) {
  const std::string body = R"({"scene":"checker-room","head":{"x":0.5,"y":1.2,"z":0.5},"scale":0.1,"cube_res":16})";
  std::vector<std::string> bodies(6);
  std::vector<std::thread> clients;
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    clients.emplace_back([&, i] {
      httplib::Client client("127.0.0.1", port_);
      client.set_read_timeout(60, 0);
      if (auto res = client.Post("/render", body, "application/json"); res && res->status == 200) {
        bodies[i] = res->body;
      }
    });
  }
  for (auto& t : clients) t.join();
  for (const auto& b : bodies) {
    EXPECT_FALSE(b.empty());
    EXPECT_EQ(b, bodies[0]);
  }
}

}  // namespace
}  // namespace scs
