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

#include "scs/scene.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"

namespace scs {

using nlohmann::json;

std::string_view to_string(SceneErrorCode code) {
  switch (code) {
    case SceneErrorCode::kMalformed: return "malformed";
    case SceneErrorCode::kUnknownKind: return "unknown-kind";
    case SceneErrorCode::kUnknownField: return "unknown-field";
    case SceneErrorCode::kNonFinite: return "non-finite";
    case SceneErrorCode::kNonUnitLight: return "non-unit-light";
    case SceneErrorCode::kInvalidValue: return "invalid-value";
  }
  return "unknown";
}

namespace {

void check_fields(const json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) throw SceneError(SceneErrorCode::kMalformed, path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto name : allowed) known = known || key == name;
    if (!known) throw SceneError(SceneErrorCode::kUnknownField, path + "/" + key, "unknown field");
  }
}

const json& require(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SceneError(SceneErrorCode::kMalformed, path + "/" + key, "missing field");
  return *it;
}

double read_number(const json& value, const std::string& path) {
  if (!value.is_number()) throw SceneError(SceneErrorCode::kMalformed, path, "expected a number");
  const double v = value.get<double>();
  if (!std::isfinite(v)) throw SceneError(SceneErrorCode::kNonFinite, path, "number is not finite");
  return v;
}

Eigen::Vector3d read_vec3(const json& value, const std::string& path) {
  if (!value.is_array() || value.size() != 3) {
    throw SceneError(SceneErrorCode::kMalformed, path, "expected an array of 3 numbers");
  }
  return {read_number(value[0], path + "/0"), read_number(value[1], path + "/1"),
          read_number(value[2], path + "/2")};
}

Color read_color(const json& value, const std::string& path) {
  Color c = read_vec3(value, path);
  if ((c.array() < 0).any() || (c.array() > 1).any()) {
    throw SceneError(SceneErrorCode::kInvalidValue, path, "color channels must be in [0,1]");
  }
  return c;
}

double read_positive(const json& obj, const std::string& path, const char* key) {
  const std::string p = path + "/" + key;
  const double v = read_number(require(obj, path, key), p);
  if (!(v > 0)) throw SceneError(SceneErrorCode::kInvalidValue, p, "must be > 0");
  return v;
}

Primitive read_primitive(const json& obj, const std::string& path) {
  if (!obj.is_object()) throw SceneError(SceneErrorCode::kMalformed, path, "expected an object");
  const json& type = require(obj, path, "type");
  if (!type.is_string()) throw SceneError(SceneErrorCode::kMalformed, path + "/type", "expected a string");
  const auto kind = type.get<std::string>();

  if (kind == "sphere") {
    check_fields(obj, path, {"type", "center", "radius", "albedo"});
    return Sphere{read_vec3(require(obj, path, "center"), path + "/center"), read_positive(obj, path, "radius"),
                  read_color(require(obj, path, "albedo"), path + "/albedo")};
  }
  if (kind == "marker") {
    check_fields(obj, path, {"type", "center", "radius", "color"});
    return Marker{read_vec3(require(obj, path, "center"), path + "/center"), read_positive(obj, path, "radius"),
                  read_color(require(obj, path, "color"), path + "/color")};
  }
  if (kind == "quad") {
    check_fields(obj, path, {"type", "corner", "edge_u", "edge_v", "albedo", "checker"});
    Quad quad{read_vec3(require(obj, path, "corner"), path + "/corner"),
              read_vec3(require(obj, path, "edge_u"), path + "/edge_u"),
              read_vec3(require(obj, path, "edge_v"), path + "/edge_v"),
              read_color(require(obj, path, "albedo"), path + "/albedo"), std::nullopt};
    const double nu = quad.edge_u.norm();
    const double nv = quad.edge_v.norm();
    if (nu == 0) throw SceneError(SceneErrorCode::kInvalidValue, path + "/edge_u", "edge must be nonzero");
    if (nv == 0) throw SceneError(SceneErrorCode::kInvalidValue, path + "/edge_v", "edge must be nonzero");
    if (quad.edge_u.cross(quad.edge_v).norm() <= 1e-12 * nu * nv) {
      throw SceneError(SceneErrorCode::kInvalidValue, path + "/edge_v", "edges must not be parallel");
    }
    if (auto it = obj.find("checker"); it != obj.end()) {
      const std::string cp = path + "/checker";
      check_fields(*it, cp, {"albedo2", "cells"});
      const json& cells = require(*it, cp, "cells");
      if (!cells.is_number_integer() || cells.get<long long>() < 1) {
        throw SceneError(SceneErrorCode::kInvalidValue, cp + "/cells", "must be an integer >= 1");
      }
      quad.checker = Checker{read_color(require(*it, cp, "albedo2"), cp + "/albedo2"), cells.get<int>()};
    }
    return quad;
  }
  throw SceneError(SceneErrorCode::kUnknownKind, path + "/type", "unknown primitive kind '" + kind + "'");
}

json vec_json(const Eigen::Vector3d& v) { return json::array({v.x(), v.y(), v.z()}); }

}  // namespace

Scene parse_scene(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SceneError(SceneErrorCode::kMalformed, "", e.what());
  } catch (const json::out_of_range& e) {
    // Literals such as 1e400 overflow while parsing, before any path is known.
    throw SceneError(SceneErrorCode::kNonFinite, "", e.what());
  }
  check_fields(doc, "", {"background", "light_dir", "primitives"});

  Scene scene;
  scene.background = read_color(require(doc, "", "background"), "/background");
  scene.light_dir = read_vec3(require(doc, "", "light_dir"), "/light_dir");
  if (std::abs(scene.light_dir.norm() - 1.0) > 1e-6) {
    throw SceneError(SceneErrorCode::kNonUnitLight, "/light_dir", "light direction must be unit length");
  }
  const json& prims = require(doc, "", "primitives");
  if (!prims.is_array()) throw SceneError(SceneErrorCode::kMalformed, "/primitives", "expected an array");

  std::set<std::array<double, 3>> marker_colors;
  for (std::size_t i = 0; i < prims.size(); ++i) {
    const std::string path = "/primitives/" + std::to_string(i);
    Primitive p = read_primitive(prims[i], path);
    if (const auto* m = std::get_if<Marker>(&p)) {
      if (!marker_colors.insert({m->id_color.x(), m->id_color.y(), m->id_color.z()}).second) {
        throw SceneError(SceneErrorCode::kInvalidValue, path + "/color", "marker colors must be unique");
      }
    }
    scene.primitives.push_back(std::move(p));
  }
  return scene;
}

std::string serialize_scene(const Scene& scene) {
  json prims = json::array();
  for (const auto& prim : scene.primitives) {
    std::visit(
        [&](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          json obj;
          if constexpr (std::is_same_v<T, Sphere>) {
            obj = {{"type", "sphere"}, {"center", vec_json(p.center)}, {"radius", p.radius},
                   {"albedo", vec_json(p.albedo)}};
          } else if constexpr (std::is_same_v<T, Marker>) {
            obj = {{"type", "marker"}, {"center", vec_json(p.center)}, {"radius", p.radius},
                   {"color", vec_json(p.id_color)}};
          } else {
            obj = {{"type", "quad"}, {"corner", vec_json(p.corner)}, {"edge_u", vec_json(p.edge_u)},
                   {"edge_v", vec_json(p.edge_v)}, {"albedo", vec_json(p.albedo)}};
            if (p.checker) {
              obj["checker"] = {{"albedo2", vec_json(p.checker->albedo2)}, {"cells", p.checker->cells}};
            }
          }
          prims.push_back(std::move(obj));
        },
        prim);
  }
  json doc = {{"background", vec_json(scene.background)},
              {"light_dir", vec_json(scene.light_dir)},
              {"primitives", std::move(prims)}};
  return doc.dump(2) + "\n";
}

Scene load_scene_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot read scene file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scene(buffer.str());
}

namespace {

bool intersect_sphere(const Point3d& center, double radius, const Point3d& origin, const Vector3d& dir, double& t) {
  const Vector3d oc = origin - center;
  const double b = oc.dot(dir);
  const double c = oc.squaredNorm() - radius * radius;
  const double disc = b * b - c;
  if (disc < 0) return false;
  const double root = std::sqrt(disc);
  const double t0 = -b - root;
  const double t1 = -b + root;
  if (t0 > kHitEpsilon) {
    t = t0;
    return true;
  }
  if (t1 > kHitEpsilon) {
    t = t1;
    return true;
  }
  return false;
}

bool intersect_quad(const Quad& q, const Point3d& origin, const Vector3d& dir, double& t, double& s_out,
                    double& t_out) {
  const Vector3d n = q.edge_u.cross(q.edge_v);
  const double denom = n.dot(dir);
  if (std::abs(denom) < 1e-15 * n.norm()) return false;
  const double hit_t = n.dot(q.corner - origin) / denom;
  if (!(hit_t > kHitEpsilon)) return false;
  const Vector3d w = origin + hit_t * dir - q.corner;
  const double nn = n.squaredNorm();
  const double s = n.dot(w.cross(q.edge_v)) / nn;
  const double r = n.dot(q.edge_u.cross(w)) / nn;
  if (s < 0 || s > 1 || r < 0 || r > 1) return false;
  t = hit_t;
  s_out = s;
  t_out = r;
  return true;
}

Vector3d facing(Vector3d normal, const Vector3d& dir) { return normal.dot(dir) > 0 ? -normal : normal; }

}  // namespace

std::optional<Hit> intersect(const Scene& scene, const Point3d& origin, const Vector3d& dir) {
  std::optional<Hit> best;
  double best_t = std::numeric_limits<double>::infinity();
  for (const auto& prim : scene.primitives) {
    if (const auto* s = std::get_if<Sphere>(&prim)) {
      double t;
      if (intersect_sphere(s->center, s->radius, origin, dir, t) && t < best_t) {
        best_t = t;
        const Point3d p = origin + t * dir;
        best = Hit{t, p, facing((p - s->center) / s->radius, dir), s->albedo, false};
      }
    } else if (const auto* m = std::get_if<Marker>(&prim)) {
      double t;
      if (intersect_sphere(m->center, m->radius, origin, dir, t) && t < best_t) {
        best_t = t;
        const Point3d p = origin + t * dir;
        best = Hit{t, p, facing((p - m->center) / m->radius, dir), m->id_color, true};
      }
    } else {
      const auto& q = std::get<Quad>(prim);
      double t, s, r;
      if (intersect_quad(q, origin, dir, t, s, r) && t < best_t) {
        best_t = t;
        Color albedo = q.albedo;
        if (q.checker) {
          const int cells = q.checker->cells;
          const int i = std::min(static_cast<int>(s * cells), cells - 1);
          const int j = std::min(static_cast<int>(r * cells), cells - 1);
          if ((i + j) % 2 == 1) albedo = q.checker->albedo2;
        }
        best = Hit{t, origin + t * dir, facing(q.edge_u.cross(q.edge_v).normalized(), dir), albedo, false};
      }
    }
  }
  return best;
}

Color shade(const Hit& hit, const Scene& scene) {
  if (hit.unlit) return hit.color;
  const double lambert = std::max(0.0, hit.normal.dot(-scene.light_dir));
  const Color c = hit.color * lambert * 0.9 + hit.color * 0.1;
  return c.cwiseMax(0.0).cwiseMin(1.0);
}

Color trace(const Scene& scene, const Point3d& origin, const Vector3d& dir, double* depth) {
  const auto hit = intersect(scene, origin, dir);
  if (depth) *depth = hit ? hit->t : std::numeric_limits<double>::infinity();
  return hit ? shade(*hit, scene) : scene.background;
}

bool operator==(const Scene& a, const Scene& b) {
  if (a.background != b.background || a.light_dir != b.light_dir) return false;
  if (a.primitives.size() != b.primitives.size()) return false;
  for (std::size_t i = 0; i < a.primitives.size(); ++i) {
    const auto& pa = a.primitives[i];
    const auto& pb = b.primitives[i];
    if (pa.index() != pb.index()) return false;
    if (const auto* s = std::get_if<Sphere>(&pa)) {
      const auto& t = std::get<Sphere>(pb);
      if (s->center != t.center || s->radius != t.radius || s->albedo != t.albedo) return false;
    } else if (const auto* m = std::get_if<Marker>(&pa)) {
      const auto& n = std::get<Marker>(pb);
      if (m->center != n.center || m->radius != n.radius || m->id_color != n.id_color) return false;
    } else {
      const auto& q = std::get<Quad>(pa);
      const auto& r = std::get<Quad>(pb);
      if (q.corner != r.corner || q.edge_u != r.edge_u || q.edge_v != r.edge_v || q.albedo != r.albedo) return false;
      if (q.checker.has_value() != r.checker.has_value()) return false;
      if (q.checker && (q.checker->albedo2 != r.checker->albedo2 || q.checker->cells != r.checker->cells)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace scs
