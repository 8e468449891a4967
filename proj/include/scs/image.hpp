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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "scs/types.hpp"

namespace scs {

struct Rgb8 {
  std::uint8_t r = 0, g = 0, b = 0;
  auto operator<=>(const Rgb8&) const = default;
};

/// The only place float color becomes bytes.
inline std::uint8_t quantize_channel(double v) {
  const double c = v < 0 ? 0 : (v > 1 ? 1 : v);
  return static_cast<std::uint8_t>(c * 255.0 + 0.5);
}

inline Rgb8 quantize(const Color& c) { return {quantize_channel(c.x()), quantize_channel(c.y()), quantize_channel(c.z())}; }

/// RGB8 raster. Row 0 is the bottom of the image (canvas convention); file
/// writers emit the top row first.
class Image {
 public:
  Image() = default;
  Image(int width, int height, Rgb8 fill = {});

  int width() const { return width_; }
  int height() const { return height_; }
  bool empty() const { return width_ == 0 || height_ == 0; }

  Rgb8& at(int x, int y) { return pixels_[static_cast<std::size_t>(y) * width_ + x]; }
  const Rgb8& at(int x, int y) const { return pixels_[static_cast<std::size_t>(y) * width_ + x]; }

  const std::vector<Rgb8>& pixels() const { return pixels_; }

  bool operator==(const Image&) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<Rgb8> pixels_;
};

/// Binary P6, maxval 255, no comments.
std::string encode_ppm(const Image& image);
Image decode_ppm(const std::string& bytes);

std::string encode_png(const Image& image);

enum class ImageFormat { kPpm, kPng };

std::string encode_image(const Image& image, ImageFormat format);

/// Writes through a temporary file in the same directory and renames it into
/// place.
void write_file_atomic(const std::filesystem::path& path, const std::string& bytes);

}  // namespace scs
