// Copyright 2026 The WikiTIG Toolkit Authors
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

#ifndef WIKITIG_GEOMETRY_HPP_
#define WIKITIG_GEOMETRY_HPP_

#include <algorithm>
#include <cstdint>
#include <string>

#include "wikitig/error.hpp"

namespace wikitig {

inline constexpr int kImageGenSide = 256;

struct ScaledSize {
  int width = 0;
  int height = 0;
  friend bool operator==(const ScaledSize&, const ScaledSize&) = default;
};

// Resize target plus the square crop taken from it (image generation).
struct CropGeometry {
  int scaled_w = 0;
  int scaled_h = 0;
  int crop_x = 0;
  int crop_y = 0;
  int crop_side = 0;
  friend bool operator==(const CropGeometry&, const CropGeometry&) = default;
};

namespace geometry_detail {

inline void CheckDims(int w, int h) {
  if (w < 1 || h < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "image dimensions must be positive, got " + std::to_string(w) +
                    "x" + std::to_string(h));
  }
}

// round_half_up(length * target / short_side) in exact integer arithmetic.
inline int ScaleLength(int length, int target, int short_side) {
  const std::int64_t num = 2 * static_cast<std::int64_t>(length) * target + short_side;
  return static_cast<int>(num / (2 * static_cast<std::int64_t>(short_side)));
}

// Scales so the short side becomes exactly `target`.
inline ScaledSize ScaleShortSide(int w, int h, int target) {
  const int short_side = std::min(w, h);
  if (w <= h) return {target, ScaleLength(h, target, short_side)};
  return {ScaleLength(w, target, short_side), target};
}

}  // namespace geometry_detail

// Short side to 256 px (aspect kept), then a centered 256 px square.
inline CropGeometry ImageGenGeometry(int w, int h) {
  geometry_detail::CheckDims(w, h);
  const ScaledSize s = geometry_detail::ScaleShortSide(w, h, kImageGenSide);
  return CropGeometry{s.width, s.height, (s.width - kImageGenSide) / 2,
                      (s.height - kImageGenSide) / 2, kImageGenSide};
}

inline bool IsValidCap(int cap) { return cap == 256 || cap == 384 || cap == 480; }

// Downscales only: images whose short side is already <= cap are untouched.
inline ScaledSize TableGenGeometry(int w, int h, int cap) {
  geometry_detail::CheckDims(w, h);
  if (!IsValidCap(cap)) {
    throw Error(ErrorCode::kInvalidArgument,
                "cap must be 256, 384 or 480, got " + std::to_string(cap));
  }
  if (std::min(w, h) <= cap) return {w, h};
  return geometry_detail::ScaleShortSide(w, h, cap);
}

}  // namespace wikitig

#endif  // WIKITIG_GEOMETRY_HPP_
