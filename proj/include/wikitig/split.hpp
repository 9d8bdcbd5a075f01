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

#ifndef WIKITIG_SPLIT_HPP_
#define WIKITIG_SPLIT_HPP_

#include <openssl/sha.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "wikitig/error.hpp"

namespace wikitig {

enum class SplitLabel { kTrain, kValid, kTest };

inline constexpr SplitLabel kAllSplits[] = {SplitLabel::kTrain,
                                            SplitLabel::kValid,
                                            SplitLabel::kTest};

inline std::string_view SplitName(SplitLabel split) {
  switch (split) {
    case SplitLabel::kTrain: return "train";
    case SplitLabel::kValid: return "valid";
    case SplitLabel::kTest: return "test";
  }
  return "?";
}

inline SplitLabel ParseSplitName(std::string_view name) {
  if (name == "train") return SplitLabel::kTrain;
  if (name == "valid") return SplitLabel::kValid;
  if (name == "test") return SplitLabel::kTest;
  throw Error(ErrorCode::kParse, "unknown split \"" + std::string(name) + "\"");
}

using Sha256Digest = std::array<std::uint8_t, SHA256_DIGEST_LENGTH>;

inline Sha256Digest Sha256(std::string_view bytes) {
  Sha256Digest digest{};
  SHA256(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size(),
         digest.data());
  return digest;
}

// Residue of a big-endian unsigned integer modulo `m`, by Horner folding.
inline unsigned BigEndianMod(std::span<const std::uint8_t> bytes, unsigned m) {
  unsigned r = 0;
  for (std::uint8_t b : bytes) r = (r * 256u + b) % m;
  return r;
}

inline unsigned TitleResidue(std::string_view title) {
  return BigEndianMod(Sha256(title), 20);
}

// Residue 0 is test, 1 is valid, the rest train. The title is hashed byte
// for byte as extracted (UTF-8, no case or Unicode normalization).
inline SplitLabel AssignSplit(std::string_view title) {
  if (title.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "cannot assign split to empty title");
  }
  switch (TitleResidue(title)) {
    case 0: return SplitLabel::kTest;
    case 1: return SplitLabel::kValid;
    default: return SplitLabel::kTrain;
  }
}

}  // namespace wikitig

#endif  // WIKITIG_SPLIT_HPP_
