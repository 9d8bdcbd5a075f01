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

#ifndef WIKITIG_PROMPT_HPP_
#define WIKITIG_PROMPT_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "wikitig/error.hpp"
#include "wikitig/table.hpp"

namespace wikitig {

inline constexpr std::string_view kTitlePromptPrefix = "What is the infobox of \" ";
inline constexpr std::string_view kTitlePromptSuffix = " \"?";
inline constexpr std::string_view kImageOnlyPrompt = "What is the infobox of the image?";
inline constexpr std::string_view kImagePromptPrefix = "What is the complete image? Caption: ";

// Table generation. With a title the entity name is quoted with inner
// spaces; without one the model only sees the image.
inline std::string FormatTablePrompt(const std::optional<std::string>& title,
                                     bool has_image) {
  if (title) {
    return std::string(kTitlePromptPrefix) + *title + std::string(kTitlePromptSuffix);
  }
  if (!has_image) {
    throw Error(ErrorCode::kInvalidArgument,
                "table prompt needs a title or an image");
  }
  return std::string(kImageOnlyPrompt);
}

// Image generation. An optional table is appended after the row separator.
inline std::string FormatImagePrompt(std::string_view caption,
                                     const InfoboxTable* table = nullptr) {
  if (caption.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "image prompt needs a caption");
  }
  std::string out = std::string(kImagePromptPrefix) + std::string(caption);
  if (table != nullptr) {
    out += kRowSeparator;
    out += Linearize(*table);
  }
  return out;
}

enum class PromptTemplate { kTableFromTitle, kTableFromImage, kImage };

struct RecognizedPrompt {
  PromptTemplate id;
  std::string title;             // kTableFromTitle
  std::string caption;           // kImage
  std::optional<std::string> table_linearized;  // kImage with a table

  friend bool operator==(const RecognizedPrompt&, const RecognizedPrompt&) = default;
};

// Inverse of the two formatters; nullopt if `prompt` matches no template.
inline std::optional<RecognizedPrompt> RecognizePrompt(std::string_view prompt) {
  if (prompt == kImageOnlyPrompt) {
    return RecognizedPrompt{PromptTemplate::kTableFromImage, {}, {}, std::nullopt};
  }
  if (prompt.starts_with(kTitlePromptPrefix) && prompt.ends_with(kTitlePromptSuffix) &&
      prompt.size() > kTitlePromptPrefix.size() + kTitlePromptSuffix.size()) {
    std::string title(prompt.substr(
        kTitlePromptPrefix.size(),
        prompt.size() - kTitlePromptPrefix.size() - kTitlePromptSuffix.size()));
    return RecognizedPrompt{PromptTemplate::kTableFromTitle, std::move(title), {},
                            std::nullopt};
  }
  if (prompt.starts_with(kImagePromptPrefix)) {
    std::string_view rest = prompt.substr(kImagePromptPrefix.size());
    RecognizedPrompt r{PromptTemplate::kImage, {}, {}, std::nullopt};
    if (const auto sep = rest.find(kRowSeparator); sep != std::string_view::npos) {
      r.table_linearized = std::string(rest.substr(sep + kRowSeparator.size()));
      rest = rest.substr(0, sep);
    }
    if (rest.empty()) return std::nullopt;
    r.caption = std::string(rest);
    return r;
  }
  return std::nullopt;
}

}  // namespace wikitig

#endif  // WIKITIG_PROMPT_HPP_
