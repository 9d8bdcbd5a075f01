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

#ifndef WIKITIG_WIKITIG_HPP_
#define WIKITIG_WIKITIG_HPP_

#include "wikitig/dataset.hpp"
#include "wikitig/error.hpp"
#include "wikitig/evaluation.hpp"
#include "wikitig/extraction.hpp"
#include "wikitig/geometry.hpp"
#include "wikitig/metrics.hpp"
#include "wikitig/pages.hpp"
#include "wikitig/prompt.hpp"
#include "wikitig/split.hpp"
#include "wikitig/stats.hpp"
#include "wikitig/table.hpp"
#include "wikitig/text.hpp"

namespace wikitig {

#ifdef WIKITIG_VERSION
inline constexpr const char* kVersion = WIKITIG_VERSION;
#else
inline constexpr const char* kVersion = "0.1.0";
#endif

}  // namespace wikitig

#endif  // WIKITIG_WIKITIG_HPP_
