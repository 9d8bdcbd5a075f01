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

#ifndef WIKITIG_METRICS_HPP_
#define WIKITIG_METRICS_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wikitig/error.hpp"
#include "wikitig/porter.hpp"
#include "wikitig/table.hpp"

namespace wikitig {

// Element counts of one cell type, for one table or pooled over a corpus.
class CellMultiset {
 public:
  explicit CellMultiset(CellType type) : type_(type) {}

  CellMultiset(CellType type, const CellList& cells) : type_(type) {
    for (auto& e : TypedElements(cells)) {
      if (e.type == type_) Add(e);
    }
  }

  CellType type() const { return type_; }

  void Add(const TypedElement& e, std::size_t n = 1) {
    if (e.type != type_) {
      throw Error(ErrorCode::kTypeMismatch, "element type differs from multiset type");
    }
    if (n == 0) return;
    counts_[e] += n;
    total_ += n;
  }

  std::size_t count(const TypedElement& e) const {
    const auto it = counts_.find(e);
    return it == counts_.end() ? 0 : it->second;
  }

  std::size_t total() const { return total_; }
  bool empty() const { return total_ == 0; }
  const std::map<TypedElement, std::size_t>& counts() const { return counts_; }

  CellMultiset& operator+=(const CellMultiset& other) {
    for (const auto& [e, n] : other.counts_) Add(e, n);
    return *this;
  }

 private:
  CellType type_;
  std::map<TypedElement, std::size_t> counts_;
  std::size_t total_ = 0;
};

inline std::size_t ClippedMatch(const CellMultiset& gen, const CellMultiset& ref,
                                const TypedElement& e) {
  if (gen.type() != ref.type() || e.type != gen.type()) {
    throw Error(ErrorCode::kTypeMismatch, "clipped match across cell types");
  }
  return std::min(gen.count(e), ref.count(e));
}

// Sum of clipped matches over every element.
inline std::size_t TotalClippedMatch(const CellMultiset& gen, const CellMultiset& ref) {
  if (gen.type() != ref.type()) {
    throw Error(ErrorCode::kTypeMismatch, "clipped match across cell types");
  }
  const auto& small = gen.counts().size() <= ref.counts().size() ? gen : ref;
  const auto& large = &small == &gen ? ref : gen;
  std::size_t total = 0;
  for (const auto& [e, n] : small.counts()) total += std::min(n, large.count(e));
  return total;
}

struct PRF {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  friend bool operator==(const PRF&, const PRF&) = default;
};

// Zero denominators give 0; F1 is 0 when P + R is 0.
inline PRF MakePrf(std::size_t match, std::size_t generated, std::size_t reference) {
  PRF out;
  out.precision = generated == 0 ? 0.0 : static_cast<double>(match) / generated;
  out.recall = reference == 0 ? 0.0 : static_cast<double>(match) / reference;
  const double sum = out.precision + out.recall;
  out.f1 = sum > 0.0 ? 2.0 * out.precision * out.recall / sum : 0.0;
  return out;
}

inline PRF ScoreMultisets(const CellMultiset& gen, const CellMultiset& ref) {
  return MakePrf(TotalClippedMatch(gen, ref), gen.total(), ref.total());
}

namespace metrics_detail {

inline void CheckAligned(std::size_t gen, std::size_t ref) {
  if (gen != ref) {
    throw Error(ErrorCode::kLengthMismatch,
                "generated and reference lists differ in length (" +
                    std::to_string(gen) + " vs " + std::to_string(ref) + ")");
  }
  if (gen == 0) throw Error(ErrorCode::kEmptyInput, "no documents to evaluate");
}

}  // namespace metrics_detail

struct TableF1Result {
  double mean = 0.0;  // over included documents; 0 if none are included
  std::size_t included = 0;
  // nullopt where neither side has an element of the type.
  std::vector<std::optional<double>> per_doc;
};

// Per-document clipped F1 for one cell type, averaged over documents.
// Generated tables may be empty (unparseable output scores 0).
inline TableF1Result TableF1(std::span<const CellList> gen,
                             std::span<const CellList> ref, CellType type) {
  metrics_detail::CheckAligned(gen.size(), ref.size());
  TableF1Result out;
  out.per_doc.reserve(gen.size());
  double sum = 0.0;
  for (std::size_t d = 0; d < gen.size(); ++d) {
    const CellMultiset g(type, gen[d]);
    const CellMultiset r(type, ref[d]);
    if (g.empty() && r.empty()) {
      out.per_doc.push_back(std::nullopt);
      continue;
    }
    const double f1 = ScoreMultisets(g, r).f1;
    out.per_doc.push_back(f1);
    sum += f1;
    ++out.included;
  }
  if (out.included > 0) out.mean = sum / static_cast<double>(out.included);
  return out;
}

// Clipped P/R/F1 on element counts pooled over the whole corpus.
inline PRF CorpusF1(std::span<const CellList> gen, std::span<const CellList> ref,
                    CellType type) {
  metrics_detail::CheckAligned(gen.size(), ref.size());
  CellMultiset pooled_gen(type);
  CellMultiset pooled_ref(type);
  for (std::size_t d = 0; d < gen.size(); ++d) {
    pooled_gen += CellMultiset(type, gen[d]);
    pooled_ref += CellMultiset(type, ref[d]);
  }
  return ScoreMultisets(pooled_gen, pooled_ref);
}

// ---------------------------------------------------------------------------
// ROUGE

struct RougeOptions {
  // Porter-stem purely alphabetic tokens longer than three characters.
  bool stem = false;
};

// Separators become spaces, text is ASCII-lowercased and split on whitespace.
inline std::vector<std::string> RougePreprocess(std::string_view linearized,
                                                const RougeOptions& options = {}) {
  std::string flat;
  flat.reserve(linearized.size());
  for (std::size_t i = 0; i < linearized.size(); ++i) {
    if (linearized.compare(i, 2, "<>") == 0) {
      flat.push_back(' ');
      ++i;
    } else if (linearized[i] == '|') {
      flat.push_back(' ');
    } else {
      flat.push_back(text_detail::AsciiLower(linearized[i]));
    }
  }
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < flat.size()) {
    const std::size_t ws = text_detail::WhitespaceLength(flat, i);
    if (ws > 0) {
      i += ws;
      continue;
    }
    std::size_t j = i;
    while (j < flat.size() && text_detail::WhitespaceLength(flat, j) == 0) ++j;
    tokens.emplace_back(flat.substr(i, j - i));
    i = j;
  }
  if (options.stem) {
    PorterStemmer stemmer;
    for (auto& t : tokens) {
      if (t.size() > 3 &&
          std::all_of(t.begin(), t.end(), [](char c) { return c >= 'a' && c <= 'z'; })) {
        t = stemmer.Stem(t);
      }
    }
  }
  return tokens;
}

// ROUGE-N with clipped n-gram counts, n in {1, 2}.
inline PRF RougeN(std::span<const std::string> gen, std::span<const std::string> ref,
                  int n) {
  if (n != 1 && n != 2) {
    throw Error(ErrorCode::kInvalidArgument, "ROUGE-N supports n = 1 or 2");
  }
  auto grams = [n](std::span<const std::string> tokens) {
    std::map<std::vector<std::string_view>, std::size_t> counts;
    const auto len = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i + len <= tokens.size(); ++i) {
      std::vector<std::string_view> key;
      for (std::size_t k = 0; k < len; ++k) key.emplace_back(tokens[i + k]);
      ++counts[key];
    }
    return counts;
  };
  const auto g = grams(gen);
  const auto r = grams(ref);
  std::size_t g_total = 0;
  std::size_t r_total = 0;
  std::size_t match = 0;
  for (const auto& [k, c] : g) {
    g_total += c;
    if (const auto it = r.find(k); it != r.end()) match += std::min(c, it->second);
  }
  for (const auto& [k, c] : r) r_total += c;
  return MakePrf(match, g_total, r_total);
}

inline std::size_t LcsLength(std::span<const std::string> a, std::span<const std::string> b) {
  if (a.empty() || b.empty()) return 0;
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

// ROUGE-L over the whole token sequences (no sentence splitting).
inline PRF RougeL(std::span<const std::string> gen, std::span<const std::string> ref) {
  return MakePrf(LcsLength(gen, ref), gen.size(), ref.size());
}

// ---------------------------------------------------------------------------
// Paired bootstrap resampling

struct BootstrapResult {
  double p_value = 1.0;
  std::size_t wins = 0;    // resamples where mean(a) > mean(b)
  std::size_t ties = 0;
  std::size_t losses = 0;
  std::size_t n_resamples = 0;
  std::uint64_t seed = 0;
  double mean_a = 0.0;
  double mean_b = 0.0;

  friend bool operator==(const BootstrapResult&, const BootstrapResult&) = default;
};

namespace metrics_detail {

// Uniform index in [0, n) by rejection; fully specified, unlike
// std::uniform_int_distribution, so results match across standard libraries.
inline std::size_t UniformIndex(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  while (true) {
    const std::uint64_t x = rng();
    if (x <= limit) return static_cast<std::size_t>(x % bound);
  }
}

}  // namespace metrics_detail

// Resamples documents with replacement and compares system means. The
// p-value is the share of resamples that fail to favour the system with the
// higher observed mean; ties count against it.
inline BootstrapResult PairedBootstrap(std::span<const double> a, std::span<const double> b,
                                       std::size_t n_resamples, std::uint64_t seed) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kLengthMismatch, "paired bootstrap needs equal-length inputs");
  }
  if (a.size() < 2) {
    throw Error(ErrorCode::kEmptyInput, "paired bootstrap needs at least two documents");
  }
  if (n_resamples == 0) {
    throw Error(ErrorCode::kInvalidArgument, "n_resamples must be positive");
  }
  const std::size_t n = a.size();
  std::vector<double> diff(n);
  BootstrapResult out;
  out.n_resamples = n_resamples;
  out.seed = seed;
  for (std::size_t i = 0; i < n; ++i) {
    diff[i] = a[i] - b[i];
    out.mean_a += a[i];
    out.mean_b += b[i];
  }
  out.mean_a /= static_cast<double>(n);
  out.mean_b /= static_cast<double>(n);

  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < n_resamples; ++s) {
    double sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) sum += diff[metrics_detail::UniformIndex(rng, n)];
    if (sum > 0.0) {
      ++out.wins;
    } else if (sum < 0.0) {
      ++out.losses;
    } else {
      ++out.ties;
    }
  }
  const std::size_t against = out.mean_a >= out.mean_b ? out.losses : out.wins;
  out.p_value = static_cast<double>(against + out.ties) / static_cast<double>(n_resamples);
  return out;
}

}  // namespace wikitig

#endif  // WIKITIG_METRICS_HPP_
