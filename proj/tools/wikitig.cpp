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

// Command-line front end: extract, split, emit, eval-table, stats and
// significance.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wikitig.hpp"

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;
using wikitig::Error;
using wikitig::ErrorCode;

void Warn(const std::string& message) { std::cerr << "wikitig: warning: " << message << '\n'; }

Json BaseConfig(const std::string& command) {
  return Json{{"command", command}, {"version", std::string(wikitig::kVersion)}};
}

void WriteJson(const Json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, path + ": " + e.what());
  }
}

wikitig::Task ParseTask(const std::string& s) {
  return s == "image" ? wikitig::Task::kImageGen : wikitig::Task::kTableGen;
}

wikitig::TableInput ParseTableInput(const std::string& s) {
  if (s == "title") return wikitig::TableInput::kTitle;
  if (s == "image") return wikitig::TableInput::kImage;
  return wikitig::TableInput::kBoth;
}

// ---------------------------------------------------------------------------
// Shared emit flags

struct EmitFlags {
  std::string task = "table";
  int cap = 480;
  std::string table_input = "both";
  bool no_table_in_image_prompt = false;

  void Register(CLI::App* cmd) {
    cmd->add_option("--task", task, "Prompt task")
        ->check(CLI::IsMember({"table", "image"}))
        ->capture_default_str();
    cmd->add_option("--cap", cap, "Short-side cap for table generation images")
        ->check(CLI::IsMember({256, 384, 480}))
        ->capture_default_str();
    cmd->add_option("--table-input", table_input, "Inputs named in table prompts")
        ->check(CLI::IsMember({"title", "image", "both"}))
        ->capture_default_str();
    cmd->add_flag("--no-table-in-image-prompt", no_table_in_image_prompt,
                  "Image prompts carry the caption only");
  }

  wikitig::EmitOptions Options() const {
    wikitig::EmitOptions o;
    o.task = ParseTask(task);
    o.cap = cap;
    o.table_input = ParseTableInput(table_input);
    o.image_prompt_with_table = !no_table_in_image_prompt;
    return o;
  }

  void Echo(Json& config) const {
    config["task"] = task;
    config["cap"] = cap;
    config["table_input"] = table_input;
    config["image_prompt_with_table"] = !no_table_in_image_prompt;
  }
};

Json SummaryJson(const wikitig::EmitSummary& s) {
  Json per_split = Json::object();
  for (auto split : wikitig::kAllSplits) {
    per_split[std::string(wikitig::SplitName(split))] =
        s.records_per_split[static_cast<std::size_t>(split)];
  }
  Json files = Json::array();
  for (const auto& f : s.files) files.push_back(f.filename().string());
  return Json{{"records", s.total()},
              {"records_per_split", per_split},
              {"skipped_without_caption", s.skipped_without_caption},
              {"files", files}};
}

// ---------------------------------------------------------------------------
// extract

struct ExtractArgs {
  std::string input;
  std::string out;
  EmitFlags emit;
};

int RunExtract(const ExtractArgs& a) {
  const auto pages = wikitig::ReadPages(a.input);
  const auto extraction = wikitig::ExtractPages(pages, wikitig::DefaultThreadCount());
  if (extraction.records.empty()) Warn("no qualifying infoboxes in " + a.input);
  const auto summary = wikitig::EmitDataset(extraction.records, a.emit.Options(), a.out);
  for (const auto& w : summary.warnings) Warn(w);

  Json config = BaseConfig("extract");
  config["input"] = a.input;
  config["out"] = a.out;
  a.emit.Echo(config);
  const auto& r = extraction.report;
  Json rejected = Json::object();
  for (auto reason : wikitig::kAllRejectReasons) {
    rejected[std::string(wikitig::RejectReasonName(reason))] = r.rejected(reason);
  }
  const Json report{{"config", config},
                    {"pages_seen", r.pages_seen},
                    {"infoboxes_seen", r.infoboxes_seen},
                    {"records_emitted", r.records_emitted},
                    {"rejected", r.total_rejected()},
                    {"rejected_by_reason", rejected},
                    {"emitted", SummaryJson(summary)}};
  WriteJson(report, (fs::path(a.out) / "extraction_report.json").string());
  std::cerr << "wikitig: " << r.pages_seen << " pages, " << r.infoboxes_seen
            << " infoboxes, " << r.records_emitted << " records\n";
  return 0;
}

// ---------------------------------------------------------------------------
// split

int RunSplit(const std::vector<std::string>& titles) {
  for (const auto& t : titles) std::cout << wikitig::SplitName(wikitig::AssignSplit(t)) << '\n';
  return 0;
}

// ---------------------------------------------------------------------------
// emit

struct EmitArgs {
  std::string input;
  std::string out;
  EmitFlags emit;
};

int RunEmit(const EmitArgs& a) {
  const auto records = wikitig::ReadRecordsFile(a.input);
  if (records.empty()) Warn("no records in " + a.input);
  const auto summary = wikitig::EmitDataset(records, a.emit.Options(), a.out);
  for (const auto& w : summary.warnings) Warn(w);
  Json config = BaseConfig("emit");
  config["input"] = a.input;
  config["out"] = a.out;
  a.emit.Echo(config);
  Json out{{"config", config}};
  out.update(SummaryJson(summary));
  WriteJson(out, (fs::path(a.out) / "emit_summary.json").string());
  return 0;
}

// ---------------------------------------------------------------------------
// eval-table

struct TableLine {
  std::optional<std::string> id;
  std::string text;
  std::size_t line = 0;
};

// JSON Lines files (*.jsonl) carry an "id" and one of "prediction",
// "table_linearized" or "target"; any other file holds one linearized
// table per line.
std::vector<TableLine> ReadTableLines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  const bool jsonl = fs::path(path).extension() == ".jsonl";
  std::vector<TableLine> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!jsonl) {
      out.push_back({std::nullopt, line, line_no});
      continue;
    }
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const std::string where = path + ":" + std::to_string(line_no);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParse, where + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("id") || !j["id"].is_string()) {
      throw Error(ErrorCode::kParse, where + ": missing string \"id\"");
    }
    TableLine t{j["id"].get<std::string>(), {}, line_no};
    bool found = false;
    for (const char* key : {"prediction", "table_linearized", "target"}) {
      if (j.contains(key) && j[key].is_string()) {
        t.text = j[key].get<std::string>();
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error(ErrorCode::kParse,
                  where + ": needs \"prediction\", \"table_linearized\" or \"target\"");
    }
    out.push_back(std::move(t));
  }
  return out;
}

struct EvalArgs {
  std::string gen;
  std::string ref;
  std::string out;
  std::string mode = "lenient";
  bool stem = false;
};

int RunEval(const EvalArgs& a) {
  const auto gen = ReadTableLines(a.gen);
  const auto ref = ReadTableLines(a.ref);
  std::vector<wikitig::EvalDocument> docs;
  std::vector<std::size_t> gen_line;
  std::vector<std::size_t> ref_line;
  const bool by_id = gen.empty() || ref.empty() || (gen.front().id && ref.front().id);
  if (by_id) {
    std::map<std::string, std::size_t> gen_index;
    for (std::size_t i = 0; i < gen.size(); ++i) {
      if (!gen_index.emplace(*gen[i].id, i).second) {
        throw Error(ErrorCode::kDuplicateId, a.gen + ": duplicate id " + *gen[i].id);
      }
    }
    std::string missing;
    std::map<std::string, bool> seen;
    for (const auto& r : ref) {
      if (!seen.emplace(*r.id, true).second) {
        throw Error(ErrorCode::kDuplicateId, a.ref + ": duplicate id " + *r.id);
      }
      const auto it = gen_index.find(*r.id);
      if (it == gen_index.end()) {
        missing += " " + *r.id;
        continue;
      }
      docs.push_back({*r.id, gen[it->second].text, r.text});
      gen_line.push_back(gen[it->second].line);
      ref_line.push_back(r.line);
    }
    std::string extra;
    for (const auto& g : gen) {
      if (!seen.count(*g.id)) extra += " " + *g.id;
    }
    if (!missing.empty() || !extra.empty()) {
      std::string message = "document ids differ between inputs;";
      if (!missing.empty()) message += " missing from " + a.gen + ":" + missing + ";";
      if (!extra.empty()) message += " missing from " + a.ref + ":" + extra + ";";
      message.pop_back();
      throw Error(ErrorCode::kIdMismatch, message);
    }
  } else {
    if (gen.size() != ref.size()) {
      throw Error(ErrorCode::kLengthMismatch,
                  a.gen + " has " + std::to_string(gen.size()) + " tables but " + a.ref +
                      " has " + std::to_string(ref.size()));
    }
    for (std::size_t i = 0; i < gen.size(); ++i) {
      const std::string id = ref[i].id ? *ref[i].id : gen[i].id ? *gen[i].id
                                                                : std::to_string(i + 1);
      docs.push_back({id, gen[i].text, ref[i].text});
      gen_line.push_back(gen[i].line);
      ref_line.push_back(ref[i].line);
    }
  }

  wikitig::EvalOptions options;
  options.mode = a.mode == "strict" ? wikitig::ParseMode::kStrict : wikitig::ParseMode::kLenient;
  options.rouge.stem = a.stem;
  options.threads = wikitig::DefaultThreadCount();
  wikitig::MetricReport report;
  try {
    report = wikitig::Evaluate(docs, options);
  } catch (const wikitig::DocumentParseError& e) {
    const std::size_t d = e.document();
    const std::string where = e.reference() ? a.ref + ":" + std::to_string(ref_line[d])
                                            : a.gen + ":" + std::to_string(gen_line[d]);
    throw Error(ErrorCode::kParse, where + ": document " + docs[d].id + ": " + e.what());
  }
  Json config = BaseConfig("eval-table");
  config["gen"] = a.gen;
  config["ref"] = a.ref;
  config["mode"] = a.mode;
  config["stem"] = a.stem;
  WriteJson(wikitig::ReportToJson(report, config), a.out);
  return 0;
}

// ---------------------------------------------------------------------------
// stats

int RunStats(const std::string& input, const std::string& out) {
  const auto records = wikitig::ReadRecordsFile(input);
  const auto stats = wikitig::ComputeDatasetStats(records);
  if (!stats.header_values) Warn("no pair cells; header value statistics are empty");
  std::cout << wikitig::RenderStatsText(stats);
  if (!out.empty()) {
    Json config = BaseConfig("stats");
    config["input"] = input;
    Json j{{"config", config}};
    j.update(wikitig::StatsToJson(stats));
    WriteJson(j, out);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// significance

struct SignificanceArgs {
  std::string a;
  std::string b;
  std::string out;
  std::size_t resamples = 1000;
  std::uint64_t seed = 0;
};

int RunSignificance(const SignificanceArgs& s) {
  const auto results = wikitig::CompareReports(ReadJsonFile(s.a), ReadJsonFile(s.b),
                                               s.resamples, s.seed);
  Json config = BaseConfig("significance");
  config["a"] = s.a;
  config["b"] = s.b;
  config["resamples"] = s.resamples;
  config["seed"] = s.seed;
  Json metrics = Json::object();
  for (const auto& m : results) {
    Json entry{{"documents", m.documents}};
    if (m.result) {
      entry.update(wikitig::BootstrapToJson(*m.result));
    } else {
      entry["p_value"] = nullptr;
      Warn(m.metric + ": fewer than two paired documents; not tested");
    }
    metrics[m.metric] = entry;
  }
  WriteJson(Json{{"config", config}, {"metrics", metrics}}, s.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Infobox table/image dataset builder and table evaluation toolkit", "wikitig"};
  app.set_version_flag("--version", std::string(wikitig::kVersion));
  app.require_subcommand(1);

  ExtractArgs extract;
  auto* extract_cmd = app.add_subcommand("extract", "Extract infobox records from HTML pages");
  extract_cmd->add_option("--input", extract.input, "Directory of *.html files or a dump file")
      ->required()
      ->check(CLI::ExistingPath);
  extract_cmd->add_option("--out", extract.out, "Output directory")->required();
  extract.emit.Register(extract_cmd);

  std::vector<std::string> titles;
  auto* split_cmd = app.add_subcommand("split", "Print the split label of article titles");
  split_cmd->add_option("--title", titles, "Article title (repeatable)")->required();

  EmitArgs emit;
  auto* emit_cmd = app.add_subcommand("emit", "Write prompts and geometry from record files");
  emit_cmd->add_option("--input", emit.input, "Records in JSON Lines")
      ->required()
      ->check(CLI::ExistingFile);
  emit_cmd->add_option("--out", emit.out, "Output directory")->required();
  emit.emit.Register(emit_cmd);

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval-table", "Score generated tables");
  eval_cmd->add_option("--gen", eval.gen, "Generated tables")->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--ref", eval.ref, "Reference tables")->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--out", eval.out, "Report path (default: standard output)");
  eval_cmd->add_option("--mode", eval.mode, "Parsing of generated tables")
      ->check(CLI::IsMember({"strict", "lenient"}))
      ->capture_default_str();
  eval_cmd->add_flag("--stem", eval.stem, "Porter-stem tokens before ROUGE");

  std::string stats_input;
  std::string stats_out;
  auto* stats_cmd = app.add_subcommand("stats", "Dataset statistics");
  stats_cmd->add_option("--input", stats_input, "Records in JSON Lines")
      ->required()
      ->check(CLI::ExistingFile);
  stats_cmd->add_option("--out", stats_out, "JSON output path");

  SignificanceArgs sig;
  auto* sig_cmd = app.add_subcommand("significance", "Paired bootstrap between two reports");
  sig_cmd->add_option("--a", sig.a, "Report of system A")->required()->check(CLI::ExistingFile);
  sig_cmd->add_option("--b", sig.b, "Report of system B")->required()->check(CLI::ExistingFile);
  sig_cmd->add_option("--resamples", sig.resamples, "Bootstrap resamples")
      ->capture_default_str();
  sig_cmd->add_option("--seed", sig.seed, "Random seed")->capture_default_str();
  sig_cmd->add_option("--out", sig.out, "Output path (default: standard output)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*extract_cmd) return RunExtract(extract);
    if (*split_cmd) return RunSplit(titles);
    if (*emit_cmd) return RunEmit(emit);
    if (*eval_cmd) return RunEval(eval);
    if (*stats_cmd) return RunStats(stats_input, stats_out);
    if (*sig_cmd) return RunSignificance(sig);
  } catch (const Error& e) {
    std::cerr << "wikitig: error [" << wikitig::ErrorCodeName(e.code()) << "]: " << e.what()
              << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "wikitig: error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
