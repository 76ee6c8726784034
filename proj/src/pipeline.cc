//
// Copyright 2026 The Neologia Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "neologia/pipeline.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "neologia/analytics.h"
#include "neologia/classifier.h"
#include "neologia/lexicon.h"
#include "neologia/normalizer.h"
#include "neologia/sampler.h"
#include "neologia/text.h"

namespace neologia {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

void WriteFile(const std::string& path, const std::string& content) {
  fs::create_directories(fs::path(path).parent_path());
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
}

std::string Resolve(const fs::path& base, const std::string& p) {
  if (p.empty() || fs::path(p).is_absolute()) return p;
  return (base / p).lexically_normal().string();
}

struct Stage {
  std::string name;
  // name=value lines; files are hashed by content.
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> input_files;
  std::vector<std::string> outputs;
  std::function<void()> run;
};

std::string InputHash(const Stage& s) {
  std::string text = "stage=" + s.name + "\n";
  for (const auto& [k, v] : s.params) text += k + "=" + v + "\n";
  for (const std::string& f : s.input_files) {
    text += "file:" + fs::path(f).filename().string() + "=" +
            (fs::exists(f) ? FileHash(f) : "missing") + "\n";
  }
  return Sha256Hex(text);
}

bool UpToDate(const json& manifest, const Stage& s, const std::string& hash) {
  auto it = manifest.find(s.name);
  if (it == manifest.end() || it->value("input_hash", "") != hash) return false;
  const json& outs = (*it)["outputs"];
  for (const std::string& o : s.outputs) {
    if (!fs::exists(o) || !outs.contains(o) || outs[o] != FileHash(o)) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string FileHash(const std::string& path) { return Sha256Hex(ReadFile(path)); }

std::string PipelineConfig::plan_path() const {
  return plan.empty() ? out_dir + "/plan.json" : plan;
}
std::string PipelineConfig::records_path() const {
  return records.empty() ? out_dir + "/records.jsonl" : records;
}
std::string PipelineConfig::reports_dir() const {
  return reports.empty() ? out_dir + "/reports" : reports;
}

void PipelineConfig::Validate() const {
  if (corpus.empty()) throw ConfigError("config lacks 'corpus'");
  if (lexicon.empty()) throw ConfigError("config lacks 'lexicon'");
  if (log.empty()) throw ConfigError("config lacks 'log'");
  if (out_dir.empty()) throw ConfigError("config lacks 'out_dir'");
  if (target_words <= 0) throw ConfigError("target_words must be positive");
  if (window_years < 0) throw ConfigError("window_years must be >= 0");
  if (k < 1) throw ConfigError("k must be >= 1");
  if (!(max_cost >= 0)) throw ConfigError("max_cost must be >= 0");
  if (period && period->start_year > period->end_year) {
    throw ConfigError("period start is after its end");
  }
}

PipelineConfig LoadConfig(const std::string& path) {
  if (!fs::is_regular_file(path)) throw ConfigError("cannot read config '" + path + "'");
  json j;
  try {
    j = json::parse(ReadFile(path));
  } catch (const json::parse_error& e) {
    throw ConfigError("config '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config '" + path + "' is not an object");
  static const std::set<std::string> kKnown = {
      "period", "target_words", "seed",    "window_years", "k",
      "max_cost", "age_splits", "corpus",  "lexicon",      "log",
      "rules",  "out_dir",      "plan",    "records",      "reports"};
  for (const auto& [k, v] : j.items()) {
    if (!kKnown.count(k)) throw ConfigError("unknown config field '" + k + "'");
  }
  const fs::path base = fs::path(path).parent_path();
  PipelineConfig c;
  try {
    if (j.contains("period")) c.period = ParsePeriod(j["period"].get<std::string>());
    c.target_words = j.value("target_words", c.target_words);
    c.seed = j.value("seed", c.seed);
    c.window_years = j.value("window_years", c.window_years);
    c.k = j.value("k", c.k);
    c.max_cost = j.value("max_cost", c.max_cost);
    c.age_splits = j.value("age_splits", c.age_splits);
    for (auto [field, dest] :
         {std::pair{"corpus", &c.corpus}, std::pair{"lexicon", &c.lexicon},
          std::pair{"log", &c.log}, std::pair{"rules", &c.rules},
          std::pair{"out_dir", &c.out_dir}, std::pair{"plan", &c.plan},
          std::pair{"records", &c.records}, std::pair{"reports", &c.reports}}) {
      if (j.contains(field)) *dest = Resolve(base, j[field].get<std::string>());
    }
  } catch (const json::exception& e) {
    throw ConfigError("config '" + path + "': " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError("config '" + path + "': " + e.what());
  }
  return c;
}

void WriteIndex(const Corpus& corpus, const std::string& source_path,
                const std::string& dir) {
  std::ostringstream out;
  SerializeCorpus(corpus, out);
  WriteFile(dir + "/corpus.jsonl", out.str());
  json meta = {{"period", ToString(corpus.period())},
               {"persons", corpus.persons().size()},
               {"letters", corpus.letters().size()},
               {"running_words", RunningWords(corpus)},
               {"source", fs::path(source_path).filename().string()},
               {"source_sha256", FileHash(source_path)}};
  WriteFile(dir + "/meta.json", meta.dump(2) + "\n");
}

Corpus LoadCorpusPath(const std::string& path, std::optional<Period> period) {
  if (fs::is_directory(path)) {
    if (!period) {
      const json meta = json::parse(ReadFile(path + "/meta.json"));
      period = ParsePeriod(meta.at("period").get<std::string>());
    }
    return ParseCorpus(path + "/corpus.jsonl", period);
  }
  return ParseCorpus(path, period);
}

PipelineResult RunPipeline(const PipelineConfig& config,
                           const PipelineOptions& options, std::ostream& log) {
  config.Validate();
  const std::string index = config.index_dir();
  const std::string index_corpus = index + "/corpus.jsonl";
  const std::string plan_path = config.plan_path();
  const std::string suggestions = config.out_dir + "/suggestions.jsonl";
  const std::string records_path = config.records_path();
  const std::string no_entry = config.out_dir + "/no_entry.jsonl";
  const std::string reports = config.reports_dir();
  const std::string period_str = config.period ? ToString(*config.period) : "";

  std::vector<std::string> report_files;
  for (const char* axis : {"gender", "rank", "relationship"}) {
    report_files.push_back(reports + "/" + axis + ".tsv");
  }
  for (int split : config.age_splits) {
    report_files.push_back(reports + "/age_" + std::to_string(split) + ".tsv");
  }
  for (const char* dim : {"pos", "etymology_kind", "source_language",
                          "ht_level_1", "ht_level_2"}) {
    report_files.push_back(reports + "/breakdown_" + std::string(dim) + ".tsv");
  }
  report_files.push_back(reports + "/antedatings.tsv");
  report_files.push_back(reports + "/report.json");

  PipelineResult result;
  std::vector<Stage> stages;
  stages.push_back(
      {"ingest",
       {{"period", period_str}},
       {config.corpus},
       {index_corpus, index + "/meta.json"},
       [&] {
         WriteIndex(ParseCorpus(config.corpus, config.period), config.corpus, index);
       }});
  stages.push_back(
      {"sample",
       {{"period", period_str},
        {"target_words", std::to_string(config.target_words)},
        {"seed", std::to_string(config.seed)}},
       {index_corpus},
       {plan_path},
       [&] {
         const Corpus corpus = LoadCorpusPath(index);
         SamplingPlan plan = DrawSample(BuildBuckets(corpus, corpus.period()),
                                        config.target_words, config.seed);
         plan.period = corpus.period();
         AttachCandidateForms(&plan, FirstAppearances(corpus));
         SavePlan(plan, plan_path);
       }});
  stages.push_back(
      {"normalize",
       {{"k", std::to_string(config.k)},
        {"max_cost", std::to_string(config.max_cost)}},
       {plan_path, config.lexicon, config.rules},
       {suggestions},
       [&] {
         const Lexicon lexicon = LoadLexicon(config.lexicon);
         const Normalizer normalizer(
             lexicon, config.rules.empty() ? DefaultRules() : LoadRules(config.rules));
         const SamplingPlan plan = LoadPlan(plan_path);
         std::ostringstream out;
         for (const CandidateKey& key : CandidatePool(plan, plan.candidate_forms)) {
           json cands = json::array();
           for (const auto& c : normalizer.Normalize(key.form, config.k, config.max_cost)) {
             cands.push_back({{"lemma", c.entry->lemma},
                              {"pos", ToString(c.entry->pos)},
                              {"score", c.score},
                              {"method", ToString(c.method)}});
           }
           out << json{{"candidate_key",
                        {{"form", key.form}, {"letter_id", key.letter_id}}},
                       {"suggestions", std::move(cands)}}
                      .dump()
               << '\n';
         }
         WriteFile(suggestions, out.str());
       }});
  stages.push_back(
      {"classify",
       {{"window_years", std::to_string(config.window_years)}},
       {plan_path, index_corpus, config.lexicon, config.log},
       {records_path, no_entry},
       [&] {
         const Corpus corpus = LoadCorpusPath(index);
         const Lexicon lexicon = LoadLexicon(config.lexicon);
         const SamplingPlan plan = LoadPlan(plan_path);
         const auto pool = CandidatePool(plan, plan.candidate_forms);
         const auto decisions = LoadDecisionLog(config.log);
         const AppliedDecisions applied = ApplyDecisions(pool, decisions);
         if (!applied.skipped.empty()) {
           log << "  " << applied.skipped.size()
               << " logged decisions are outside the plan and were skipped\n";
         }
         const auto records =
             ClassifyAll(pool, decisions, corpus, lexicon, config.window_years);
         std::ostringstream out;
         WriteRecords(records, out);
         WriteFile(records_path, out.str());
         std::ostringstream ne;
         for (const CandidateKey& k : NoEntryCandidates(applied, pool)) {
           ne << json{{"form", k.form}, {"letter_id", k.letter_id}}.dump() << '\n';
         }
         WriteFile(no_entry, ne.str());
       }});
  std::string age_list;
  for (int s : config.age_splits) age_list += std::to_string(s) + ",";
  stages.push_back(
      {"report",
       {{"age_splits", age_list}},
       {records_path, index_corpus, plan_path},
       report_files,
       [&] {
         const Corpus corpus = LoadCorpusPath(index);
         const SamplingPlan plan = LoadPlan(plan_path);
         const auto records = LoadRecords(records_path);
         const std::set<std::string> letters(plan.letters.begin(), plan.letters.end());
         const LetterFilter in_plan = [&](const Letter& l) {
           return letters.count(l.id) > 0;
         };
         size_t f = 0;
         for (Axis a : {Axis::kGender, Axis::kRank, Axis::kRelationship}) {
           WriteFile(report_files[f++], FrequencyReportToTsv(ComputeFrequencyReport(
                                            records, corpus, a, in_plan)));
         }
         for (int split : config.age_splits) {
           WriteFile(report_files[f++],
                     FrequencyReportToTsv(ComputeFrequencyReport(
                         records, corpus, Axis::kAgeGroup, in_plan, split)));
         }
         for (Dimension d : {Dimension::kPos, Dimension::kEtymologyKind,
                             Dimension::kSourceLanguage, Dimension::kHtLevel1,
                             Dimension::kHtLevel2}) {
           WriteFile(report_files[f++], BreakdownToTsv(ComputeBreakdown(records, d)));
         }
         std::ostringstream ante;
         ante << "lemma\tpos\tform\tletter_id\tcorpus_year\tattestation_year\tdelta_years\n";
         for (const NeologismRecord& r : Antedatings(records)) {
           ante << r.lemma << '\t' << ToString(r.pos) << '\t' << r.form << '\t'
                << r.letter_id << '\t' << r.corpus_year << '\t'
                << r.attestation_year << '\t' << r.delta_years << '\n';
         }
         WriteFile(report_files[f++], ante.str());
         WriteFile(report_files[f++],
                   FullReportJson(records, corpus, in_plan, config.age_splits) + "\n");
       }});

  const std::string manifest_path = config.out_dir + "/manifest.json";
  json manifest = json::object();
  if (fs::exists(manifest_path)) {
    try {
      manifest = json::parse(ReadFile(manifest_path));
    } catch (const json::parse_error&) {
      manifest = json::object();  // rebuilt below
    }
  }
  bool upstream_ran = false;
  for (Stage& s : stages) {
    s.input_files.erase(std::remove(s.input_files.begin(), s.input_files.end(), ""),
                        s.input_files.end());
    const std::string hash = InputHash(s);
    const bool fresh = !options.force && !(options.dry_run && upstream_ran) &&
                       UpToDate(manifest, s, hash);
    StageOutcome outcome{s.name, false, hash};
    if (options.dry_run) {
      log << s.name << ": " << (fresh ? "up to date" : "would run") << "\n";
      for (const std::string& f : s.input_files) log << "  in  " << f << "\n";
      for (const std::string& o : s.outputs) log << "  out " << o << "\n";
      // Later stages cannot be judged before this one runs.
      upstream_ran = upstream_ran || !fresh;
    } else if (fresh) {
      log << s.name << ": up to date\n";
    } else {
      log << s.name << ": running\n";
      s.run();
      json outs = json::object();
      for (const std::string& o : s.outputs) outs[o] = FileHash(o);
      manifest[s.name] = {{"input_hash", hash}, {"outputs", std::move(outs)}};
      WriteFile(manifest_path, manifest.dump(2) + "\n");
      outcome.ran = true;
    }
    result.stages.push_back(outcome);
  }
  if (!options.dry_run) {
    const auto records = LoadRecords(records_path);
    result.records = records.size();
    result.types = CountTypes(records);
    log << "records: " << result.records << " tokens, " << result.types
        << " types\n";
  }
  return result;
}

}  // namespace neologia
