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

// End-to-end runs: ingest, sample, normalize, classify, report.
//
// Each stage records a hash of its inputs in <out_dir>/manifest.json and is
// skipped on rerun while that hash and its outputs are unchanged.

#ifndef NEOLOGIA_PIPELINE_H_
#define NEOLOGIA_PIPELINE_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "neologia/corpus.h"

namespace neologia {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PipelineConfig {
  std::optional<Period> period;  // defaults to the span of the letters
  int64_t target_words = 0;
  uint64_t seed = 42;
  int window_years = 40;
  int k = 5;
  double max_cost = 2.5;
  std::vector<int> age_splits = {40, 50};

  std::string corpus;   // JSONL
  std::string lexicon;  // JSONL
  std::string log;      // decision log
  std::string rules;    // optional rewrite rules
  std::string out_dir;
  // Default to files under out_dir when empty.
  std::string plan;
  std::string records;
  std::string reports;

  void Validate() const;
  std::string index_dir() const { return out_dir + "/index"; }
  std::string plan_path() const;
  std::string records_path() const;
  std::string reports_dir() const;
};

// Flat JSON object with the field names above (period as "1640:1660").
// Relative paths are resolved against the config file's directory.
PipelineConfig LoadConfig(const std::string& path);

struct PipelineOptions {
  bool dry_run = false;
  bool force = false;
};

struct StageOutcome {
  std::string name;
  bool ran = false;  // false when up to date (or dry run)
  std::string input_hash;
};

struct PipelineResult {
  std::vector<StageOutcome> stages;
  size_t records = 0;
  size_t types = 0;
};

// Progress lines go to `log`. Throws on the first failing stage.
PipelineResult RunPipeline(const PipelineConfig& config,
                           const PipelineOptions& options, std::ostream& log);

// An index directory holds corpus.jsonl and meta.json.
void WriteIndex(const Corpus& corpus, const std::string& source_path,
                const std::string& dir);
// Accepts an index directory or a corpus JSONL file.
Corpus LoadCorpusPath(const std::string& path,
                      std::optional<Period> period = std::nullopt);

std::string ReadFile(const std::string& path);
std::string FileHash(const std::string& path);

}  // namespace neologia

#endif  // NEOLOGIA_PIPELINE_H_
