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

// Normalized frequencies and type breakdowns over neologism records.

#ifndef NEOLOGIA_ANALYTICS_H_
#define NEOLOGIA_ANALYTICS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "neologia/classifier.h"
#include "neologia/corpus.h"

namespace neologia {

enum class Axis { kGender, kRank, kRelationship, kAgeGroup };
std::string_view ToString(Axis a);
// Accepts "age" as well as "age_group".
std::optional<Axis> ParseAxis(std::string_view s);

// Labels as printed in the tables ("Other non-gentry", "Close friends").
std::string_view DisplayName(Axis a);
std::string_view DisplayName(Gender g);
std::string_view DisplayName(Rank r);
std::string_view DisplayName(Relationship r);

struct FrequencyRow {
  std::string value;
  int64_t tokens = 0;
  int64_t words = 0;
  std::optional<double> per_10k;  // absent when words == 0

  bool operator==(const FrequencyRow&) const = default;
};

struct FrequencyReport {
  Axis axis = Axis::kGender;
  std::vector<FrequencyRow> rows;

  const FrequencyRow* Find(std::string_view value) const;
};

// Tokens per 10,000 running words for every value on `axis`, over the
// letters accepted by `in_scope` (all letters when empty). Writers whose
// value is unknown are left out of both counts. Rows are sorted by rate,
// highest first, undefined rates last. The age axis needs `age_split` and
// produces two groups, below and from the split.
FrequencyReport ComputeFrequencyReport(
    const std::vector<NeologismRecord>& records, const Corpus& corpus,
    Axis axis, const LetterFilter& in_scope = {},
    std::optional<int> age_split = std::nullopt);

// Integer as in the printed tables, "–" when undefined.
std::string RenderRate(const FrequencyRow& row);
// category, value, rate, tokens, words
std::string FrequencyReportToTsv(const FrequencyReport& report);
std::string FrequencyReportToJson(const FrequencyReport& report, int indent = 2);

enum class Dimension { kPos, kEtymologyKind, kSourceLanguage, kHtLevel1, kHtLevel2 };
std::string_view ToString(Dimension d);
std::optional<Dimension> ParseDimension(std::string_view s);

struct Breakdown {
  Dimension dimension = Dimension::kPos;
  std::map<std::string, int> counts;
  int types = 0;

  int count(const std::string& label) const;
  // Highest count first, then label.
  std::vector<std::pair<std::string, int>> Sorted() const;
};

// Counts distinct (lemma, pos) types. Source language counts borrowings
// only; HT levels use the first record seen for each type.
Breakdown ComputeBreakdown(const std::vector<NeologismRecord>& records,
                           Dimension dimension);
std::string BreakdownToTsv(const Breakdown& b);

// Antedating records, smallest delta first.
std::vector<NeologismRecord> Antedatings(
    const std::vector<NeologismRecord>& records);

// Everything above in one JSON document.
std::string FullReportJson(const std::vector<NeologismRecord>& records,
                           const Corpus& corpus, const LetterFilter& in_scope,
                           const std::vector<int>& age_splits);

}  // namespace neologia

#endif  // NEOLOGIA_ANALYTICS_H_
