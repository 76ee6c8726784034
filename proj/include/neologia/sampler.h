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

// First-appearance extraction and stratified letter sampling.

#ifndef NEOLOGIA_SAMPLER_H_
#define NEOLOGIA_SAMPLER_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "neologia/corpus.h"

namespace neologia {

class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BucketKey {
  Gender gender = Gender::kUnknown;
  Rank rank = Rank::kUnknown;
  Relationship relationship = Relationship::kOtherAcquaintances;

  auto operator<=>(const BucketKey&) const = default;
};

// "male/gentry/close_friends"
std::string ToString(const BucketKey& key);
std::optional<BucketKey> ParseBucketKey(std::string_view s);

struct Bucket {
  BucketKey key;
  std::vector<const Letter*> letters;  // corpus order
  int64_t word_count = 0;
};

// A candidate is a word form in the letter where it first appears.
struct CandidateKey {
  std::string form;  // case-folded
  std::string letter_id;

  auto operator<=>(const CandidateKey&) const = default;
};

// Letter id -> case-folded forms that appear there for the first time in the
// corpus, in token order. Letters without new forms are absent.
using FirstAppearanceMap = std::map<std::string, std::vector<std::string>>;

// Flagged tokens are ignored. Letters are scanned in corpus (year, id) order.
FirstAppearanceMap FirstAppearances(const Corpus& corpus);

// One bucket per occupied (gender, rank, relationship) triple among letters
// in `period`, sorted by key. Throws SamplingError when no letter is in range.
std::vector<Bucket> BuildBuckets(const Corpus& corpus, const Period& period);

struct BucketReport {
  BucketKey key;
  int letters_available = 0;
  int64_t words_available = 0;
  int64_t words_target = 0;
  int64_t words_selected = 0;
  std::vector<std::string> letters;  // selected, in selection order

  bool operator==(const BucketReport&) const = default;
};

struct SamplingPlan {
  Period period;
  uint64_t seed = 0;
  int64_t target_total_words = 0;
  int64_t target_words_per_bucket = 0;
  std::vector<BucketReport> buckets;  // sorted by key
  std::vector<std::string> letters;   // all selected, corpus order
  std::map<std::string, std::vector<std::string>> candidate_forms;

  bool Contains(std::string_view letter_id) const;
  int64_t words_selected() const;
  bool operator==(const SamplingPlan&) const = default;
};

// Greedy round-robin over buckets: the bucket with the largest deficit takes
// its next letter (seeded shuffle). A bucket stops once its target is met,
// when the next letter would overshoot by more than the smallest letter it
// has left, or when it runs out. The plan period spans the bucket letters.
SamplingPlan DrawSample(const std::vector<Bucket>& buckets,
                        int64_t target_total_words, uint64_t seed);

// Fills plan->candidate_forms from the first-appearance map.
void AttachCandidateForms(SamplingPlan* plan, const FirstAppearanceMap& first);

// First-appearance forms of the selected letters, letter order then token
// order.
std::vector<CandidateKey> CandidatePool(const SamplingPlan& plan,
                                        const FirstAppearanceMap& first);
// Same, for every letter in the corpus.
std::vector<CandidateKey> FullCandidatePool(const Corpus& corpus,
                                            const FirstAppearanceMap& first);

// JSON form of a plan; the hash is SHA-256 of its compact serialization.
std::string PlanToJson(const SamplingPlan& plan, int indent = -1);
SamplingPlan PlanFromJson(std::string_view text);
std::string PlanHash(const SamplingPlan& plan);
SamplingPlan LoadPlan(const std::string& path);
void SavePlan(const SamplingPlan& plan, const std::string& path);

}  // namespace neologia

#endif  // NEOLOGIA_SAMPLER_H_
