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

// Mapping decisions, their append-only log, and neologism classification.

#ifndef NEOLOGIA_CLASSIFIER_H_
#define NEOLOGIA_CLASSIFIER_H_

#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "neologia/corpus.h"
#include "neologia/lexicon.h"
#include "neologia/sampler.h"

namespace neologia {

inline constexpr int kDefaultWindowYears = 40;

enum class DecisionStatus { kPending, kAccepted, kEdited, kRejected, kNoEntry };
inline constexpr DecisionStatus kAllStatuses[] = {
    DecisionStatus::kPending, DecisionStatus::kAccepted,
    DecisionStatus::kEdited, DecisionStatus::kRejected,
    DecisionStatus::kNoEntry};

std::string_view ToString(DecisionStatus s);
std::optional<DecisionStatus> ParseDecisionStatus(std::string_view s);

struct MappingDecision {
  CandidateKey key;
  DecisionStatus status = DecisionStatus::kPending;
  std::optional<EntryKey> entry;
  std::optional<std::string> sense_id;
  std::string reviewer;
  std::string timestamp;  // ISO-8601, UTC

  bool maps_entry() const {
    return status == DecisionStatus::kAccepted ||
           status == DecisionStatus::kEdited;
  }
  bool operator==(const MappingDecision&) const = default;
};

class DecisionError : public std::runtime_error {
 public:
  DecisionError(const std::string& what, int line = 0);
  int line() const { return line_; }

 private:
  int line_;
};

// One JSON object, no trailing newline.
std::string DecisionToJson(const MappingDecision& d);
// Throws DecisionError on malformed input or a status/entry mismatch.
MappingDecision DecisionFromJson(std::string_view text);

// Describes why `d` cannot be stored against `lexicon`, or nullopt if it can.
std::optional<std::string> CheckDecision(const MappingDecision& d,
                                         const Lexicon& lexicon);

// Reads a log; blank lines are skipped, bad lines throw with their number.
// A missing file is an empty log.
std::vector<MappingDecision> LoadDecisionLog(const std::string& path);
std::vector<MappingDecision> LoadDecisionLogStream(std::istream& in);

// Append-only writer. Every Append is written and fsync'ed before it
// returns; appends from several threads are serialized.
class DecisionLog {
 public:
  explicit DecisionLog(const std::string& path);
  ~DecisionLog();
  DecisionLog(const DecisionLog&) = delete;
  DecisionLog& operator=(const DecisionLog&) = delete;

  void Append(const MappingDecision& d);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  int fd_ = -1;
  std::mutex mu_;
};

struct AppliedDecisions {
  // Every pool key; keys without a decision are pending.
  std::map<CandidateKey, MappingDecision> effective;
  // Decisions whose key is not in the pool, in log order.
  std::vector<MappingDecision> skipped;
};

// Last writer wins per key.
AppliedDecisions ApplyDecisions(const std::vector<CandidateKey>& pool,
                                const std::vector<MappingDecision>& log);

struct NeologismRecord {
  std::string lemma;
  PartOfSpeech pos = PartOfSpeech::kOther;
  std::string sense_id;
  std::string form;
  std::string letter_id;
  int corpus_year = 0;
  int attestation_year = 0;
  int delta_years = 0;  // corpus_year - attestation_year
  bool antedating = false;
  std::vector<std::string> ht_path;
  Etymology etymology;
  Person writer;
  Relationship relationship = Relationship::kOtherAcquaintances;

  EntryKey type() const { return {lemma, pos}; }
  bool operator==(const NeologismRecord&) const = default;
};

class ClassifyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A record when the decision maps an entry and the letter year is at most
// `window_years` after the attestation year. The decided sense dates the
// word; without one the entry's earliest sense does.
std::optional<NeologismRecord> Classify(const MappingDecision& decision,
                                        const Letter& letter,
                                        const Person& writer,
                                        const Lexicon& lexicon,
                                        int window_years = kDefaultWindowYears);

// Records in pool order.
std::vector<NeologismRecord> ClassifyAll(
    const std::vector<CandidateKey>& pool,
    const std::vector<MappingDecision>& log, const Corpus& corpus,
    const Lexicon& lexicon, int window_years = kDefaultWindowYears);

// Effective no_entry decisions, pool order.
std::vector<CandidateKey> NoEntryCandidates(const AppliedDecisions& applied,
                                            const std::vector<CandidateKey>& pool);

size_t CountTypes(const std::vector<NeologismRecord>& records);

std::string RecordToJson(const NeologismRecord& r);
NeologismRecord RecordFromJson(std::string_view text);
void WriteRecords(const std::vector<NeologismRecord>& records, std::ostream& out);
std::vector<NeologismRecord> LoadRecords(const std::string& path);

}  // namespace neologia

#endif  // NEOLOGIA_CLASSIFIER_H_
