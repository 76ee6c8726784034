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

#include "neologia/classifier.h"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <set>

#include "json.hpp"

namespace neologia {

using json = nlohmann::json;

namespace {

constexpr std::pair<DecisionStatus, std::string_view> kStatusNames[] = {
    {DecisionStatus::kPending, "pending"},
    {DecisionStatus::kAccepted, "accepted"},
    {DecisionStatus::kEdited, "edited"},
    {DecisionStatus::kRejected, "rejected"},
    {DecisionStatus::kNoEntry, "no_entry"},
};

std::string OptString(const json& j, const char* field) {
  auto it = j.find(field);
  if (it == j.end() || it->is_null()) return {};
  if (!it->is_string()) {
    throw DecisionError(std::string("field '") + field + "' must be a string");
  }
  return it->get<std::string>();
}

}  // namespace

std::string_view ToString(DecisionStatus s) {
  for (const auto& [v, n] : kStatusNames) {
    if (v == s) return n;
  }
  return "?";
}

std::optional<DecisionStatus> ParseDecisionStatus(std::string_view s) {
  for (const auto& [v, n] : kStatusNames) {
    if (n == s) return v;
  }
  return std::nullopt;
}

DecisionError::DecisionError(const std::string& what, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                  : what),
      line_(line) {}

std::string DecisionToJson(const MappingDecision& d) {
  json j = {{"candidate_key",
             {{"form", d.key.form}, {"letter_id", d.key.letter_id}}},
            {"status", ToString(d.status)}};
  if (d.entry) {
    j["entry"] = {{"lemma", d.entry->lemma}, {"pos", ToString(d.entry->pos)}};
  }
  if (d.sense_id) j["sense_id"] = *d.sense_id;
  j["reviewer"] = d.reviewer;
  j["timestamp"] = d.timestamp;
  return j.dump();
}

MappingDecision DecisionFromJson(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DecisionError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw DecisionError("decision is not an object");
  MappingDecision d;
  auto key = j.find("candidate_key");
  if (key == j.end() || !key->is_object()) {
    throw DecisionError("missing field 'candidate_key'");
  }
  d.key.form = OptString(*key, "form");
  d.key.letter_id = OptString(*key, "letter_id");
  if (d.key.form.empty() || d.key.letter_id.empty()) {
    throw DecisionError("candidate_key needs form and letter_id");
  }
  const std::string status = OptString(j, "status");
  auto s = ParseDecisionStatus(status);
  if (!s) throw DecisionError("invalid value '" + status + "' for field 'status'");
  d.status = *s;
  auto entry = j.find("entry");
  if (entry != j.end() && !entry->is_null()) {
    if (!entry->is_object()) throw DecisionError("field 'entry' must be an object");
    const std::string pos = OptString(*entry, "pos");
    auto p = ParsePartOfSpeech(pos);
    if (!p) throw DecisionError("invalid value '" + pos + "' for field 'entry.pos'");
    d.entry = EntryKey{OptString(*entry, "lemma"), *p};
    if (d.entry->lemma.empty()) throw DecisionError("entry lemma is empty");
  }
  if (std::string sense = OptString(j, "sense_id"); !sense.empty()) {
    d.sense_id = sense;
  }
  d.reviewer = OptString(j, "reviewer");
  d.timestamp = OptString(j, "timestamp");

  if (d.status == DecisionStatus::kPending) {
    throw DecisionError("a logged decision cannot be pending");
  }
  if (d.maps_entry() && !d.entry) {
    throw DecisionError("status '" + status + "' requires an entry");
  }
  if (!d.maps_entry() && (d.entry || d.sense_id)) {
    throw DecisionError("status '" + status + "' must not carry an entry");
  }
  return d;
}

std::optional<std::string> CheckDecision(const MappingDecision& d,
                                         const Lexicon& lexicon) {
  if (d.status == DecisionStatus::kPending) return "status must not be pending";
  if (!d.maps_entry()) {
    if (d.entry || d.sense_id) {
      return "status '" + std::string(ToString(d.status)) +
             "' must not carry an entry";
    }
    return std::nullopt;
  }
  if (!d.entry) {
    return "status '" + std::string(ToString(d.status)) + "' requires an entry";
  }
  const LexiconEntry* e = lexicon.Find(*d.entry);
  if (!e) {
    return "entry '" + d.entry->lemma + "/" +
           std::string(ToString(d.entry->pos)) + "' is not in the lexicon";
  }
  if (d.sense_id && !e->FindSense(*d.sense_id)) {
    return "entry '" + e->lemma + "' has no sense '" + *d.sense_id + "'";
  }
  return std::nullopt;
}

std::vector<MappingDecision> LoadDecisionLogStream(std::istream& in) {
  std::vector<MappingDecision> log;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      log.push_back(DecisionFromJson(raw));
    } catch (const DecisionError& e) {
      throw DecisionError(e.what(), line);
    }
  }
  return log;
}

std::vector<MappingDecision> LoadDecisionLog(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    if (access(path.c_str(), F_OK) != 0) return {};
    throw DecisionError("cannot open decision log '" + path + "'");
  }
  return LoadDecisionLogStream(in);
}

DecisionLog::DecisionLog(const std::string& path) : path_(path) {
  fd_ = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
  if (fd_ < 0) {
    throw DecisionError("cannot open decision log '" + path +
                        "': " + std::strerror(errno));
  }
}

DecisionLog::~DecisionLog() {
  if (fd_ >= 0) ::close(fd_);
}

void DecisionLog::Append(const MappingDecision& d) {
  const std::string line = DecisionToJson(d) + "\n";
  std::lock_guard<std::mutex> lock(mu_);
  size_t done = 0;
  while (done < line.size()) {
    const ssize_t n = ::write(fd_, line.data() + done, line.size() - done);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw DecisionError("write to '" + path_ + "' failed: " + std::strerror(errno));
    }
    done += static_cast<size_t>(n);
  }
  if (::fsync(fd_) != 0) {
    throw DecisionError("fsync of '" + path_ + "' failed: " + std::strerror(errno));
  }
}

AppliedDecisions ApplyDecisions(const std::vector<CandidateKey>& pool,
                                const std::vector<MappingDecision>& log) {
  AppliedDecisions out;
  for (const CandidateKey& k : pool) {
    MappingDecision pending;
    pending.key = k;
    out.effective.emplace(k, std::move(pending));
  }
  for (const MappingDecision& d : log) {
    auto it = out.effective.find(d.key);
    if (it == out.effective.end()) {
      out.skipped.push_back(d);
    } else {
      it->second = d;
    }
  }
  return out;
}

std::optional<NeologismRecord> Classify(const MappingDecision& decision,
                                        const Letter& letter,
                                        const Person& writer,
                                        const Lexicon& lexicon,
                                        int window_years) {
  if (!decision.maps_entry()) return std::nullopt;
  if (!decision.entry) throw ClassifyError("decision without entry");
  const LexiconEntry* e = lexicon.Find(*decision.entry);
  if (!e) {
    throw ClassifyError("entry '" + decision.entry->lemma + "/" +
                        std::string(ToString(decision.entry->pos)) +
                        "' is not in the lexicon");
  }
  const Sense* sense = nullptr;
  if (decision.sense_id) {
    sense = e->FindSense(*decision.sense_id);
    if (!sense) {
      throw ClassifyError("entry '" + e->lemma + "' has no sense '" +
                          *decision.sense_id + "'");
    }
  } else {
    for (const Sense& s : e->senses) {
      if (!sense || s.first_attestation_year < sense->first_attestation_year) {
        sense = &s;
      }
    }
  }
  const int attested = sense->first_attestation_year;
  const int delta = letter.year - attested;
  if (delta > window_years) return std::nullopt;

  NeologismRecord r;
  r.lemma = e->lemma;
  r.pos = e->pos;
  r.sense_id = sense->sense_id;
  r.form = decision.key.form;
  r.letter_id = letter.id;
  r.corpus_year = letter.year;
  r.attestation_year = attested;
  r.delta_years = delta;
  r.antedating = delta < 0;
  r.ht_path = sense->ht_path;
  r.etymology = e->etymology;
  r.writer = writer;
  r.relationship = letter.relationship;
  return r;
}

std::vector<NeologismRecord> ClassifyAll(
    const std::vector<CandidateKey>& pool,
    const std::vector<MappingDecision>& log, const Corpus& corpus,
    const Lexicon& lexicon, int window_years) {
  const AppliedDecisions applied = ApplyDecisions(pool, log);
  std::vector<NeologismRecord> out;
  for (const CandidateKey& k : pool) {
    const MappingDecision& d = applied.effective.at(k);
    if (!d.maps_entry()) continue;
    const Letter* letter = corpus.FindLetter(k.letter_id);
    if (!letter) throw ClassifyError("unknown letter '" + k.letter_id + "'");
    auto r = Classify(d, *letter, corpus.sender(*letter), lexicon, window_years);
    if (r) out.push_back(std::move(*r));
  }
  return out;
}

std::vector<CandidateKey> NoEntryCandidates(const AppliedDecisions& applied,
                                            const std::vector<CandidateKey>& pool) {
  std::vector<CandidateKey> out;
  for (const CandidateKey& k : pool) {
    auto it = applied.effective.find(k);
    if (it != applied.effective.end() &&
        it->second.status == DecisionStatus::kNoEntry) {
      out.push_back(k);
    }
  }
  return out;
}

size_t CountTypes(const std::vector<NeologismRecord>& records) {
  std::set<EntryKey> types;
  for (const NeologismRecord& r : records) types.insert(r.type());
  return types.size();
}

std::string RecordToJson(const NeologismRecord& r) {
  json ety = {{"kind", ToString(r.etymology.kind)}};
  if (r.etymology.source_language) {
    ety["source_language"] = *r.etymology.source_language;
  }
  json writer = {{"id", r.writer.id},
                 {"name", r.writer.name},
                 {"gender", ToString(r.writer.gender)},
                 {"rank", ToString(r.writer.rank)}};
  if (r.writer.birth_year) writer["birth_year"] = *r.writer.birth_year;
  if (r.writer.region) writer["region"] = *r.writer.region;
  json j = {{"lemma", r.lemma},
            {"pos", ToString(r.pos)},
            {"sense_id", r.sense_id},
            {"form", r.form},
            {"letter_id", r.letter_id},
            {"corpus_year", r.corpus_year},
            {"attestation_year", r.attestation_year},
            {"delta_years", r.delta_years},
            {"antedating", r.antedating},
            {"ht_path", r.ht_path},
            {"etymology", std::move(ety)},
            {"writer", std::move(writer)},
            {"relationship", ToString(r.relationship)}};
  return j.dump();
}

NeologismRecord RecordFromJson(std::string_view text) {
  NeologismRecord r;
  try {
    const json j = json::parse(text);
    r.lemma = j.at("lemma").get<std::string>();
    const std::string pos = j.at("pos").get<std::string>();
    auto p = ParsePartOfSpeech(pos);
    if (!p) throw ClassifyError("invalid pos '" + pos + "'");
    r.pos = *p;
    r.sense_id = j.at("sense_id").get<std::string>();
    r.form = j.at("form").get<std::string>();
    r.letter_id = j.at("letter_id").get<std::string>();
    r.corpus_year = j.at("corpus_year").get<int>();
    r.attestation_year = j.at("attestation_year").get<int>();
    r.delta_years = j.at("delta_years").get<int>();
    r.antedating = j.at("antedating").get<bool>();
    r.ht_path = j.at("ht_path").get<std::vector<std::string>>();
    const json& ety = j.at("etymology");
    auto kind = ParseEtymologyKind(ety.at("kind").get<std::string>());
    if (!kind) throw ClassifyError("invalid etymology kind");
    r.etymology.kind = *kind;
    if (ety.contains("source_language")) {
      r.etymology.source_language = ety["source_language"].get<std::string>();
    }
    const json& w = j.at("writer");
    r.writer.id = w.at("id").get<std::string>();
    r.writer.name = w.value("name", "");
    auto g = ParseGender(w.at("gender").get<std::string>());
    auto rank = ParseRank(w.at("rank").get<std::string>());
    if (!g || !rank) throw ClassifyError("invalid writer attributes");
    r.writer.gender = *g;
    r.writer.rank = *rank;
    if (w.contains("birth_year")) r.writer.birth_year = w["birth_year"].get<int>();
    if (w.contains("region")) r.writer.region = w["region"].get<std::string>();
    auto rel = ParseRelationship(j.at("relationship").get<std::string>());
    if (!rel) throw ClassifyError("invalid relationship");
    r.relationship = *rel;
  } catch (const json::exception& e) {
    throw ClassifyError(std::string("malformed record: ") + e.what());
  }
  return r;
}

void WriteRecords(const std::vector<NeologismRecord>& records, std::ostream& out) {
  for (const NeologismRecord& r : records) out << RecordToJson(r) << '\n';
}

std::vector<NeologismRecord> LoadRecords(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ClassifyError("cannot open records file '" + path + "'");
  std::vector<NeologismRecord> out;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(RecordFromJson(raw));
    } catch (const ClassifyError& e) {
      throw ClassifyError("line " + std::to_string(line) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace neologia
