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

#include "neologia/lexicon.h"

#include <algorithm>
#include <fstream>
#include <map>

#include "json.hpp"
#include "neologia/text.h"

namespace neologia {

using json = nlohmann::json;

namespace {

constexpr std::pair<PartOfSpeech, std::string_view> kPosNames[] = {
    {PartOfSpeech::kNoun, "noun"},
    {PartOfSpeech::kAdjective, "adjective"},
    {PartOfSpeech::kVerb, "verb"},
    {PartOfSpeech::kAdverb, "adverb"},
    {PartOfSpeech::kOther, "other"},
};
constexpr std::pair<EtymologyKind, std::string_view> kEtymologyNames[] = {
    {EtymologyKind::kBorrowing, "borrowing"},
    {EtymologyKind::kDerivation, "derivation"},
    {EtymologyKind::kCompounding, "compounding"},
    {EtymologyKind::kConversion, "conversion"},
    {EtymologyKind::kUnknown, "unknown"},
};

void Validate(const LexiconEntry& e) {
  const std::string who = "entry '" + e.lemma + "/" +
                          std::string(ToString(e.pos)) + "'";
  if (e.lemma.empty()) throw LexiconError("entry with empty lemma");
  if (e.senses.empty()) throw LexiconError(who + " has no senses");
  if (e.variants.empty()) throw LexiconError(who + " has no variants");
  if (!e.variants.count(FoldCase(e.lemma))) {
    throw LexiconError(who + " does not list its lemma as a variant");
  }
  const bool borrowing = e.etymology.kind == EtymologyKind::kBorrowing;
  if (borrowing != e.etymology.source_language.has_value()) {
    throw LexiconError(who + (borrowing ? " is a borrowing without source_language"
                                        : " has source_language but is not a borrowing"));
  }
  std::set<std::string> ids;
  for (const Sense& s : e.senses) {
    if (!ids.insert(s.sense_id).second) {
      throw LexiconError(who + " repeats sense id '" + s.sense_id + "'");
    }
    if (s.ht_path.empty()) {
      throw LexiconError(who + " sense '" + s.sense_id + "' has empty ht_path");
    }
    if (std::find(std::begin(kHtRoots), std::end(kHtRoots), s.ht_path[0]) ==
        std::end(kHtRoots)) {
      throw LexiconError(who + " sense '" + s.sense_id +
                         "' has unknown HT root '" + s.ht_path[0] + "'");
    }
  }
}

template <typename E, size_t N>
std::optional<E> ValueOf(const std::pair<E, std::string_view> (&table)[N],
                         std::string_view name) {
  for (const auto& [v, n] : table) {
    if (n == name) return v;
  }
  return std::nullopt;
}

template <typename E, size_t N>
std::string_view NameOf(const std::pair<E, std::string_view> (&table)[N],
                        E value) {
  for (const auto& [v, n] : table) {
    if (v == value) return n;
  }
  return "?";
}

}  // namespace

std::string_view ToString(PartOfSpeech p) { return NameOf(kPosNames, p); }
std::string_view ToString(EtymologyKind k) { return NameOf(kEtymologyNames, k); }
std::optional<PartOfSpeech> ParsePartOfSpeech(std::string_view s) {
  return ValueOf(kPosNames, s);
}
std::optional<EtymologyKind> ParseEtymologyKind(std::string_view s) {
  return ValueOf(kEtymologyNames, s);
}

LexiconError::LexiconError(const std::string& what, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                  : what),
      line_(line) {}

const Sense* LexiconEntry::FindSense(std::string_view sense_id) const {
  for (const Sense& s : senses) {
    if (s.sense_id == sense_id) return &s;
  }
  return nullptr;
}

Lexicon::Lexicon(std::vector<LexiconEntry> entries)
    : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const LexiconEntry& a, const LexiconEntry& b) {
              return std::tie(a.lemma, a.pos) < std::tie(b.lemma, b.pos);
            });
  for (size_t i = 0; i < entries_.size(); ++i) {
    Validate(entries_[i]);
    if (i > 0 && entries_[i - 1].lemma == entries_[i].lemma &&
        entries_[i - 1].pos == entries_[i].pos) {
      throw LexiconError("duplicate entry '" + entries_[i].lemma + "/" +
                         std::string(ToString(entries_[i].pos)) + "'");
    }
    for (const std::string& v : entries_[i].variants) {
      variant_index_[v].push_back(i);
    }
  }
}

std::vector<const LexiconEntry*> Lexicon::LookupVariant(
    std::string_view form) const {
  std::vector<const LexiconEntry*> out;
  auto it = variant_index_.find(FoldCase(form));
  if (it == variant_index_.end()) return out;
  for (size_t i : it->second) out.push_back(&entries_[i]);
  return out;
}

const LexiconEntry* Lexicon::Find(const EntryKey& key) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), key,
      [](const LexiconEntry& e, const EntryKey& k) {
        return std::tie(e.lemma, e.pos) < std::tie(k.lemma, k.pos);
      });
  if (it == entries_.end() || it->lemma != key.lemma || it->pos != key.pos) {
    return nullptr;
  }
  return &*it;
}

namespace {

LexiconEntry ParseEntry(const json& rec, int line) {
  auto str = [&](const json& obj, const char* field) {
    auto it = obj.find(field);
    if (it == obj.end() || !it->is_string()) {
      throw LexiconError(std::string("missing or non-string field '") + field +
                             "'",
                         line);
    }
    return it->get<std::string>();
  };
  auto arr = [&](const json& obj, const char* field) -> const json& {
    auto it = obj.find(field);
    if (it == obj.end() || !it->is_array()) {
      throw LexiconError(std::string("missing or non-array field '") + field +
                             "'",
                         line);
    }
    return *it;
  };

  LexiconEntry e;
  e.lemma = str(rec, "lemma");
  const std::string pos = str(rec, "pos");
  auto p = ParsePartOfSpeech(pos);
  if (!p) throw LexiconError("invalid value '" + pos + "' for field 'pos'", line);
  e.pos = *p;
  for (const json& v : arr(rec, "variants")) {
    if (!v.is_string()) throw LexiconError("variant must be a string", line);
    e.variants.insert(FoldCase(v.get<std::string>()));
  }
  e.variants.insert(FoldCase(e.lemma));

  auto ety = rec.find("etymology");
  if (ety == rec.end() || !ety->is_object()) {
    throw LexiconError("missing field 'etymology'", line);
  }
  const std::string kind = str(*ety, "kind");
  auto k = ParseEtymologyKind(kind);
  if (!k) {
    throw LexiconError("invalid value '" + kind + "' for field 'etymology.kind'",
                       line);
  }
  e.etymology.kind = *k;
  if (ety->contains("source_language") && !(*ety)["source_language"].is_null()) {
    e.etymology.source_language = str(*ety, "source_language");
  }

  for (const json& s : arr(rec, "senses")) {
    if (!s.is_object()) throw LexiconError("sense must be an object", line);
    Sense sense;
    sense.sense_id = str(s, "sense_id");
    sense.gloss = s.contains("gloss") ? str(s, "gloss") : std::string();
    auto year = s.find("first_attestation_year");
    if (year == s.end() || !year->is_number_integer()) {
      throw LexiconError("sense '" + sense.sense_id +
                             "' lacks integer first_attestation_year",
                         line);
    }
    sense.first_attestation_year = year->get<int>();
    for (const json& label : arr(s, "ht_path")) {
      if (!label.is_string()) throw LexiconError("ht_path label must be a string", line);
      sense.ht_path.push_back(label.get<std::string>());
    }
    e.senses.push_back(std::move(sense));
  }
  try {
    Validate(e);
  } catch (const LexiconError& err) {
    throw LexiconError(err.what(), line);
  }
  return e;
}

}  // namespace

Lexicon LoadLexiconStream(std::istream& in) {
  std::vector<LexiconEntry> entries;
  std::map<EntryKey, int> seen;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    json rec;
    try {
      rec = json::parse(raw);
    } catch (const json::parse_error& e) {
      throw LexiconError(std::string("malformed JSON: ") + e.what(), line);
    }
    if (!rec.is_object()) throw LexiconError("record is not an object", line);
    entries.push_back(ParseEntry(rec, line));
    EntryKey key{entries.back().lemma, entries.back().pos};
    if (!seen.emplace(key, line).second) {
      throw LexiconError("duplicate entry '" + key.lemma + "/" +
                             std::string(ToString(key.pos)) + "'",
                         line);
    }
  }
  return Lexicon(std::move(entries));
}

Lexicon LoadLexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LexiconError("cannot open lexicon file '" + path + "'");
  return LoadLexiconStream(in);
}

void SerializeLexicon(const Lexicon& lexicon, std::ostream& out) {
  for (const LexiconEntry& e : lexicon.entries()) {
    json senses = json::array();
    for (const Sense& s : e.senses) {
      senses.push_back({{"sense_id", s.sense_id},
                        {"gloss", s.gloss},
                        {"first_attestation_year", s.first_attestation_year},
                        {"ht_path", s.ht_path}});
    }
    json ety = {{"kind", ToString(e.etymology.kind)}};
    if (e.etymology.source_language) {
      ety["source_language"] = *e.etymology.source_language;
    }
    json rec = {{"lemma", e.lemma},
                {"pos", ToString(e.pos)},
                {"variants", e.variants},
                {"etymology", std::move(ety)},
                {"senses", std::move(senses)}};
    out << rec.dump() << '\n';
  }
}

int EarliestAttestation(const LexiconEntry& entry,
                        const std::optional<std::string>& sense_id) {
  if (sense_id) {
    const Sense* s = entry.FindSense(*sense_id);
    if (!s) {
      throw LexiconError("entry '" + entry.lemma + "' has no sense '" +
                         *sense_id + "'");
    }
    return s->first_attestation_year;
  }
  int year = entry.senses.front().first_attestation_year;
  for (const Sense& s : entry.senses) {
    year = std::min(year, s.first_attestation_year);
  }
  return year;
}

std::string HtRollup(const Sense& sense, int level) {
  std::string out;
  const size_t n = std::min<size_t>(std::max(level, 1), sense.ht_path.size());
  for (size_t i = 0; i < n; ++i) {
    if (i > 0) out += kHtSeparator;
    out += sense.ht_path[i];
  }
  return out;
}

}  // namespace neologia
