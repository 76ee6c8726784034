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

#ifndef NEOLOGIA_LEXICON_H_
#define NEOLOGIA_LEXICON_H_

#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace neologia {

enum class PartOfSpeech { kNoun, kAdjective, kVerb, kAdverb, kOther };
enum class EtymologyKind {
  kBorrowing,
  kDerivation,
  kCompounding,
  kConversion,
  kUnknown,
};

std::string_view ToString(PartOfSpeech p);
std::string_view ToString(EtymologyKind k);
std::optional<PartOfSpeech> ParsePartOfSpeech(std::string_view s);
std::optional<EtymologyKind> ParseEtymologyKind(std::string_view s);

// Top-level Historical Thesaurus classes.
inline constexpr std::string_view kHtRoots[] = {"the world", "the mind",
                                                "society"};
inline constexpr std::string_view kHtSeparator = " » ";

struct Sense {
  std::string sense_id;
  std::string gloss;
  int first_attestation_year = 0;
  std::vector<std::string> ht_path;  // root first

  bool operator==(const Sense&) const = default;
};

struct Etymology {
  EtymologyKind kind = EtymologyKind::kUnknown;
  std::optional<std::string> source_language;  // iff kind == kBorrowing

  bool operator==(const Etymology&) const = default;
};

struct LexiconEntry {
  std::string lemma;
  PartOfSpeech pos = PartOfSpeech::kOther;
  std::set<std::string> variants;  // case-folded, includes the lemma
  std::vector<Sense> senses;
  Etymology etymology;

  const Sense* FindSense(std::string_view sense_id) const;
  bool operator==(const LexiconEntry&) const = default;
};

// Identifies an entry: homonyms share a lemma but differ in POS.
struct EntryKey {
  std::string lemma;
  PartOfSpeech pos = PartOfSpeech::kOther;

  auto operator<=>(const EntryKey&) const = default;
};

class LexiconError : public std::runtime_error {
 public:
  LexiconError(const std::string& what, int line = 0);
  int line() const { return line_; }

 private:
  int line_;
};

class Lexicon {
 public:
  Lexicon() = default;
  // Validates entries and builds the variant index. Entries are kept in
  // (lemma, pos) order.
  explicit Lexicon(std::vector<LexiconEntry> entries);

  const std::vector<LexiconEntry>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }

  // All entries listing `form` (case-folded internally) as a variant, in
  // (lemma, pos) order.
  std::vector<const LexiconEntry*> LookupVariant(std::string_view form) const;
  const LexiconEntry* Find(const EntryKey& key) const;

  // Variant index: case-folded variant -> entry positions.
  const std::unordered_map<std::string, std::vector<size_t>>& variant_index()
      const {
    return variant_index_;
  }

  bool operator==(const Lexicon& other) const {
    return entries_ == other.entries_;
  }

 private:
  std::vector<LexiconEntry> entries_;
  std::unordered_map<std::string, std::vector<size_t>> variant_index_;
};

Lexicon LoadLexicon(const std::string& path);
Lexicon LoadLexiconStream(std::istream& in);
void SerializeLexicon(const Lexicon& lexicon, std::ostream& out);

// Year of the given sense, or the earliest over all senses when no sense is
// named. Throws LexiconError for an unknown sense id.
int EarliestAttestation(const LexiconEntry& entry,
                        const std::optional<std::string>& sense_id =
                            std::nullopt);

// First min(level, path length) labels joined with " » ". level >= 1.
std::string HtRollup(const Sense& sense, int level);

}  // namespace neologia

#endif  // NEOLOGIA_LEXICON_H_
