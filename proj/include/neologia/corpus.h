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

// Letter corpus with social metadata.
//
// A corpus is a set of persons and a chronologically ordered list of letters.
// Letters carry their text as tokens in original spelling; tokens flagged as
// foreign, proper nouns or abbreviations are kept (they count as running
// words) but are left out of the word-form inventory on request.

#ifndef NEOLOGIA_CORPUS_H_
#define NEOLOGIA_CORPUS_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace neologia {

enum class Gender { kMale, kFemale, kUnknown };
enum class Rank {
  kRoyalty,
  kNobility,
  kGentry,
  kClergy,
  kProfessionals,
  kMerchants,
  kOtherNonGentry,
  kUnknown,
};
enum class Relationship {
  kNuclearFamily,
  kOtherFamily,
  kCloseFriends,
  kOtherAcquaintances,
};

inline constexpr Gender kAllGenders[] = {Gender::kMale, Gender::kFemale,
                                         Gender::kUnknown};
inline constexpr Rank kAllRanks[] = {
    Rank::kRoyalty,   Rank::kNobility,       Rank::kGentry,
    Rank::kClergy,    Rank::kProfessionals,  Rank::kMerchants,
    Rank::kOtherNonGentry, Rank::kUnknown};
inline constexpr Relationship kAllRelationships[] = {
    Relationship::kNuclearFamily, Relationship::kOtherFamily,
    Relationship::kCloseFriends, Relationship::kOtherAcquaintances};

std::string_view ToString(Gender g);
std::string_view ToString(Rank r);
std::string_view ToString(Relationship r);
std::optional<Gender> ParseGender(std::string_view s);
std::optional<Rank> ParseRank(std::string_view s);
std::optional<Relationship> ParseRelationship(std::string_view s);

// Token flags, stored as a bit set.
enum TokenFlag : uint8_t {
  kForeign = 1 << 0,
  kProperNoun = 1 << 1,
  kAbbreviation = 1 << 2,
  kEditorial = 1 << 3,
};
// Flags that exclude a token from the word-form inventory.
inline constexpr uint8_t kExclusionFlags = kForeign | kProperNoun | kAbbreviation;

std::string_view FlagName(TokenFlag f);
std::optional<TokenFlag> ParseFlag(std::string_view s);

struct Token {
  std::string surface;  // original spelling, case preserved
  int offset = 0;       // code-point index into the source text
  uint8_t flags = 0;

  bool excluded() const { return (flags & kExclusionFlags) != 0; }
  bool operator==(const Token&) const = default;
};

struct Person {
  std::string id;
  std::string name;
  Gender gender = Gender::kUnknown;
  Rank rank = Rank::kUnknown;
  std::optional<int> birth_year;
  std::optional<std::string> region;

  bool operator==(const Person&) const = default;
};

struct Letter {
  std::string id;
  std::string collection;
  std::string sender_id;
  std::string recipient_id;
  int year = 0;
  Relationship relationship = Relationship::kOtherAcquaintances;
  std::vector<Token> tokens;

  bool operator==(const Letter&) const = default;
};

struct Period {
  int start_year = 0;
  int end_year = 0;

  bool Contains(int year) const {
    return year >= start_year && year <= end_year;
  }
  bool operator==(const Period&) const = default;
};

// Parses "1640:1660".
Period ParsePeriod(std::string_view spec);
std::string ToString(const Period& p);

// Raised for malformed corpus input. `line` is 1-based, 0 when the error is
// not tied to a line.
class CorpusError : public std::runtime_error {
 public:
  CorpusError(const std::string& what, int line = 0);
  int line() const { return line_; }

 private:
  int line_;
};

class Corpus {
 public:
  Corpus() = default;
  // Validates and sorts letters by (year, id).
  Corpus(std::vector<Person> persons, std::vector<Letter> letters,
         Period period);

  const std::map<std::string, Person>& persons() const { return persons_; }
  const std::vector<Letter>& letters() const { return letters_; }
  const Period& period() const { return period_; }

  const Person& person(const std::string& id) const;
  const Person& sender(const Letter& letter) const {
    return person(letter.sender_id);
  }
  // nullptr when absent.
  const Letter* FindLetter(std::string_view id) const;

  bool operator==(const Corpus&) const = default;

 private:
  std::map<std::string, Person> persons_;
  std::vector<Letter> letters_;
  Period period_;
  std::map<std::string, size_t, std::less<>> letter_index_;
};

// Splits raw letter text into tokens. Whitespace separates tokens; outer
// punctuation is stripped (internal hyphens and apostrophes stay); a caret
// marking superscript letters (w^th) is dropped and the letters joined.
// Text inside [...] is flagged editorial.
std::vector<Token> Tokenize(std::string_view raw_text);

// Reads a corpus JSONL file. When `period` is given, every letter year must
// fall inside it; otherwise the period spans the letters.
Corpus ParseCorpus(const std::string& path,
                   std::optional<Period> period = std::nullopt);
Corpus ParseCorpusStream(std::istream& in,
                         std::optional<Period> period = std::nullopt);

// Writes the corpus as JSONL (persons first, then letters in order; letters
// always in token form).
void SerializeCorpus(const Corpus& corpus, std::ostream& out);

// Case-folded distinct surface forms.
std::set<std::string> DistinctWordForms(const Corpus& corpus,
                                        bool include_flagged);

using LetterFilter = std::function<bool(const Letter&)>;
int64_t RunningWords(const Corpus& corpus, const LetterFilter& filter = {});

// Age of the letter's writer at the time of writing, when known.
std::optional<int> WriterAge(const Corpus& corpus, const Letter& letter);

}  // namespace neologia

#endif  // NEOLOGIA_CORPUS_H_
