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

#include "neologia/corpus.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "neologia/text.h"

namespace neologia {

using json = nlohmann::json;

namespace {

constexpr std::pair<Gender, std::string_view> kGenderNames[] = {
    {Gender::kMale, "male"},
    {Gender::kFemale, "female"},
    {Gender::kUnknown, "unknown"},
};
constexpr std::pair<Rank, std::string_view> kRankNames[] = {
    {Rank::kRoyalty, "royalty"},
    {Rank::kNobility, "nobility"},
    {Rank::kGentry, "gentry"},
    {Rank::kClergy, "clergy"},
    {Rank::kProfessionals, "professionals"},
    {Rank::kMerchants, "merchants"},
    {Rank::kOtherNonGentry, "other_non_gentry"},
    {Rank::kUnknown, "unknown"},
};
constexpr std::pair<Relationship, std::string_view> kRelationshipNames[] = {
    {Relationship::kNuclearFamily, "nuclear_family"},
    {Relationship::kOtherFamily, "other_family"},
    {Relationship::kCloseFriends, "close_friends"},
    {Relationship::kOtherAcquaintances, "other_acquaintances"},
};
constexpr std::pair<TokenFlag, std::string_view> kFlagNames[] = {
    {kForeign, "foreign"},
    {kProperNoun, "proper_noun"},
    {kAbbreviation, "abbreviation"},
    {kEditorial, "editorial"},
};

template <typename E, size_t N>
std::string_view NameOf(const std::pair<E, std::string_view> (&table)[N],
                        E value) {
  for (const auto& [v, name] : table) {
    if (v == value) return name;
  }
  return "?";
}

template <typename E, size_t N>
std::optional<E> ValueOf(const std::pair<E, std::string_view> (&table)[N],
                         std::string_view name) {
  for (const auto& [v, n] : table) {
    if (n == name) return v;
  }
  return std::nullopt;
}

// Outer punctuation stripped from token edges. '&' is a word in its own
// right in early modern text and is kept.
bool IsStrippable(char32_t c) {
  if (c < 0x80) {
    return (c >= 0x21 && c <= 0x2F && c != U'&') ||
           (c >= 0x3A && c <= 0x40) || (c >= 0x5B && c <= 0x60 && c != U'^') ||
           (c >= 0x7B && c <= 0x7E);
  }
  switch (c) {
    case U'…':
    case U'–':
    case U'—':
    case U'‘':
    case U'’':
    case U'“':
    case U'”':
    case U'«':
    case U'»':
    case U'¶':
    case U'§':
      return true;
    default:
      return false;
  }
}

std::string RequireString(const json& rec, const char* field, int line) {
  auto it = rec.find(field);
  if (it == rec.end() || !it->is_string()) {
    throw CorpusError(std::string("missing or non-string field '") + field +
                          "'",
                      line);
  }
  return it->get<std::string>();
}

int RequireInt(const json& rec, const char* field, int line) {
  auto it = rec.find(field);
  if (it == rec.end() || !it->is_number_integer()) {
    throw CorpusError(std::string("missing or non-integer field '") + field +
                          "'",
                      line);
  }
  return it->get<int>();
}

template <typename E>
E RequireEnum(const json& rec, const char* field, int line,
              std::optional<E> (*parse)(std::string_view)) {
  std::string value = RequireString(rec, field, line);
  auto parsed = parse(value);
  if (!parsed) {
    throw CorpusError(std::string("invalid value '") + value +
                          "' for field '" + field + "'",
                      line);
  }
  return *parsed;
}

}  // namespace

std::string_view ToString(Gender g) { return NameOf(kGenderNames, g); }
std::string_view ToString(Rank r) { return NameOf(kRankNames, r); }
std::string_view ToString(Relationship r) {
  return NameOf(kRelationshipNames, r);
}
std::optional<Gender> ParseGender(std::string_view s) {
  return ValueOf(kGenderNames, s);
}
std::optional<Rank> ParseRank(std::string_view s) {
  return ValueOf(kRankNames, s);
}
std::optional<Relationship> ParseRelationship(std::string_view s) {
  return ValueOf(kRelationshipNames, s);
}
std::string_view FlagName(TokenFlag f) { return NameOf(kFlagNames, f); }
std::optional<TokenFlag> ParseFlag(std::string_view s) {
  return ValueOf(kFlagNames, s);
}

Period ParsePeriod(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("period must look like START:END");
  }
  Period p;
  auto parse = [&](std::string_view part, int* out) {
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), *out);
    if (ec != std::errc() || ptr != part.data() + part.size()) {
      throw std::invalid_argument("bad year in period: " + std::string(spec));
    }
  };
  parse(spec.substr(0, colon), &p.start_year);
  parse(spec.substr(colon + 1), &p.end_year);
  if (p.start_year > p.end_year) {
    throw std::invalid_argument("period start after end: " + std::string(spec));
  }
  return p;
}

std::string ToString(const Period& p) {
  return std::to_string(p.start_year) + ":" + std::to_string(p.end_year);
}

CorpusError::CorpusError(const std::string& what, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                  : what),
      line_(line) {}

Corpus::Corpus(std::vector<Person> persons, std::vector<Letter> letters,
               Period period)
    : letters_(std::move(letters)), period_(period) {
  for (auto& p : persons) {
    std::string id = p.id;
    if (!persons_.emplace(id, std::move(p)).second) {
      throw CorpusError("duplicate person id '" + id + "'");
    }
  }
  std::sort(letters_.begin(), letters_.end(),
            [](const Letter& a, const Letter& b) {
              return std::tie(a.year, a.id) < std::tie(b.year, b.id);
            });
  for (size_t i = 0; i < letters_.size(); ++i) {
    const Letter& l = letters_[i];
    if (!letter_index_.emplace(l.id, i).second) {
      throw CorpusError("duplicate letter id '" + l.id + "'");
    }
    if (!period_.Contains(l.year)) {
      throw CorpusError("letter '" + l.id + "' year " +
                        std::to_string(l.year) + " outside period " +
                        ToString(period_));
    }
    auto sender = persons_.find(l.sender_id);
    if (sender == persons_.end()) {
      throw CorpusError("letter '" + l.id + "' has unresolved sender '" +
                        l.sender_id + "'");
    }
    if (!persons_.count(l.recipient_id)) {
      throw CorpusError("letter '" + l.id + "' has unresolved recipient '" +
                        l.recipient_id + "'");
    }
    const auto& birth = sender->second.birth_year;
    if (birth && *birth >= l.year) {
      throw CorpusError("letter '" + l.id + "' predates the birth of '" +
                        l.sender_id + "'");
    }
  }
}

const Person& Corpus::person(const std::string& id) const {
  auto it = persons_.find(id);
  if (it == persons_.end()) throw CorpusError("unknown person '" + id + "'");
  return it->second;
}

const Letter* Corpus::FindLetter(std::string_view id) const {
  auto it = letter_index_.find(id);
  return it == letter_index_.end() ? nullptr : &letters_[it->second];
}

std::vector<Token> Tokenize(std::string_view raw_text) {
  const std::u32string text = DecodeUtf8(raw_text);
  std::vector<Token> out;
  int depth = 0;  // editorial bracket nesting
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpace(text[i])) ++i;
    if (i >= text.size()) break;
    size_t end = i;
    while (end < text.size() && !IsSpace(text[end])) ++end;

    // Brackets open/close editorial spans and are never part of a surface.
    bool editorial = depth > 0;
    std::u32string chunk;
    std::vector<size_t> pos;
    for (size_t k = i; k < end; ++k) {
      char32_t c = text[k];
      if (c == U'[') {
        ++depth;
        editorial = true;
        continue;
      }
      if (c == U']') {
        if (depth > 0) --depth;
        continue;
      }
      chunk.push_back(c);
      pos.push_back(k);
    }
    size_t b = 0, e = chunk.size();
    while (b < e && IsStrippable(chunk[b])) ++b;
    while (e > b && IsStrippable(chunk[e - 1])) --e;
    std::u32string surface;
    int offset = -1;
    for (size_t k = b; k < e; ++k) {
      if (chunk[k] == U'^') continue;
      if (offset < 0) offset = static_cast<int>(pos[k]);
      surface.push_back(chunk[k]);
    }
    if (!surface.empty()) {
      Token t;
      t.surface = EncodeUtf8(surface);
      t.offset = offset;
      if (editorial) t.flags |= kEditorial;
      out.push_back(std::move(t));
    }
    i = end;
  }
  return out;
}

namespace {

Person ParsePerson(const json& rec, int line) {
  Person p;
  p.id = RequireString(rec, "id", line);
  p.name = RequireString(rec, "name", line);
  p.gender = RequireEnum<Gender>(rec, "gender", line, &ParseGender);
  p.rank = RequireEnum<Rank>(rec, "rank", line, &ParseRank);
  if (rec.contains("birth_year") && !rec["birth_year"].is_null()) {
    p.birth_year = RequireInt(rec, "birth_year", line);
  }
  if (rec.contains("region") && !rec["region"].is_null()) {
    p.region = RequireString(rec, "region", line);
  }
  return p;
}

Letter ParseLetter(const json& rec, int line) {
  Letter l;
  l.id = RequireString(rec, "id", line);
  l.collection = RequireString(rec, "collection", line);
  l.year = RequireInt(rec, "year", line);
  l.sender_id = RequireString(rec, "sender", line);
  l.recipient_id = RequireString(rec, "recipient", line);
  l.relationship =
      RequireEnum<Relationship>(rec, "relationship", line, &ParseRelationship);
  const bool has_text = rec.contains("text");
  const bool has_tokens = rec.contains("tokens");
  if (has_text == has_tokens) {
    throw CorpusError("letter '" + l.id +
                          "' must have exactly one of 'text' or 'tokens'",
                      line);
  }
  if (has_text) {
    l.tokens = Tokenize(RequireString(rec, "text", line));
    return l;
  }
  const json& toks = rec["tokens"];
  if (!toks.is_array()) throw CorpusError("field 'tokens' must be an array", line);
  l.tokens.reserve(toks.size());
  for (const json& t : toks) {
    if (!t.is_object()) throw CorpusError("token must be an object", line);
    Token tok;
    tok.surface = RequireString(t, "s", line);
    tok.offset = RequireInt(t, "o", line);
    if (tok.surface.empty()) throw CorpusError("empty token surface", line);
    for (char32_t c : DecodeUtf8(tok.surface)) {
      if (IsSpace(c)) {
        throw CorpusError("token surface '" + tok.surface +
                              "' contains whitespace",
                          line);
      }
    }
    if (t.contains("f")) {
      if (!t["f"].is_array()) throw CorpusError("field 'f' must be an array", line);
      for (const json& f : t["f"]) {
        auto flag = f.is_string() ? ParseFlag(f.get<std::string>()) : std::nullopt;
        if (!flag) {
          throw CorpusError("invalid value '" + f.dump() + "' for field 'f'",
                            line);
        }
        tok.flags |= *flag;
      }
    }
    l.tokens.push_back(std::move(tok));
  }
  return l;
}

}  // namespace

Corpus ParseCorpusStream(std::istream& in, std::optional<Period> period) {
  std::vector<Person> persons;
  std::vector<Letter> letters;
  std::map<std::string, int> person_line, letter_line;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    json rec;
    try {
      rec = json::parse(raw);
    } catch (const json::parse_error& e) {
      throw CorpusError(std::string("malformed JSON: ") + e.what(), line);
    }
    if (!rec.is_object()) throw CorpusError("record is not an object", line);
    const std::string type = RequireString(rec, "type", line);
    if (type == "person") {
      persons.push_back(ParsePerson(rec, line));
      if (!person_line.emplace(persons.back().id, line).second) {
        throw CorpusError("duplicate person id '" + persons.back().id + "'",
                          line);
      }
    } else if (type == "letter") {
      letters.push_back(ParseLetter(rec, line));
      if (!letter_line.emplace(letters.back().id, line).second) {
        throw CorpusError("duplicate letter id '" + letters.back().id + "'",
                          line);
      }
    } else {
      throw CorpusError("invalid value '" + type + "' for field 'type'", line);
    }
  }
  // Line-accurate reference and period checks before construction.
  for (const Letter& l : letters) {
    const int at = letter_line[l.id];
    for (const std::string* ref : {&l.sender_id, &l.recipient_id}) {
      if (!person_line.count(*ref)) {
        throw CorpusError("unresolved person ref '" + *ref + "'", at);
      }
    }
    if (period && !period->Contains(l.year)) {
      throw CorpusError("year " + std::to_string(l.year) + " outside period " +
                            ToString(*period),
                        at);
    }
  }
  Period p;
  if (period) {
    p = *period;
  } else if (!letters.empty()) {
    auto [lo, hi] = std::minmax_element(
        letters.begin(), letters.end(),
        [](const Letter& a, const Letter& b) { return a.year < b.year; });
    p = {lo->year, hi->year};
  }
  return Corpus(std::move(persons), std::move(letters), p);
}

Corpus ParseCorpus(const std::string& path, std::optional<Period> period) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open corpus file '" + path + "'");
  return ParseCorpusStream(in, period);
}

void SerializeCorpus(const Corpus& corpus, std::ostream& out) {
  for (const auto& [id, p] : corpus.persons()) {
    json rec = {{"type", "person"},
                {"id", p.id},
                {"name", p.name},
                {"gender", ToString(p.gender)},
                {"rank", ToString(p.rank)}};
    if (p.birth_year) rec["birth_year"] = *p.birth_year;
    if (p.region) rec["region"] = *p.region;
    out << rec.dump() << '\n';
  }
  for (const Letter& l : corpus.letters()) {
    json toks = json::array();
    for (const Token& t : l.tokens) {
      json jt = {{"s", t.surface}, {"o", t.offset}};
      if (t.flags) {
        json flags = json::array();
        for (const auto& [flag, name] : kFlagNames) {
          if (t.flags & flag) flags.push_back(name);
        }
        jt["f"] = std::move(flags);
      }
      toks.push_back(std::move(jt));
    }
    json rec = {{"type", "letter"},
                {"id", l.id},
                {"collection", l.collection},
                {"year", l.year},
                {"sender", l.sender_id},
                {"recipient", l.recipient_id},
                {"relationship", ToString(l.relationship)},
                {"tokens", std::move(toks)}};
    out << rec.dump() << '\n';
  }
}

std::set<std::string> DistinctWordForms(const Corpus& corpus,
                                        bool include_flagged) {
  std::set<std::string> forms;
  for (const Letter& l : corpus.letters()) {
    for (const Token& t : l.tokens) {
      if (!include_flagged && t.excluded()) continue;
      forms.insert(FoldCase(t.surface));
    }
  }
  return forms;
}

int64_t RunningWords(const Corpus& corpus, const LetterFilter& filter) {
  int64_t total = 0;
  for (const Letter& l : corpus.letters()) {
    if (!filter || filter(l)) total += static_cast<int64_t>(l.tokens.size());
  }
  return total;
}

std::optional<int> WriterAge(const Corpus& corpus, const Letter& letter) {
  const Person& p = corpus.sender(letter);
  if (!p.birth_year) return std::nullopt;
  return letter.year - *p.birth_year;
}

}  // namespace neologia
