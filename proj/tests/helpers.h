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

// Shared fixtures and builders for the test binaries.

#ifndef NEOLOGIA_TESTS_HELPERS_H_
#define NEOLOGIA_TESTS_HELPERS_H_

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "neologia/corpus.h"
#include "neologia/lexicon.h"

namespace neologia::testing {

inline std::string DataPath(const std::string& name) {
  return std::string(NEOLOGIA_DATA_DIR) + "/" + name;
}

// Fresh empty directory under the system temp dir.
inline std::string TempDir(const std::string& tag) {
  static std::mt19937_64 rng(std::random_device{}());
  auto dir = std::filesystem::temp_directory_path() /
             ("neologia-" + tag + "-" + std::to_string(rng() % 1000000000));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir.string();
}

inline std::vector<Token> Words(const std::vector<std::string>& words) {
  std::vector<Token> out;
  int off = 0;
  for (const std::string& w : words) {
    out.push_back({w, off, 0});
    off += static_cast<int>(w.size()) + 1;
  }
  return out;
}

inline Person MakePerson(std::string id, Gender g = Gender::kMale,
                         Rank r = Rank::kGentry,
                         std::optional<int> birth = std::nullopt) {
  Person p;
  p.id = std::move(id);
  p.name = p.id;
  p.gender = g;
  p.rank = r;
  p.birth_year = birth;
  return p;
}

inline Letter MakeLetter(std::string id, int year, std::string sender,
                         std::vector<Token> tokens,
                         Relationship rel = Relationship::kCloseFriends,
                         std::string recipient = "rcpt") {
  Letter l;
  l.id = std::move(id);
  l.collection = "TEST";
  l.sender_id = std::move(sender);
  l.recipient_id = std::move(recipient);
  l.year = year;
  l.relationship = rel;
  l.tokens = std::move(tokens);
  return l;
}

inline LexiconEntry MakeEntry(std::string lemma, PartOfSpeech pos, int year,
                              std::vector<std::string> variants = {},
                              std::vector<std::string> ht = {"the world"}) {
  LexiconEntry e;
  e.lemma = std::move(lemma);
  e.pos = pos;
  e.variants.insert(e.lemma);
  for (auto& v : variants) e.variants.insert(v);
  Sense s;
  s.sense_id = e.lemma + ".1";
  s.first_attestation_year = year;
  s.ht_path = std::move(ht);
  e.senses.push_back(s);
  e.etymology.kind = EtymologyKind::kDerivation;
  return e;
}

// Random lower-case word over a small alphabet so that collisions and
// near-misses are common.
inline std::string RandomWord(std::mt19937_64& rng, int min_len, int max_len,
                              std::string_view alphabet = "aeiouvjyklmnrst") {
  std::uniform_int_distribution<int> len(min_len, max_len);
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
  std::string w;
  for (int i = len(rng); i > 0; --i) w.push_back(alphabet[pick(rng)]);
  return w;
}

}  // namespace neologia::testing

#endif  // NEOLOGIA_TESTS_HELPERS_H_
