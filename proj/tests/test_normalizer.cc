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

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "doctest.h"
#include "helpers.h"
#include "neologia/normalizer.h"
#include "neologia/text.h"
#include "oracles.h"

namespace neologia {
namespace {

using testing::DataPath;
using testing::MakeEntry;
using testing::RandomWord;

const Lexicon& Fixture() {
  static const Lexicon lex = LoadLexicon(DataPath("oed-mini.jsonl"));
  return lex;
}

std::string Rank1(const Normalizer& n, const std::string& form) {
  auto c = n.Normalize(form, NormalizerOptions{});
  return c.empty() ? "" : c[0].entry->lemma;
}

TEST_CASE("rule application respects context") {
  CHECK(ApplyRule({"e", "", RuleContext::kFinal, 0.3}, "olde") ==
        std::vector<std::string>{"old"});
  CHECK(ApplyRule({"e", "", RuleContext::kFinal, 0.3}, "oled").empty());
  CHECK(ApplyRule({"v", "u", RuleContext::kInitial, 0.2}, "vvv") ==
        std::vector<std::string>{"uvv"});
  CHECK(ApplyRule({"v", "u", RuleContext::kAnywhere, 0.2}, "vav") ==
        std::vector<std::string>{"uav", "vau"});
  CHECK(ApplyRule({"abc", "x", RuleContext::kAnywhere, 0.2}, "ab").empty());
}

TEST_CASE("default rule closure") {
  const Lexicon lex;
  const Normalizer n(lex, DefaultRules());
  const auto vppon = n.RuleClosure("vppon", 2.5);
  CHECK(vppon.count("upon"));
  CHECK(vppon.at("vppon") == 0.0);
  CHECK(n.RuleClosure("iustice", 2.5).count("justice"));
  CHECK(n.RuleClosure("olde", 2.5).count("old"));
  CHECK(n.RuleClosure("vvord", 2.5).count("word"));
  CHECK(n.RuleClosure("publick", 2.5).count("publik"));
  CHECK(n.RuleClosure("coale", 2.5).count("cole"));
  CHECK_FALSE(n.RuleClosure("vppon", 0.1).count("upon"));
}

TEST_CASE("rule closure stops at depth three") {
  const Lexicon lex;
  Normalizer n(lex, {{"a", "b", RuleContext::kInitial, 0.1},
                     {"b", "c", RuleContext::kInitial, 0.1},
                     {"c", "d", RuleContext::kInitial, 0.1},
                     {"d", "e", RuleContext::kInitial, 0.1}});
  const auto c = n.RuleClosure("ax", 10);
  CHECK(c.count("dx"));
  CHECK_FALSE(c.count("ex"));
  n.set_rule_depth(4);
  CHECK(n.RuleClosure("ax", 10).count("ex"));
}

TEST_CASE("rules file round trip") {
  std::istringstream in(
      R"({"pattern":"ie","replacement":"y","context":"final","cost":0.3}
{"pattern":"vv","replacement":"w","context":"anywhere","cost":0.2})");
  const auto rules = LoadRulesStream(in);
  REQUIRE(rules.size() == 2);
  CHECK(rules[0] == RewriteRule{"ie", "y", RuleContext::kFinal, 0.3});
  std::istringstream bad(R"({"pattern":"","replacement":"y","context":"final","cost":0.3})");
  CHECK_THROWS(LoadRulesStream(bad));
}

TEST_CASE("weighted distance matches the recursive oracle") {
  const EditWeights w;
  std::mt19937_64 rng(7);
  for (int i = 0; i < 3000; ++i) {
    const std::string a = RandomWord(rng, 0, 9, "aijuvyst");
    const std::string b = RandomWord(rng, 0, 9, "aijuvyst");
    const double expect = oracle::Distance(a, b);
    CHECK(WeightedDamerauLevenshtein(DecodeUtf8(a), DecodeUtf8(b), w) ==
          doctest::Approx(expect));
    // A bound may only truncate results that exceed it.
    const double bounded =
        WeightedDamerauLevenshtein(DecodeUtf8(a), DecodeUtf8(b), w, 1.45);
    if (expect <= 1.45) {
      CHECK(bounded == doctest::Approx(expect));
    } else {
      CHECK(bounded > 1.45);
    }
  }
}

TEST_CASE("confusable substitutions are cheap") {
  const EditWeights w;
  CHECK(w.Substitution(U'u', U'v') == 0.3);
  CHECK(w.Substitution(U'y', U'i') == 0.3);
  CHECK(w.Substitution(U'a', U'b') == 1.0);
  CHECK(WeightedDamerauLevenshtein(U"iustice", U"justice", w) == doctest::Approx(0.3));
  CHECK(WeightedDamerauLevenshtein(U"teh", U"the", w) == doctest::Approx(0.8));
}

TEST_CASE("no neighbour gives an empty list") {
  const Normalizer n(Fixture(), DefaultRules());
  CHECK(n.Normalize("xqzw", 5, 2.0).empty());
}

TEST_CASE("attested misspellings resolve at rank one") {
  const Normalizer n(Fixture(), DefaultRules());
  CHECK(Rank1(n, "Malignencye") == "malignancy");
  CHECK(Rank1(n, "condisention") == "condescension");
  CHECK(Rank1(n, "tee") == "tea");
  CHECK(Rank1(n, "hooka") == "hookah");
  CHECK(Rank1(n, "fondlen") == "foundling-house");
  const auto tee = n.Normalize("tee", NormalizerOptions{});
  CHECK(tee[0].method == Method::kExact);
  CHECK(tee[0].score == 1.0);
}

TEST_CASE("edit-only misspellings agree with a brute-force scan") {
  const Normalizer n(Fixture(), DefaultRules());
  for (const std::string form : {"Malignencye", "condisention"}) {
    const auto scan = oracle::EditScan(Fixture(), form, 2.5);
    const auto best = std::max_element(
        scan.begin(), scan.end(),
        [](const auto& a, const auto& b) { return a.second < b.second; });
    REQUIRE(best != scan.end());
    CHECK(Rank1(n, form) == best->first.lemma);
  }
}

TEST_CASE("post-filter holds on random forms") {
  const Lexicon& lex = Fixture();
  const Normalizer n(lex, DefaultRules());
  std::mt19937_64 rng(11);
  std::vector<std::string> variants;
  for (const auto& [v, ids] : lex.variant_index()) variants.push_back(v);
  std::sort(variants.begin(), variants.end());
  std::uniform_int_distribution<size_t> pick(0, variants.size() - 1);
  std::uniform_int_distribution<int> edits(0, 3);
  int violations = 0;
  for (int i = 0; i < 10000; ++i) {
    // Mix near-misses of real variants with unrelated strings.
    std::string form = variants[pick(rng)];
    for (int e = edits(rng); e > 0 && !form.empty(); --e) {
      form[rng() % form.size()] = "aeiouyvjkl"[rng() % 10];
    }
    if (i % 4 == 0) form = RandomWord(rng, 1, 10);
    const int k = 1 + static_cast<int>(rng() % 6);
    const auto cands = n.Normalize(form, k, 2.5);
    if (cands.size() > static_cast<size_t>(k)) ++violations;
    for (size_t r = 0; r < cands.size(); ++r) {
      const auto& c = cands[r];
      const auto hits = lex.LookupVariant(c.entry->lemma);
      if (std::find(hits.begin(), hits.end(), c.entry) == hits.end()) ++violations;
      if (c.score < 0 || c.score > 1) ++violations;
      if (c.method == Method::kExact && c.score != 1.0) ++violations;
      if (r > 0 && cands[r - 1].score < c.score) ++violations;
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("exact match dominates") {
  const Lexicon& lex = Fixture();
  const Normalizer n(lex, DefaultRules());
  for (const LexiconEntry& e : lex.entries()) {
    for (const std::string& v : e.variants) {
      std::string shouted = v;
      shouted[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(shouted[0])));
      const auto c = n.Normalize(shouted, NormalizerOptions{});
      REQUIRE_FALSE(c.empty());
      CHECK(c[0].score == 1.0);
      CHECK(c[0].method == Method::kExact);
      const auto hits = lex.LookupVariant(v);
      CHECK(std::find(hits.begin(), hits.end(), c[0].entry) != hits.end());
    }
    // Standard forms map to themselves.
    CHECK(n.Normalize(e.lemma, NormalizerOptions{})[0].entry->lemma == e.lemma);
  }
}

TEST_CASE("edit stage equals brute force on small lexicons") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 6; ++round) {
    std::vector<LexiconEntry> entries;
    std::set<std::string> lemmas;
    const int size = 20 + static_cast<int>(rng() % 181);
    while (static_cast<int>(entries.size()) < size) {
      std::string lemma = RandomWord(rng, 3, 8, "aeijuvyklrst");
      if (!lemmas.insert(lemma).second) continue;
      std::vector<std::string> vars;
      if (rng() % 3 == 0) vars.push_back(RandomWord(rng, 3, 8, "aeijuvyklrst"));
      entries.push_back(MakeEntry(lemma, PartOfSpeech::kNoun, 1600, vars));
    }
    const Lexicon lex(entries);
    const Normalizer n(lex, {});
    for (int q = 0; q < 60; ++q) {
      const std::string form = RandomWord(rng, 2, 9, "aeijuvyklrst");
      const double max_cost = q % 2 ? 1.45 : 2.45;
      std::map<EntryKey, double> got;
      for (const auto& c : n.EditStage(form, max_cost)) {
        got[{c.entry->lemma, c.entry->pos}] = c.score;
      }
      const auto want = oracle::EditScan(lex, form, max_cost);
      REQUIRE(got.size() == want.size());
      for (const auto& [key, score] : want) {
        REQUIRE(got.count(key));
        CHECK(got[key] == doctest::Approx(score));
      }
    }
  }
}

TEST_CASE("normalize is deterministic") {
  const Normalizer n(Fixture(), DefaultRules());
  for (const std::string form : {"malignant", "packett", "condiscension", "tey"}) {
    const auto a = n.Normalize(form, NormalizerOptions{});
    const auto b = n.Normalize(form, NormalizerOptions{});
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].entry == b[i].entry);
      CHECK(a[i].score == b[i].score);
    }
  }
}

TEST_CASE("invalid arguments") {
  const Normalizer n(Fixture(), DefaultRules());
  CHECK_THROWS_AS(n.Normalize("tee", 0, 2.5), std::invalid_argument);
  CHECK_THROWS_AS(n.Normalize("tee", 5, -1), std::invalid_argument);
}

TEST_CASE("evaluation metrics") {
  const Lexicon lex({MakeEntry("tea", PartOfSpeech::kNoun, 1655, {"tee"}),
                     MakeEntry("hookah", PartOfSpeech::kNoun, 1763),
                     MakeEntry("mooning", PartOfSpeech::kNoun, 1761)});
  const Normalizer n(lex, DefaultRules());
  std::vector<GoldItem> gold = {{"tee", "tea", PartOfSpeech::kNoun, "a"},
                                {"hookah", "hookah", PartOfSpeech::kNoun, "a"},
                                {"mooning", "mooning", PartOfSpeech::kVerb, "b"},
                                {"hookah", "tea", PartOfSpeech::kNoun, "b"}};
  const auto m = EvaluateNormalizer(gold, n);
  CHECK(m.matched_fraction == 1.0);
  CHECK(m.lemma_accuracy == 0.75);
  CHECK(m.pos_accuracy == doctest::Approx(2.0 / 3.0));
  const auto by = EvaluateNormalizerByCategory(gold, n);
  CHECK(by.at("a").lemma_accuracy == 1.0);
  CHECK(by.at("b").lemma_accuracy == 0.5);
  gold.push_back({"xqzw", "tea", PartOfSpeech::kNoun, "b"});
  CHECK(EvaluateNormalizer(gold, n, {5, 1.0}).matched_fraction == 0.8);
  CHECK_THROWS_AS(EvaluateNormalizer({}, n), std::invalid_argument);
}

TEST_CASE("fixture gold set") {
  const Normalizer n(Fixture(), DefaultRules());
  const auto gold = LoadGold(DataPath("gold-normalization.tsv"));
  CHECK(gold.size() == 19);
  const auto m = EvaluateNormalizer(gold, n);
  CHECK(m.matched_fraction == 1.0);
  CHECK(m.lemma_accuracy == 1.0);
  CHECK(m.pos_accuracy == 1.0);
}

}  // namespace
}  // namespace neologia
