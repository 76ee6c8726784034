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

#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.h"
#include "neologia/analytics.h"
#include "neologia/sampler.h"
#include "json.hpp"
#include "oracles.h"

namespace neologia {
namespace {

using testing::DataPath;
using testing::MakeEntry;
using testing::MakeLetter;
using testing::MakePerson;
using testing::Words;

struct Reference {
  const char* value;
  long words;  // sample running words
  int rate;    // -1 when undefined
};

// Reference sample sizes and normalized frequencies per 10,000 words.
const std::vector<std::pair<Axis, std::vector<Reference>>> kRates17 = {
    {Axis::kGender, {{"Male", 23459, 17}, {"Female", 12806, 11}}},
    {Axis::kRank,
     {{"Royalty", 3899, 26}, {"Professionals", 3675, 24}, {"Nobility", 5038, 16},
      {"Gentry", 11509, 13}, {"Clergy", 9659, 11}, {"Merchants", 860, 0},
      {"Other non-gentry", 1625, 0}}},
    {Axis::kRelationship,
     {{"Close friends", 7467, 25}, {"Other acquaintances", 13753, 18},
      {"Nuclear family", 15045, 6}, {"Other family", 0, -1}}},
};
const std::vector<std::pair<Axis, std::vector<Reference>>> kRates18 = {
    {Axis::kGender, {{"Male", 29225, 5}, {"Female", 18639, 4}}},
    {Axis::kRank,
     {{"Other non-gentry", 3556, 14}, {"Clergy", 8976, 7}, {"Nobility", 6998, 4},
      {"Professionals", 10847, 4}, {"Gentry", 10924, 3}, {"Royalty", 4067, 0},
      {"Merchants", 2496, 0}}},
    {Axis::kRelationship,
     {{"Close friends", 14771, 7}, {"Nuclear family", 12754, 5},
      {"Other family", 6534, 3}, {"Other acquaintances", 13805, 1}}},
};

struct Fixture {
  Corpus corpus;
  std::vector<NeologismRecord> records;
};

Fixture Load(int century) {
  const std::string c = std::to_string(century);
  Fixture f{ParseCorpus(DataPath("ceec" + c + ".jsonl")), {}};
  const Lexicon lex = LoadLexicon(DataPath("oed-mini.jsonl"));
  const auto pool = FullCandidatePool(f.corpus, FirstAppearances(f.corpus));
  f.records = ClassifyAll(pool, LoadDecisionLog(DataPath("decisions" + c + ".jsonl")),
                          f.corpus, lex);
  return f;
}

const Fixture& F17() {
  static const Fixture f = Load(17);
  return f;
}
const Fixture& F18() {
  static const Fixture f = Load(18);
  return f;
}

TEST_CASE("reference rates admit a consistent token placement") {
  for (const auto* table : {&kRates17, &kRates18}) {
    const int total = table == &kRates17 ? 53 : 21;
    for (const auto& [axis, rows] : *table) {
      std::vector<std::vector<int>> options;
      for (const Reference& p : rows) {
        if (p.rate < 0) continue;
        options.push_back(oracle::TokensForRate(p.words, p.rate, total));
        CHECK_FALSE(options.back().empty());
      }
      // Male and female rates in the 17th century reconstruct to 54 tokens,
      // so allow one token of slack on the total.
      CHECK((oracle::SumReachable(options, total) ||
             oracle::SumReachable(options, total + 1)));
    }
  }
}

void CheckAgainstReference(const Fixture& f,
                           const std::vector<std::pair<Axis, std::vector<Reference>>>& table) {
  const int total = static_cast<int>(f.records.size());
  for (const auto& [axis, rows] : table) {
    const FrequencyReport report = ComputeFrequencyReport(f.records, f.corpus, axis);
    REQUIRE(report.rows.size() == rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
      const Reference& p = rows[i];
      CAPTURE(p.value);
      const FrequencyRow& row = report.rows[i];
      CHECK(row.value == p.value);
      CHECK(row.words == p.words);
      if (p.rate < 0) {
        CHECK(RenderRate(row) == "–");
        continue;
      }
      const int shown = std::stoi(RenderRate(row));
      CHECK(std::abs(shown - p.rate) <= 1);
      // Exact placements are found by the oracle; the fixture should use one.
      const auto ok = oracle::TokensForRate(p.words, p.rate, total);
      CHECK(std::find(ok.begin(), ok.end(), row.tokens) != ok.end());
    }
  }
}

TEST_CASE("17th century reports reproduce the reference rates") {
  CheckAgainstReference(F17(), kRates17);
}

TEST_CASE("18th century reports reproduce the reference rates") {
  CheckAgainstReference(F18(), kRates18);
}

TEST_CASE("rate definition") {
  FrequencyRow r;
  r.tokens = 17;
  r.words = 10000;
  r.per_10k = 17.0;
  CHECK(RenderRate(r) == "17");
  r.per_10k = 0.0;
  CHECK(RenderRate(r) == "0");
  r.per_10k.reset();
  CHECK(RenderRate(r) == "–");

  const Corpus c({MakePerson("m"), MakePerson("f", Gender::kFemale), MakePerson("rcpt")},
                 {MakeLetter("A", 1650, "m", Words(std::vector<std::string>(10000, "w"))),
                  MakeLetter("B", 1650, "f", Words(std::vector<std::string>(500, "w")))},
                 {1650, 1650});
  const Lexicon lex({MakeEntry("w", PartOfSpeech::kNoun, 1640)});
  std::vector<NeologismRecord> records(17);
  for (auto& rec : records) {
    rec.letter_id = "A";
    rec.writer = c.person("m");
  }
  const auto report = ComputeFrequencyReport(records, c, Axis::kGender);
  CHECK(report.Find("Male")->per_10k == 17.0);
  CHECK(report.Find("Female")->per_10k == 0.0);
  CHECK(report.rows[0].value == "Male");
}

TEST_CASE("unknown attributes are excluded from both counts") {
  const Corpus c({MakePerson("m"), MakePerson("u", Gender::kUnknown, Rank::kUnknown),
                  MakePerson("rcpt")},
                 {MakeLetter("A", 1650, "m", Words({"a", "b"})),
                  MakeLetter("B", 1650, "u", Words({"c", "d", "e"}))},
                 {1650, 1650});
  std::vector<NeologismRecord> records(2);
  records[0].letter_id = "A";
  records[0].writer = c.person("m");
  records[1].letter_id = "B";
  records[1].writer = c.person("u");
  const auto gender = ComputeFrequencyReport(records, c, Axis::kGender);
  CHECK(gender.rows.size() == 2);
  int64_t tokens = 0, words = 0;
  for (const auto& r : gender.rows) {
    tokens += r.tokens;
    words += r.words;
  }
  CHECK(tokens == 1);
  CHECK(words == 2);
  const auto rank = ComputeFrequencyReport(records, c, Axis::kRank);
  CHECK(rank.rows.size() == 7);
  CHECK(rank.Find("Gentry")->tokens == 1);
}

TEST_CASE("rows sort by rate with undefined rows last") {
  const auto& f = F17();
  for (Axis axis : {Axis::kGender, Axis::kRank, Axis::kRelationship}) {
    const auto report = ComputeFrequencyReport(f.records, f.corpus, axis);
    bool undefined_seen = false;
    for (size_t i = 0; i < report.rows.size(); ++i) {
      if (!report.rows[i].per_10k) {
        undefined_seen = true;
        continue;
      }
      CHECK_FALSE(undefined_seen);
      if (i > 0) CHECK(*report.rows[i - 1].per_10k >= *report.rows[i].per_10k);
    }
  }
}

TEST_CASE("scope filter restricts letters and tokens") {
  const auto& f = F17();
  SamplingPlan plan;
  plan.letters = {f.corpus.letters()[0].id};
  const LetterFilter scope = [&](const Letter& l) { return plan.Contains(l.id); };
  const auto report = ComputeFrequencyReport(f.records, f.corpus, Axis::kGender, scope);
  int64_t words = 0;
  for (const auto& r : report.rows) words += r.words;
  CHECK(words == static_cast<int64_t>(f.corpus.letters()[0].tokens.size()));
}

TEST_CASE("age groups") {
  const auto& f = F17();
  const auto r40 = ComputeFrequencyReport(f.records, f.corpus, Axis::kAgeGroup, {}, 40);
  REQUIRE(r40.rows.size() == 2);
  CHECK(r40.rows[0].value == "40–71");
  CHECK(RenderRate(r40.rows[0]) == "21");
  CHECK(r40.rows[1].value == "17–39");
  CHECK(RenderRate(r40.rows[1]) == "10");
  CHECK_THROWS_AS(ComputeFrequencyReport(f.records, f.corpus, Axis::kAgeGroup),
                  std::invalid_argument);
  // Writers without a birth year drop out of both counts.
  int64_t words = 0;
  for (const Letter& l : f.corpus.letters()) {
    if (WriterAge(f.corpus, l)) words += static_cast<int64_t>(l.tokens.size());
  }
  CHECK(r40.rows[0].words + r40.rows[1].words == words);
}

TEST_CASE("report rendering") {
  const auto& f = F17();
  const auto report = ComputeFrequencyReport(f.records, f.corpus, Axis::kGender);
  CHECK(FrequencyReportToTsv(report) ==
        "category\tvalue\tper_10k_words\ttokens\twords\n"
        "Gender\tMale\t17\t39\t23459\n"
        "\tFemale\t11\t14\t12806\n");
  const auto j = nlohmann::json::parse(FrequencyReportToJson(report));
  CHECK(j["axis"] == "gender");
  CHECK(j["rows"][0]["per_10k"].get<double>() == doctest::Approx(16.6));
  const auto rel = nlohmann::json::parse(FrequencyReportToJson(
      ComputeFrequencyReport(f.records, f.corpus, Axis::kRelationship)));
  CHECK(rel["rows"][3]["per_10k"].is_null());
  CHECK(ParseAxis("age") == Axis::kAgeGroup);
  CHECK_FALSE(ParseAxis("height").has_value());
}

TEST_CASE("17th century breakdowns") {
  const auto& r = F17().records;
  const auto pos = ComputeBreakdown(r, Dimension::kPos);
  CHECK(pos.types == 42);
  CHECK(pos.count("noun") == 24);
  CHECK(pos.count("adjective") == 8);
  CHECK(pos.count("verb") == 5);
  CHECK(pos.count("adverb") == 5);

  const auto ety = ComputeBreakdown(r, Dimension::kEtymologyKind);
  CHECK(ety.count("derivation") == 18);
  CHECK(ety.count("compounding") == 2);
  CHECK(ety.count("conversion") == 1);
  CHECK(ety.count("borrowing") == 19);
  CHECK(ety.count("unknown") == 2);

  const auto lang = ComputeBreakdown(r, Dimension::kSourceLanguage);
  CHECK(lang.count("Latin") == 13);
  CHECK(lang.count("French") == 2);
  CHECK(lang.count("Italian") == 2);
  CHECK(lang.count("German") == 2);

  const auto ht1 = ComputeBreakdown(r, Dimension::kHtLevel1);
  CHECK(ht1.count("society") == 16);
  CHECK(ht1.count("the world") == 15);
  CHECK(ht1.count("the mind") == 11);

  const auto ht2 = ComputeBreakdown(r, Dimension::kHtLevel2);
  CHECK(ht2.Sorted().front() == std::pair<std::string, int>{"society » authority", 5});
  CHECK(ht2.count("the mind » mental capacity") == 4);
}

TEST_CASE("18th century breakdowns") {
  const auto& r = F18().records;
  const auto pos = ComputeBreakdown(r, Dimension::kPos);
  CHECK(pos.types == 21);
  CHECK(pos.Sorted() == std::vector<std::pair<std::string, int>>{
                            {"noun", 14}, {"adjective", 5}, {"adverb", 1}, {"verb", 1}});
  const auto ht1 = ComputeBreakdown(r, Dimension::kHtLevel1);
  CHECK(ht1.count("the world") == 9);
  CHECK(ht1.count("society") == 6);
  CHECK(ht1.count("the mind") == 6);
}

TEST_CASE("breakdowns count types, not tokens") {
  std::vector<NeologismRecord> r(3);
  r[0].lemma = r[1].lemma = "dishearten";
  r[0].pos = r[1].pos = PartOfSpeech::kVerb;
  r[2].lemma = "visit";
  r[2].pos = PartOfSpeech::kNoun;
  for (auto& x : r) x.ht_path = {"the mind"};
  const auto b = ComputeBreakdown(r, Dimension::kPos);
  CHECK(b.types == 2);
  CHECK(b.count("verb") == 1);
  CHECK(ComputeBreakdown({}, Dimension::kPos).counts.empty());
  CHECK(BreakdownToTsv(b) == "pos\ttypes\nnoun\t1\nverb\t1\n");
}

bool HasLemma(const std::vector<NeologismRecord>& rs, const std::string& lemma) {
  return std::any_of(rs.begin(), rs.end(),
                     [&](const NeologismRecord& r) { return r.lemma == lemma; });
}

TEST_CASE("antedatings") {
  const auto a17 = Antedatings(F17().records);
  for (size_t i = 1; i < a17.size(); ++i) CHECK(a17[i - 1].delta_years <= a17[i].delta_years);
  for (const auto& r : a17) CHECK(r.antedating);
  CHECK(CountTypes(a17) == 15);
  for (const char* lemma : {"packet-boat", "statement", "tea"}) CHECK(HasLemma(a17, lemma));
  const auto a18 = Antedatings(F18().records);
  for (const char* lemma : {"hookah", "inspectress", "interference", "merry-Andrew-like",
                            "mooning", "puddingless"}) {
    CHECK(HasLemma(a18, lemma));
  }
  CHECK(Antedatings({}).empty());
}

TEST_CASE("full report is byte-identical on rerun") {
  const auto& f = F18();
  CHECK(FullReportJson(f.records, f.corpus, {}, {40, 50}) ==
        FullReportJson(f.records, f.corpus, {}, {40, 50}));
}

}  // namespace
}  // namespace neologia
