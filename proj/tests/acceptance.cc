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

// Acceptance checks for the full system. Prints one PASS/FAIL line per
// criterion and exits non-zero if any check fails.

#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.h"
#include "httplib.h"
#include "json.hpp"
#include "neologia/analytics.h"
#include "neologia/pipeline.h"
#include "neologia/review_service.h"
#include "oracles.h"

namespace neologia {
namespace {

using nlohmann::json;
using testing::DataPath;
namespace fs = std::filesystem;

struct Outcome {
  bool ok = true;
  std::string detail;

  void Expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

struct Run {
  PipelineConfig config;
  std::vector<NeologismRecord> records;
  Corpus corpus;
  SamplingPlan plan;
  double seconds = 0;
};

Run RunConfig(const std::string& name) {
  Run r;
  r.config = LoadConfig(std::string(NEOLOGIA_SOURCE_DIR) + "/data/runs/" + name + ".json");
  r.config.out_dir = testing::TempDir(name);
  std::ostringstream log;
  const auto start = std::chrono::steady_clock::now();
  RunPipeline(r.config, {false, true}, log);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.records = LoadRecords(r.config.records_path());
  r.corpus = LoadCorpusPath(r.config.index_dir());
  r.plan = LoadPlan(r.config.plan_path());
  return r;
}

const Run& R17() {
  static const Run r = RunConfig("run17");
  return r;
}
const Run& R18() {
  static const Run r = RunConfig("run18");
  return r;
}

std::string Counts(const Breakdown& b) {
  std::string out;
  for (const auto& [label, n] : b.Sorted()) {
    out += (out.empty() ? "" : ",") + label + "=" + std::to_string(n);
  }
  return out;
}

Outcome EndToEnd17() {
  Outcome o;
  const Run& r = R17();
  const size_t types = CountTypes(r.records);
  o.Expect(r.records.size() == 53, "records " + std::to_string(r.records.size()));
  o.Expect(types == 42, "types " + std::to_string(types));
  o.Expect(r.seconds < 10, "took " + std::to_string(r.seconds) + " s");
  if (o.ok) {
    o.detail = "53 records, 42 types in " + std::to_string(r.seconds).substr(0, 4) + " s";
  }
  return o;
}

Outcome EndToEnd18() {
  Outcome o;
  const Run& r = R18();
  std::map<EntryKey, int> freq;
  for (const auto& rec : r.records) ++freq[rec.type()];
  o.Expect(r.records.size() == 21, "records " + std::to_string(r.records.size()));
  o.Expect(freq.size() == 21, "types " + std::to_string(freq.size()));
  for (const auto& [k, n] : freq) o.Expect(n == 1, k.lemma + " occurs " + std::to_string(n) + " times");
  if (o.ok) o.detail = "21 records, 21 types, each once";
  return o;
}

Outcome Breakdowns() {
  Outcome o;
  const auto& r17 = R17().records;
  const auto& r18 = R18().records;
  auto expect = [&](const std::vector<NeologismRecord>& rs, Dimension d,
                    const std::map<std::string, int>& want, const std::string& tag) {
    const Breakdown b = ComputeBreakdown(rs, d);
    for (const auto& [label, n] : want) {
      o.Expect(b.count(label) == n, tag + " " + label + "=" + std::to_string(b.count(label)) +
                                        " want " + std::to_string(n));
    }
  };
  expect(r17, Dimension::kPos, {{"noun", 24}, {"adjective", 8}, {"verb", 5}, {"adverb", 5}}, "17 pos");
  expect(r17, Dimension::kEtymologyKind,
         {{"derivation", 18}, {"compounding", 2}, {"conversion", 1}, {"borrowing", 19}, {"unknown", 2}},
         "17 etymology");
  expect(r17, Dimension::kSourceLanguage,
         {{"Latin", 13}, {"French", 2}, {"Italian", 2}, {"German", 2}}, "17 source");
  expect(r17, Dimension::kHtLevel1, {{"society", 16}, {"the world", 15}, {"the mind", 11}}, "17 ht1");
  expect(r18, Dimension::kPos, {{"noun", 14}, {"adjective", 5}, {"verb", 1}, {"adverb", 1}}, "18 pos");
  expect(r18, Dimension::kHtLevel1, {{"the world", 9}, {"society", 6}, {"the mind", 6}}, "18 ht1");
  expect(r17, Dimension::kHtLevel2,
         {{"society » authority", 5}, {"the mind » mental capacity", 4}}, "17 ht2");
  if (o.ok) {
    o.detail = "17th pos {" + Counts(ComputeBreakdown(r17, Dimension::kPos)) + "}, 18th pos {" +
               Counts(ComputeBreakdown(r18, Dimension::kPos)) + "}";
  }
  return o;
}

struct Reference {
  Axis axis;
  const char* value;
  int rate;  // -1 renders as a dash
};

const std::vector<Reference> kReference17 = {
    {Axis::kGender, "Male", 17}, {Axis::kGender, "Female", 11},
    {Axis::kRank, "Royalty", 26}, {Axis::kRank, "Professionals", 24},
    {Axis::kRank, "Nobility", 16}, {Axis::kRank, "Gentry", 13},
    {Axis::kRank, "Clergy", 11}, {Axis::kRank, "Merchants", 0},
    {Axis::kRank, "Other non-gentry", 0}, {Axis::kRelationship, "Close friends", 25},
    {Axis::kRelationship, "Other acquaintances", 18},
    {Axis::kRelationship, "Nuclear family", 6}, {Axis::kRelationship, "Other family", -1}};
const std::vector<Reference> kReference18 = {
    {Axis::kGender, "Male", 5}, {Axis::kGender, "Female", 4},
    {Axis::kRank, "Other non-gentry", 14}, {Axis::kRank, "Clergy", 7},
    {Axis::kRank, "Nobility", 4}, {Axis::kRank, "Professionals", 4},
    {Axis::kRank, "Gentry", 3}, {Axis::kRank, "Royalty", 0},
    {Axis::kRank, "Merchants", 0}, {Axis::kRelationship, "Close friends", 7},
    {Axis::kRelationship, "Nuclear family", 5}, {Axis::kRelationship, "Other family", 3},
    {Axis::kRelationship, "Other acquaintances", 1}};

void CheckRates(const Run& r, const std::vector<Reference>& table, const std::string& tag,
                Outcome* o) {
  const std::set<std::string> letters(r.plan.letters.begin(), r.plan.letters.end());
  const LetterFilter in_plan = [&](const Letter& l) { return letters.count(l.id) > 0; };
  for (const Reference& p : table) {
    const FrequencyReport report = ComputeFrequencyReport(r.records, r.corpus, p.axis, in_plan);
    const FrequencyRow* row = report.Find(p.value);
    if (!row) {
      o->Expect(false, tag + " missing row " + p.value);
      continue;
    }
    const std::string shown = RenderRate(*row);
    if (p.rate < 0) {
      o->Expect(shown == "–", tag + " " + p.value + " renders " + shown);
    } else {
      o->Expect(shown != "–" && std::abs(std::stoi(shown) - p.rate) <= 1,
                tag + " " + p.value + " renders " + shown + " want " + std::to_string(p.rate));
    }
  }
}

Outcome FrequencyTables() {
  Outcome o;
  CheckRates(R17(), kReference17, "17th", &o);
  CheckRates(R18(), kReference18, "18th", &o);
  if (o.ok) o.detail = "26 rendered rates within 1, 17th-c. Other family renders a dash";
  return o;
}

Outcome AntedatingSuite() {
  Outcome o;
  const auto ante = Antedatings(R17().records);
  const std::map<std::string, std::pair<int, int>> want = {
      {"packet-boat", {1641, 1642}}, {"statement", {1642, 1750}}, {"tea", {1643, 1655}}};
  for (const auto& [lemma, years] : want) {
    const auto it = std::find_if(ante.begin(), ante.end(),
                                 [&](const NeologismRecord& r) { return r.lemma == lemma; });
    if (it == ante.end()) {
      o.Expect(false, lemma + " not flagged");
      continue;
    }
    o.Expect(it->corpus_year == years.first && it->attestation_year == years.second &&
                 it->delta_years == years.first - years.second && it->antedating,
             lemma + " delta " + std::to_string(it->delta_years));
  }
  if (o.ok) o.detail = "packet-boat -1, statement -108, tea -12";
  return o;
}

Outcome WindowBoundary() {
  Outcome o;
  std::mt19937_64 rng(1642);
  std::uniform_int_distribution<int> year(1400, 1900);
  const Person writer = testing::MakePerson("w");
  int failures = 0, at_boundary = 0;
  for (int i = 0; i < 10000; ++i) {
    const int letter_year = year(rng);
    const int attested =
        i % 2 ? year(rng) : letter_year - 40 + static_cast<int>(rng() % 5) - 2;
    const Lexicon lex({testing::MakeEntry("x", PartOfSpeech::kNoun, attested)});
    const Letter l = testing::MakeLetter("L", letter_year, "w", testing::Words({"x"}));
    MappingDecision d;
    d.key = {"x", "L"};
    d.status = DecisionStatus::kAccepted;
    d.entry = EntryKey{"x", PartOfSpeech::kNoun};
    const bool included = Classify(d, l, writer, lex).has_value();
    const int delta = letter_year - attested;
    if (included != (delta <= 40)) ++failures;
    if (delta == 40) ++at_boundary;
  }
  o.Expect(failures == 0, std::to_string(failures) + " failures");
  o.Expect(at_boundary > 0, "no boundary cases drawn");
  if (o.ok) o.detail = "10000 cases, " + std::to_string(at_boundary) + " at delta 40, 0 failures";
  return o;
}

Outcome NormalizerProperties() {
  Outcome o;
  const Lexicon lex = LoadLexicon(DataPath("oed-mini.jsonl"));
  const Normalizer n(lex, DefaultRules());
  std::mt19937_64 rng(1643);

  std::vector<std::string> variants;
  for (const auto& [v, ids] : lex.variant_index()) variants.push_back(v);
  std::sort(variants.begin(), variants.end());
  int outside = 0;
  for (int i = 0; i < 10000; ++i) {
    std::string form = variants[rng() % variants.size()];
    for (int e = static_cast<int>(rng() % 4); e > 0; --e) {
      form[rng() % form.size()] = "aeiouyvjkl"[rng() % 10];
    }
    if (i % 4 == 0) form = testing::RandomWord(rng, 1, 10);
    for (const auto& c : n.Normalize(form, 5, 2.5)) {
      const auto hits = lex.LookupVariant(c.entry->lemma);
      if (std::find(hits.begin(), hits.end(), c.entry) == hits.end()) ++outside;
    }
  }
  o.Expect(outside == 0, std::to_string(outside) + " out-of-lexicon suggestions");

  int dominance = 0;
  for (const std::string& v : variants) {
    const auto c = n.Normalize(v, 5, 2.5);
    const auto hits = lex.LookupVariant(v);
    if (c.empty() || c[0].score != 1.0 || c[0].method != Method::kExact ||
        std::find(hits.begin(), hits.end(), c[0].entry) == hits.end()) {
      ++dominance;
    }
  }
  o.Expect(dominance == 0, std::to_string(dominance) + " exact-match violations");

  std::vector<LexiconEntry> entries;
  std::set<std::string> lemmas;
  while (entries.size() < 200) {
    std::string lemma = testing::RandomWord(rng, 3, 8, "aeijuvyklrst");
    if (lemmas.insert(lemma).second) {
      entries.push_back(testing::MakeEntry(lemma, PartOfSpeech::kNoun, 1600));
    }
  }
  const Lexicon small(entries);
  const Normalizer sn(small, {});
  int mismatches = 0;
  for (int q = 0; q < 200; ++q) {
    const std::string form = testing::RandomWord(rng, 2, 9, "aeijuvyklrst");
    std::map<EntryKey, double> got;
    for (const auto& c : sn.EditStage(form, 2.45)) got[{c.entry->lemma, c.entry->pos}] = c.score;
    const auto want = oracle::EditScan(small, form, 2.45);
    if (got.size() != want.size()) {
      ++mismatches;
      continue;
    }
    for (const auto& [k, s] : want) {
      if (!got.count(k) || std::abs(got[k] - s) > 1e-9) ++mismatches;
    }
  }
  o.Expect(mismatches == 0, std::to_string(mismatches) + " edit-stage mismatches");

  const std::vector<std::pair<std::string, std::string>> attested = {
      {"Malignencye", "malignancy"}, {"condisention", "condescension"}, {"tee", "tea"},
      {"hooka", "hookah"}, {"fondlen", "foundling-house"}};
  for (const auto& [form, lemma] : attested) {
    const auto c = n.Normalize(form, 5, 2.5);
    o.Expect(!c.empty() && c[0].entry->lemma == lemma,
             form + " -> " + (c.empty() ? std::string("nothing") : c[0].entry->lemma));
  }
  if (o.ok) o.detail = "post-filter, dominance, brute-force scan, 5/5 misspellings at rank 1";
  return o;
}

Corpus RandomCorpus(std::mt19937_64& rng, int letters) {
  std::vector<Person> persons = {testing::MakePerson("rcpt")};
  for (int i = 0; i < 12; ++i) {
    persons.push_back(testing::MakePerson("w" + std::to_string(i), kAllGenders[i % 2],
                                          kAllRanks[i % 7]));
  }
  std::vector<Letter> out;
  for (int i = 0; i < letters; ++i) {
    std::vector<Token> toks;
    for (int k = 1 + static_cast<int>(rng() % 40); k > 0; --k) {
      toks.push_back({testing::RandomWord(rng, 1, 3, "abcdeE"), k,
                      static_cast<uint8_t>(rng() % 5 == 0 ? 1u << (rng() % 4) : 0u)});
    }
    out.push_back(testing::MakeLetter("L" + std::to_string(i), 1640 + static_cast<int>(rng() % 6),
                                      "w" + std::to_string(rng() % 12), std::move(toks),
                                      kAllRelationships[rng() % 4]));
  }
  return Corpus(persons, out, {1640, 1645});
}

Outcome SamplerProperties() {
  Outcome o;
  std::mt19937_64 rng(1644);
  int oracle_failures = 0, partition_failures = 0;
  for (int round = 0; round < 10; ++round) {
    const Corpus c = RandomCorpus(rng, 1 + static_cast<int>(rng() % 500));
    if (FirstAppearances(c) != oracle::FirstAppearances(c)) ++oracle_failures;
    std::map<std::string, int> seen;
    for (const Bucket& b : BuildBuckets(c, c.period())) {
      for (const Letter* l : b.letters) ++seen[l->id];
    }
    for (const Letter& l : c.letters()) {
      if (seen[l.id] != 1) ++partition_failures;
    }
    if (seen.size() != c.letters().size()) ++partition_failures;
  }
  o.Expect(oracle_failures == 0, std::to_string(oracle_failures) + " oracle mismatches");
  o.Expect(partition_failures == 0, std::to_string(partition_failures) + " partition failures");

  std::string ratios;
  for (const auto& [file, target] : std::vector<std::pair<std::string, int64_t>>{
           {"ceec17-pool.jsonl", 36265}, {"ceec18-pool.jsonl", 47864}}) {
    const Corpus c = ParseCorpus(DataPath(file));
    const auto buckets = BuildBuckets(c, c.period());
    const auto plan = DrawSample(buckets, target, 42);
    o.Expect(plan == DrawSample(buckets, target, 42), file + " not deterministic");
    const auto first = FirstAppearances(c);
    const double ratio = static_cast<double>(CandidatePool(plan, first).size()) /
                         static_cast<double>(FullCandidatePool(c, first).size());
    o.Expect(ratio >= 0.07 && ratio <= 0.11, file + " ratio " + std::to_string(ratio));
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f%%", ratio * 100);
    ratios += (ratios.empty() ? "" : ", ") + std::string(buf);
  }
  if (o.ok) o.detail = "oracle and partition on 10 random corpora; pool ratios " + ratios;
  return o;
}

// A `neologia serve` child process.
class Server {
 public:
  Server(const std::vector<std::string>& args) {
    int fds[2];
    if (pipe(fds) != 0) throw std::runtime_error("pipe failed");
    pid_ = fork();
    if (pid_ == 0) {
      dup2(fds[1], STDOUT_FILENO);
      close(fds[0]);
      close(fds[1]);
      std::vector<char*> argv;
      std::string bin = NEOLOGIA_BIN;
      argv.push_back(bin.data());
      std::vector<std::string> copy = args;
      for (auto& a : copy) argv.push_back(a.data());
      argv.push_back(nullptr);
      execv(bin.c_str(), argv.data());
      _exit(127);
    }
    close(fds[1]);
    FILE* out = fdopen(fds[0], "r");
    char line[512];
    if (!fgets(line, sizeof line, out)) {
      fclose(out);
      throw std::runtime_error("server exited before listening");
    }
    fclose(out);
    banner_ = line;
    port_ = std::stoi(banner_.substr(banner_.rfind(':') + 1));
  }
  ~Server() { Kill(); }

  void Kill() {
    if (pid_ > 0) {
      kill(pid_, SIGKILL);
      waitpid(pid_, nullptr, 0);
      pid_ = -1;
    }
  }
  int port() const { return port_; }
  const std::string& banner() const { return banner_; }

 private:
  pid_t pid_ = -1;
  int port_ = 0;
  std::string banner_;
};

Outcome Durability() {
  Outcome o;
  const Run& r = R17();
  // The last logged decision for each of the first 63 distinct keys.
  std::vector<std::string> order;
  std::map<std::string, json> last;
  for (const MappingDecision& d : LoadDecisionLog(DataPath("decisions17.jsonl"))) {
    if (!r.plan.Contains(d.key.letter_id)) continue;
    json j = json::parse(DecisionToJson(d));
    j.erase("timestamp");
    const std::string k = j["candidate_key"].dump();
    if (!last.count(k)) order.push_back(k);
    last[k] = j;
  }
  if (order.size() < 63) {
    o.Expect(false, "only " + std::to_string(order.size()) + " distinct keys");
    return o;
  }
  std::string counts;
  for (int n : {0, 1, 63}) {
    const std::string log = testing::TempDir("durable") + "/decisions.jsonl";
    const std::vector<std::string> args = {
        "serve", "--plan", r.config.plan_path(), "--log", log, "--lexicon", r.config.lexicon,
        "--corpus", r.config.index_dir(), "--bind", "127.0.0.1:0"};
    {
      Server server(args);
      httplib::Client cli("127.0.0.1", server.port());
      for (int i = 0; i < n; ++i) {
        auto res = cli.Post("/api/decisions", last[order[i]].dump(), "application/json");
        o.Expect(res && res->status == 200, "post " + std::to_string(i) + " not acknowledged");
      }
      server.Kill();
    }
    Server again(args);
    httplib::Client cli("127.0.0.1", again.port());
    auto res = cli.Get("/api/progress");
    if (!res || res->status != 200) {
      o.Expect(false, "progress unavailable after restart");
      continue;
    }
    const json totals = json::parse(res->body)["totals"];
    const int decided = totals["total"].get<int>() - totals["pending"].get<int>();
    o.Expect(decided == n, "N=" + std::to_string(n) + " replayed " + std::to_string(decided));
    o.Expect(again.banner().rfind("replayed " + std::to_string(n) + " decisions", 0) == 0,
             "banner '" + again.banner() + "'");
    counts += (counts.empty() ? "" : ", ") + std::to_string(n) + "->" + std::to_string(decided);
  }
  if (o.ok) o.detail = "kill -9 and restart replayed " + counts;
  return o;
}

}  // namespace
}  // namespace neologia

int main() {
  using neologia::Outcome;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> checks = {
      {"end-to-end 17th century", neologia::EndToEnd17},
      {"end-to-end 18th century", neologia::EndToEnd18},
      {"breakdowns", neologia::Breakdowns},
      {"frequency tables", neologia::FrequencyTables},
      {"antedatings", neologia::AntedatingSuite},
      {"40-year window boundary", neologia::WindowBoundary},
      {"normalizer properties", neologia::NormalizerProperties},
      {"sampler properties", neologia::SamplerProperties},
      {"decision log durability", neologia::Durability},
  };
  int failed = 0;
  for (size_t i = 0; i < checks.size(); ++i) {
    Outcome o;
    try {
      o = checks[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << i + 1 << ". " << checks[i].first
              << ": " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
