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

#include "neologia/sampler.h"

#include <algorithm>
#include <climits>
#include <fstream>
#include <random>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "neologia/text.h"

namespace neologia {

using json = nlohmann::json;

namespace {

uint64_t Fnv1a(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Fisher-Yates with an explicit generator so results do not depend on the
// standard library's distribution implementation.
template <typename T>
void Shuffle(std::vector<T>* v, std::mt19937_64* rng) {
  for (size_t i = v->size(); i > 1; --i) {
    const size_t j = static_cast<size_t>((*rng)() % i);
    std::swap((*v)[i - 1], (*v)[j]);
  }
}

struct BucketState {
  const Bucket* bucket;
  std::vector<const Letter*> order;
  size_t next = 0;
  int64_t achieved = 0;
  bool active = true;
  std::vector<std::string> chosen;
};

}  // namespace

std::string ToString(const BucketKey& key) {
  std::string s(ToString(key.gender));
  s += '/';
  s += ToString(key.rank);
  s += '/';
  s += ToString(key.relationship);
  return s;
}

std::optional<BucketKey> ParseBucketKey(std::string_view s) {
  const size_t a = s.find('/');
  if (a == std::string_view::npos) return std::nullopt;
  const size_t b = s.find('/', a + 1);
  if (b == std::string_view::npos) return std::nullopt;
  auto g = ParseGender(s.substr(0, a));
  auto r = ParseRank(s.substr(a + 1, b - a - 1));
  auto rel = ParseRelationship(s.substr(b + 1));
  if (!g || !r || !rel) return std::nullopt;
  return BucketKey{*g, *r, *rel};
}

FirstAppearanceMap FirstAppearances(const Corpus& corpus) {
  FirstAppearanceMap out;
  std::unordered_set<std::string> seen;
  for (const Letter& l : corpus.letters()) {
    for (const Token& t : l.tokens) {
      if (t.flags != 0) continue;
      std::string form = FoldCase(t.surface);
      if (form.empty() || !seen.insert(form).second) continue;
      out[l.id].push_back(std::move(form));
    }
  }
  return out;
}

std::vector<Bucket> BuildBuckets(const Corpus& corpus, const Period& period) {
  std::map<BucketKey, Bucket> buckets;
  for (const Letter& l : corpus.letters()) {
    if (!period.Contains(l.year)) continue;
    const Person& writer = corpus.sender(l);
    BucketKey key{writer.gender, writer.rank, l.relationship};
    Bucket& b = buckets[key];
    b.key = key;
    b.letters.push_back(&l);
    b.word_count += static_cast<int64_t>(l.tokens.size());
  }
  if (buckets.empty()) {
    throw SamplingError("no letters in period " + ToString(period));
  }
  std::vector<Bucket> out;
  for (auto& [k, b] : buckets) out.push_back(std::move(b));
  return out;
}

bool SamplingPlan::Contains(std::string_view letter_id) const {
  return std::find(letters.begin(), letters.end(), letter_id) != letters.end();
}

int64_t SamplingPlan::words_selected() const {
  int64_t n = 0;
  for (const BucketReport& b : buckets) n += b.words_selected;
  return n;
}

SamplingPlan DrawSample(const std::vector<Bucket>& buckets,
                        int64_t target_total_words, uint64_t seed) {
  if (buckets.empty()) throw SamplingError("no buckets to sample from");
  if (target_total_words <= 0) {
    throw SamplingError("target_total_words must be positive");
  }
  SamplingPlan plan;
  plan.seed = seed;
  plan.target_total_words = target_total_words;
  plan.target_words_per_bucket =
      target_total_words / static_cast<int64_t>(buckets.size());
  const int64_t target = plan.target_words_per_bucket;

  std::vector<BucketState> states;
  states.reserve(buckets.size());
  plan.period = {INT_MAX, INT_MIN};
  for (const Bucket& b : buckets) {
    BucketState s;
    s.bucket = &b;
    s.order = b.letters;
    std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                      static_cast<uint32_t>(Fnv1a(ToString(b.key)))};
    std::mt19937_64 rng(seq);
    Shuffle(&s.order, &rng);
    states.push_back(std::move(s));
    for (const Letter* l : b.letters) {
      plan.period.start_year = std::min(plan.period.start_year, l->year);
      plan.period.end_year = std::max(plan.period.end_year, l->year);
    }
  }

  auto len = [](const Letter* l) { return static_cast<int64_t>(l->tokens.size()); };
  while (true) {
    BucketState* pick = nullptr;
    for (BucketState& s : states) {
      if (!s.active) continue;
      // Buckets are sorted by key, so the first maximum wins ties.
      if (!pick || target - s.achieved > target - pick->achieved) pick = &s;
    }
    if (!pick) break;
    BucketState& s = *pick;
    if (s.next >= s.order.size() || s.achieved >= target) {
      s.active = false;
      continue;
    }
    int64_t smallest = len(s.order[s.next]);
    for (size_t i = s.next + 1; i < s.order.size(); ++i) {
      smallest = std::min(smallest, len(s.order[i]));
    }
    const Letter* l = s.order[s.next];
    if (s.achieved + len(l) - target > smallest) {
      s.active = false;
      continue;
    }
    s.achieved += len(l);
    s.chosen.push_back(l->id);
    ++s.next;
  }

  std::vector<const Letter*> selected;
  for (BucketState& s : states) {
    BucketReport r;
    r.key = s.bucket->key;
    r.letters_available = static_cast<int>(s.bucket->letters.size());
    r.words_available = s.bucket->word_count;
    r.words_target = target;
    r.words_selected = s.achieved;
    r.letters = std::move(s.chosen);
    for (size_t i = 0; i < s.next; ++i) selected.push_back(s.order[i]);
    plan.buckets.push_back(std::move(r));
  }
  std::sort(selected.begin(), selected.end(),
            [](const Letter* a, const Letter* b) {
              return std::tie(a->year, a->id) < std::tie(b->year, b->id);
            });
  for (const Letter* l : selected) plan.letters.push_back(l->id);
  return plan;
}

void AttachCandidateForms(SamplingPlan* plan, const FirstAppearanceMap& first) {
  plan->candidate_forms.clear();
  for (const std::string& id : plan->letters) {
    auto it = first.find(id);
    if (it != first.end()) plan->candidate_forms[id] = it->second;
  }
}

std::vector<CandidateKey> CandidatePool(const SamplingPlan& plan,
                                        const FirstAppearanceMap& first) {
  std::vector<CandidateKey> pool;
  for (const std::string& id : plan.letters) {
    auto it = first.find(id);
    if (it == first.end()) continue;
    for (const std::string& form : it->second) pool.push_back({form, id});
  }
  return pool;
}

std::vector<CandidateKey> FullCandidatePool(const Corpus& corpus,
                                            const FirstAppearanceMap& first) {
  std::vector<CandidateKey> pool;
  for (const Letter& l : corpus.letters()) {
    auto it = first.find(l.id);
    if (it == first.end()) continue;
    for (const std::string& form : it->second) pool.push_back({form, l.id});
  }
  return pool;
}

namespace {

json ToJson(const SamplingPlan& plan) {
  json buckets = json::array();
  for (const BucketReport& b : plan.buckets) {
    buckets.push_back({{"key", ToString(b.key)},
                       {"letters_available", b.letters_available},
                       {"words_available", b.words_available},
                       {"words_target", b.words_target},
                       {"words_selected", b.words_selected},
                       {"letters", b.letters}});
  }
  return {{"period", ToString(plan.period)},
          {"seed", plan.seed},
          {"target_total_words", plan.target_total_words},
          {"target_words_per_bucket", plan.target_words_per_bucket},
          {"words_selected", plan.words_selected()},
          {"buckets", std::move(buckets)},
          {"letters", plan.letters},
          {"candidate_forms", plan.candidate_forms}};
}

}  // namespace

std::string PlanToJson(const SamplingPlan& plan, int indent) {
  return ToJson(plan).dump(indent);
}

SamplingPlan PlanFromJson(std::string_view text) {
  SamplingPlan plan;
  try {
    const json j = json::parse(text);
    plan.period = ParsePeriod(j.at("period").get<std::string>());
    plan.seed = j.at("seed").get<uint64_t>();
    plan.target_total_words = j.at("target_total_words").get<int64_t>();
    plan.target_words_per_bucket = j.at("target_words_per_bucket").get<int64_t>();
    for (const json& b : j.at("buckets")) {
      BucketReport r;
      const std::string key = b.at("key").get<std::string>();
      auto k = ParseBucketKey(key);
      if (!k) throw SamplingError("bad bucket key '" + key + "'");
      r.key = *k;
      r.letters_available = b.at("letters_available").get<int>();
      r.words_available = b.at("words_available").get<int64_t>();
      r.words_target = b.at("words_target").get<int64_t>();
      r.words_selected = b.at("words_selected").get<int64_t>();
      r.letters = b.at("letters").get<std::vector<std::string>>();
      plan.buckets.push_back(std::move(r));
    }
    plan.letters = j.at("letters").get<std::vector<std::string>>();
    plan.candidate_forms =
        j.at("candidate_forms")
            .get<std::map<std::string, std::vector<std::string>>>();
  } catch (const json::exception& e) {
    throw SamplingError(std::string("malformed plan: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw SamplingError(std::string("malformed plan: ") + e.what());
  }
  return plan;
}

std::string PlanHash(const SamplingPlan& plan) {
  return Sha256Hex(PlanToJson(plan));
}

SamplingPlan LoadPlan(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SamplingError("cannot open plan file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return PlanFromJson(ss.str());
}

void SavePlan(const SamplingPlan& plan, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw SamplingError("cannot write plan file '" + path + "'");
  out << PlanToJson(plan, 2) << '\n';
  if (!out) throw SamplingError("error writing plan file '" + path + "'");
}

}  // namespace neologia
