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

#include "neologia/review_service.h"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>

#include "httplib.h"
#include "json.hpp"
#include "neologia/text.h"

namespace neologia {

using json = nlohmann::json;

namespace {

constexpr int kMaxPageSize = 1000;

ApiResponse Error(int status, const std::string& message) {
  return {status, json{{"error", message}}.dump()};
}

std::string NowIso8601() {
  const std::time_t t =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json KeyJson(const CandidateKey& k) {
  return {{"form", k.form}, {"letter_id", k.letter_id}};
}

}  // namespace

ReviewService::ReviewService(SamplingPlan plan, const Corpus& corpus,
                             const Lexicon& lexicon, const Normalizer& normalizer,
                             const std::string& log_path, ServiceOptions options)
    : plan_(std::move(plan)),
      corpus_(&corpus),
      lexicon_(&lexicon),
      normalizer_(&normalizer),
      options_(options),
      log_(log_path) {
  plan_hash_ = PlanHash(plan_);
  pool_ = CandidatePool(plan_, plan_.candidate_forms);
  for (const std::string& id : plan_.letters) {
    const Letter* l = corpus.FindLetter(id);
    if (!l) throw SamplingError("plan letter '" + id + "' is not in the corpus");
    const Person& w = corpus.sender(*l);
    bucket_of_[id] = ToString(BucketKey{w.gender, w.rank, l->relationship});
  }

  const std::vector<MappingDecision> log = LoadDecisionLog(log_path);
  for (size_t i = 0; i < log.size(); ++i) {
    if (auto err = CheckDecision(log[i], lexicon)) {
      throw DecisionError("logged decision " + std::to_string(i + 1) + ": " + *err);
    }
  }
  AppliedDecisions applied = ApplyDecisions(pool_, log);
  effective_ = std::move(applied.effective);
  skipped_ = applied.skipped.size();
}

size_t ReviewService::decided() const {
  std::lock_guard<std::mutex> lock(mu_);
  return static_cast<size_t>(std::count_if(
      effective_.begin(), effective_.end(), [](const auto& kv) {
        return kv.second.status != DecisionStatus::kPending;
      }));
}

std::string ReviewService::BucketOf(const std::string& letter_id) const {
  auto it = bucket_of_.find(letter_id);
  return it == bucket_of_.end() ? std::string() : it->second;
}

std::string ReviewService::Context(const CandidateKey& key) const {
  const Letter* l = corpus_->FindLetter(key.letter_id);
  if (!l) return {};
  std::u32string text;
  int at = -1, len = 0;
  for (const Token& t : l->tokens) {
    if (static_cast<int>(text.size()) < t.offset) text.resize(t.offset, U' ');
    else if (!text.empty()) text.push_back(U' ');
    const std::u32string s = DecodeUtf8(t.surface);
    if (at < 0 && t.flags == 0 && FoldCase(t.surface) == key.form) {
      at = static_cast<int>(text.size());
      len = static_cast<int>(s.size());
    }
    text += s;
  }
  if (at < 0) return {};
  const int c = options_.context_chars;
  const int begin = std::max(0, at - c);
  const int end = std::min(static_cast<int>(text.size()), at + len + c);
  return EncodeUtf8(std::u32string_view(text).substr(begin, end - begin));
}

std::string ReviewService::ViewJson(const CandidateKey& key,
                                     const MappingDecision& d) const {
  const Letter* l = corpus_->FindLetter(key.letter_id);
  const int year = l ? l->year : 0;
  std::string suggestions;
  {
    // Suggestions depend only on the key; cache them.
    auto it = suggestion_cache_.find(key);
    if (it != suggestion_cache_.end()) {
      suggestions = it->second;
    } else {
      json arr = json::array();
      for (const NormalizationCandidate& c :
           normalizer_->Normalize(key.form, options_.normalizer)) {
        json senses = json::array();
        for (const Sense& s : c.entry->senses) {
          senses.push_back({{"sense_id", s.sense_id},
                            {"gloss", s.gloss},
                            {"first_attestation_year", s.first_attestation_year},
                            {"ht_path", s.ht_path}});
        }
        const int attested = EarliestAttestation(*c.entry);
        arr.push_back({{"lemma", c.entry->lemma},
                       {"pos", ToString(c.entry->pos)},
                       {"score", c.score},
                       {"method", ToString(c.method)},
                       {"attestation_year", attested},
                       {"delta_years", year - attested},
                       {"senses", std::move(senses)}});
      }
      suggestions = arr.dump();
      suggestion_cache_.emplace(key, suggestions);
    }
  }
  json view = {{"candidate_key", KeyJson(key)},
               {"letter_year", year},
               {"bucket", BucketOf(key.letter_id)},
               {"context", Context(key)},
               {"status", ToString(d.status)},
               {"suggestions", json::parse(suggestions)}};
  if (d.status != DecisionStatus::kPending) {
    view["decision"] = json::parse(DecisionToJson(d));
  }
  return view.dump();
}

ApiResponse ReviewService::ListCandidates(const std::string& status,
                                          const std::string& bucket, int page,
                                          int page_size) const {
  std::optional<DecisionStatus> want_status;
  if (!status.empty()) {
    want_status = ParseDecisionStatus(status);
    if (!want_status) return Error(400, "unknown status '" + status + "'");
  }
  if (!bucket.empty() && !ParseBucketKey(bucket)) {
    return Error(400, "unknown bucket '" + bucket + "'");
  }
  if (page < 1) return Error(400, "page must be >= 1");
  if (page_size <= 0) page_size = options_.page_size;
  page_size = std::min(page_size, kMaxPageSize);

  std::lock_guard<std::mutex> lock(mu_);
  std::vector<const CandidateKey*> matches;
  for (const CandidateKey& k : pool_) {
    if (want_status && effective_.at(k).status != *want_status) continue;
    if (!bucket.empty() && BucketOf(k.letter_id) != bucket) continue;
    matches.push_back(&k);
  }
  std::string items = "[";
  const size_t first = static_cast<size_t>(page - 1) * page_size;
  for (size_t i = first; i < matches.size() && i < first + page_size; ++i) {
    if (i > first) items += ',';
    items += ViewJson(*matches[i], effective_.at(*matches[i]));
  }
  items += ']';
  json out = {{"page", page},
              {"page_size", page_size},
              {"total", matches.size()},
              {"items", json::parse(items)}};
  return {200, out.dump()};
}

ApiResponse ReviewService::PostDecision(const std::string& body) {
  json req;
  try {
    req = json::parse(body);
  } catch (const json::parse_error& e) {
    return Error(400, std::string("malformed JSON: ") + e.what());
  }
  if (!req.is_object() || !req.contains("candidate_key") ||
      !req["candidate_key"].is_object()) {
    return Error(400, "missing candidate_key");
  }
  CandidateKey key;
  try {
    key.form = req["candidate_key"].at("form").get<std::string>();
    key.letter_id = req["candidate_key"].at("letter_id").get<std::string>();
  } catch (const json::exception&) {
    return Error(400, "candidate_key needs string form and letter_id");
  }
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (!effective_.count(key)) {
      return Error(404, "unknown candidate '" + key.form + "' in '" +
                            key.letter_id + "'");
    }
  }
  req["timestamp"] = NowIso8601();
  if (!req.contains("reviewer")) req["reviewer"] = "";
  MappingDecision d;
  try {
    d = DecisionFromJson(req.dump());
  } catch (const DecisionError& e) {
    return Error(422, e.what());
  }
  if (auto err = CheckDecision(d, *lexicon_)) return Error(422, *err);

  std::lock_guard<std::mutex> lock(mu_);
  try {
    log_.Append(d);
  } catch (const DecisionError& e) {
    return Error(500, e.what());
  }
  effective_[key] = d;
  return {200, DecisionToJson(d)};
}

ApiResponse ReviewService::Progress() const {
  std::map<std::string, std::map<DecisionStatus, int>> counts;
  std::map<DecisionStatus, int> totals;
  {
    std::lock_guard<std::mutex> lock(mu_);
    for (const CandidateKey& k : pool_) {
      const DecisionStatus s = effective_.at(k).status;
      ++counts[BucketOf(k.letter_id)][s];
      ++totals[s];
    }
  }
  auto summary = [](const std::map<DecisionStatus, int>& c) {
    json j;
    int total = 0;
    for (DecisionStatus s : kAllStatuses) {
      auto it = c.find(s);
      const int n = it == c.end() ? 0 : it->second;
      j[std::string(ToString(s))] = n;
      total += n;
    }
    j["total"] = total;
    return j;
  };
  json buckets = json::array();
  for (const auto& [b, c] : counts) {
    json j = summary(c);
    j["bucket"] = b;
    buckets.push_back(std::move(j));
  }
  return {200, json{{"buckets", std::move(buckets)}, {"totals", summary(totals)}}.dump()};
}

ReviewServer::ReviewServer(ReviewService& service, const std::string& ui_dir)
    : service_(service), server_(std::make_unique<httplib::Server>()) {
  httplib::Server& s = *server_;
  auto reply = [this](httplib::Response& res, const ApiResponse& r) {
    res.status = r.status;
    res.set_header("X-Plan-Hash", service_.plan_hash());
    res.set_header("ETag", "\"" + service_.plan_hash() + "\"");
    res.set_content(r.body, "application/json");
  };
  s.Get("/api/candidates", [this, reply](const httplib::Request& req,
                                         httplib::Response& res) {
    int page = 1, page_size = 0;
    try {
      if (req.has_param("page")) page = std::stoi(req.get_param_value("page"));
      if (req.has_param("page_size")) {
        page_size = std::stoi(req.get_param_value("page_size"));
      }
    } catch (const std::exception&) {
      reply(res, Error(400, "page and page_size must be integers"));
      return;
    }
    reply(res, service_.ListCandidates(req.get_param_value("status"),
                                       req.get_param_value("bucket"), page,
                                       page_size));
  });
  s.Post("/api/decisions", [this, reply](const httplib::Request& req,
                                         httplib::Response& res) {
    reply(res, service_.PostDecision(req.body));
  });
  s.Get("/api/progress", [this, reply](const httplib::Request&,
                                       httplib::Response& res) {
    reply(res, service_.Progress());
  });
  if (!ui_dir.empty() && std::filesystem::is_directory(ui_dir)) {
    s.set_mount_point("/", ui_dir);
  }
}

ReviewServer::~ReviewServer() = default;

int ReviewServer::Bind(const std::string& host, int port) {
  if (port == 0) return server_->bind_to_any_port(host);
  return server_->bind_to_port(host, port) ? port : -1;
}

bool ReviewServer::Run() { return server_->listen_after_bind(); }

void ReviewServer::Stop() { server_->stop(); }

}  // namespace neologia
