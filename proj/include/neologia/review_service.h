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

// Review queue over a sampling plan, backed by the decision log.
//
//   GET  /api/candidates?status=&bucket=&page=&page_size=
//   POST /api/decisions
//   GET  /api/progress
//
// Every API response carries the plan hash in X-Plan-Hash and ETag.

#ifndef NEOLOGIA_REVIEW_SERVICE_H_
#define NEOLOGIA_REVIEW_SERVICE_H_

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "neologia/classifier.h"
#include "neologia/corpus.h"
#include "neologia/lexicon.h"
#include "neologia/normalizer.h"
#include "neologia/sampler.h"

namespace httplib {
class Server;
}

namespace neologia {

struct ServiceOptions {
  int context_chars = 120;
  int page_size = 50;
  NormalizerOptions normalizer;
};

// Status code plus JSON body.
struct ApiResponse {
  int status = 200;
  std::string body;
};

class ReviewService {
 public:
  // Replays `log_path` (created if missing). Throws DecisionError when a
  // logged line is malformed or does not resolve against the lexicon.
  ReviewService(SamplingPlan plan, const Corpus& corpus, const Lexicon& lexicon,
                const Normalizer& normalizer, const std::string& log_path,
                ServiceOptions options = {});

  ApiResponse ListCandidates(const std::string& status,
                             const std::string& bucket, int page,
                             int page_size = 0) const;
  ApiResponse PostDecision(const std::string& body);
  ApiResponse Progress() const;

  const std::string& plan_hash() const { return plan_hash_; }
  const std::vector<CandidateKey>& pool() const { return pool_; }
  // Candidates with a non-pending effective status.
  size_t decided() const;
  // Logged decisions whose key is not in the plan.
  size_t skipped() const { return skipped_; }

  // Letter text around the first unflagged occurrence of `key.form`.
  std::string Context(const CandidateKey& key) const;

 private:
  std::string ViewJson(const CandidateKey& key, const MappingDecision& d) const;
  std::string BucketOf(const std::string& letter_id) const;

  SamplingPlan plan_;
  const Corpus* corpus_;
  const Lexicon* lexicon_;
  const Normalizer* normalizer_;
  ServiceOptions options_;
  std::string plan_hash_;
  std::vector<CandidateKey> pool_;
  std::map<std::string, std::string> bucket_of_;  // letter id -> bucket key

  mutable std::mutex mu_;
  std::map<CandidateKey, MappingDecision> effective_;
  size_t skipped_ = 0;
  DecisionLog log_;
  mutable std::map<CandidateKey, std::string> suggestion_cache_;
};

// HTTP front end. Static files under `ui_dir` are served at "/" when set.
class ReviewServer {
 public:
  explicit ReviewServer(ReviewService& service, const std::string& ui_dir = "");
  ~ReviewServer();

  // Returns the bound port (an ephemeral one when `port` is 0), or -1.
  int Bind(const std::string& host, int port);
  // Blocks until Stop().
  bool Run();
  void Stop();

 private:
  ReviewService& service_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace neologia

#endif  // NEOLOGIA_REVIEW_SERVICE_H_
