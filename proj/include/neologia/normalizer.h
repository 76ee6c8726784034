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

// Spelling normalization against a dated lexicon.
//
// Candidates come from three stages, always restricted to forms that hit the
// lexicon's variant index:
//   1. exact variant match (score 1, short-circuits the other stages);
//   2. closure of orthographic rewrite rules up to a fixed depth, score
//      1 / (1 + sum of rule costs);
//   3. weighted Damerau-Levenshtein distance to every indexed variant,
//      score 1 / (1 + distance).
// Stage 2 and 3 results are merged per entry, keeping the better score.

#ifndef NEOLOGIA_NORMALIZER_H_
#define NEOLOGIA_NORMALIZER_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "neologia/lexicon.h"

namespace neologia {

enum class RuleContext { kAnywhere, kInitial, kFinal };
std::string_view ToString(RuleContext c);
std::optional<RuleContext> ParseRuleContext(std::string_view s);

struct RewriteRule {
  std::string pattern;  // non-empty, case-folded
  std::string replacement;
  RuleContext context = RuleContext::kAnywhere;
  double cost = 0.0;

  bool operator==(const RewriteRule&) const = default;
};

// Built-in early / late modern English spelling rules.
std::vector<RewriteRule> DefaultRules();
// JSONL, one RewriteRule object per line.
std::vector<RewriteRule> LoadRules(const std::string& path);
std::vector<RewriteRule> LoadRulesStream(std::istream& in);

// Every form reachable from `form` by one application of `rule`.
std::vector<std::string> ApplyRule(const RewriteRule& rule,
                                   std::string_view form);

struct EditWeights {
  double insertion = 1.0;
  double deletion = 1.0;
  double substitution = 1.0;
  double transposition = 0.8;
  // Cheap substitutions (symmetric).
  double confusable = 0.3;
  std::vector<std::pair<char32_t, char32_t>> confusable_pairs = {
      {U'u', U'v'}, {U'i', U'j'}, {U'i', U'y'}};

  double Substitution(char32_t a, char32_t b) const;
};

// Weighted optimal-string-alignment distance (Damerau-Levenshtein with
// adjacent transpositions, no substring edited twice). Returns a value
// greater than `bound` as soon as the distance is known to exceed it.
double WeightedDamerauLevenshtein(std::u32string_view a, std::u32string_view b,
                                  const EditWeights& w,
                                  double bound = 1e18);

enum class Method { kExact, kRule, kEdit };
std::string_view ToString(Method m);

struct NormalizationCandidate {
  std::string surface;
  const LexiconEntry* entry = nullptr;
  double score = 0.0;
  Method method = Method::kEdit;
};

struct NormalizerOptions {
  int k = 5;
  double max_cost = 2.5;
};

class Normalizer {
 public:
  Normalizer(const Lexicon& lexicon, std::vector<RewriteRule> rules,
             EditWeights weights = {});

  // Ranked candidates, at most `k`, sorted by (score desc, lemma, pos).
  std::vector<NormalizationCandidate> Normalize(std::string_view form, int k,
                                                double max_cost) const;
  std::vector<NormalizationCandidate> Normalize(
      std::string_view form, const NormalizerOptions& opts) const {
    return Normalize(form, opts.k, opts.max_cost);
  }

  // Individual stages, unsorted and untruncated; exposed for testing.
  std::vector<NormalizationCandidate> ExactStage(std::string_view form) const;
  std::vector<NormalizationCandidate> RuleStage(std::string_view form,
                                                double max_cost) const;
  std::vector<NormalizationCandidate> EditStage(std::string_view form,
                                                double max_cost) const;

  // Minimal-cost rewrites of `form` within the depth and cost bound,
  // including `form` itself at cost 0.
  std::map<std::string, double> RuleClosure(std::string_view form,
                                            double max_cost) const;

  const Lexicon& lexicon() const { return *lexicon_; }
  const EditWeights& weights() const { return weights_; }
  void set_rule_depth(int depth) { rule_depth_ = depth; }

 private:
  const Lexicon* lexicon_;
  std::vector<RewriteRule> rules_;
  EditWeights weights_;
  int rule_depth_ = 3;
  // Decoded variants with their entry positions.
  std::vector<std::pair<std::u32string, std::vector<size_t>>> variants_;
};

void SortCandidates(std::vector<NormalizationCandidate>* candidates);

struct GoldItem {
  std::string form;
  std::string lemma;
  PartOfSpeech pos = PartOfSpeech::kOther;
  std::string category;  // optional grouping, e.g. writer gender
};

struct NormalizerMetrics {
  double lemma_accuracy = 0.0;
  double pos_accuracy = 0.0;
  double matched_fraction = 0.0;
  int total = 0;
  int matched = 0;
  int lemma_correct = 0;
  int pos_correct = 0;
};

// Throws std::invalid_argument on an empty gold list.
NormalizerMetrics EvaluateNormalizer(const std::vector<GoldItem>& gold,
                                     const Normalizer& normalizer,
                                     const NormalizerOptions& opts = {});
// Same metrics per GoldItem::category.
std::map<std::string, NormalizerMetrics> EvaluateNormalizerByCategory(
    const std::vector<GoldItem>& gold, const Normalizer& normalizer,
    const NormalizerOptions& opts = {});

// TSV: form, lemma, pos[, category].
std::vector<GoldItem> LoadGold(const std::string& path);

}  // namespace neologia

#endif  // NEOLOGIA_NORMALIZER_H_
