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

#include "neologia/normalizer.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"
#include "neologia/text.h"

namespace neologia {

using json = nlohmann::json;

namespace {

constexpr std::string_view kConsonants = "bcdfgklmnprstz";

constexpr std::pair<RuleContext, std::string_view> kContextNames[] = {
    {RuleContext::kAnywhere, "anywhere"},
    {RuleContext::kInitial, "initial"},
    {RuleContext::kFinal, "final"},
};

RewriteRule Rule(std::string pattern, std::string replacement, double cost,
                 RuleContext context = RuleContext::kAnywhere) {
  return RewriteRule{std::move(pattern), std::move(replacement), context, cost};
}

// Keeps the best-scoring candidate per entry; on equal scores the earlier
// stage wins.
void Merge(std::vector<NormalizationCandidate>&& from,
           std::unordered_map<const LexiconEntry*, NormalizationCandidate>* into) {
  for (auto& c : from) {
    auto it = into->find(c.entry);
    if (it == into->end()) {
      into->emplace(c.entry, std::move(c));
    } else if (c.score > it->second.score ||
               (c.score == it->second.score && c.method < it->second.method)) {
      it->second = std::move(c);
    }
  }
}

}  // namespace

std::string_view ToString(RuleContext c) {
  for (const auto& [v, n] : kContextNames) {
    if (v == c) return n;
  }
  return "?";
}

std::optional<RuleContext> ParseRuleContext(std::string_view s) {
  for (const auto& [v, n] : kContextNames) {
    if (n == s) return v;
  }
  return std::nullopt;
}

std::string_view ToString(Method m) {
  switch (m) {
    case Method::kExact:
      return "exact";
    case Method::kRule:
      return "rule";
    case Method::kEdit:
      return "edit";
  }
  return "?";
}

std::vector<RewriteRule> DefaultRules() {
  std::vector<RewriteRule> rules = {
      Rule("u", "v", 0.2), Rule("v", "u", 0.2),
      Rule("i", "j", 0.2), Rule("j", "i", 0.2),
      Rule("vv", "w", 0.2),
      Rule("y", "ie", 0.3), Rule("ie", "y", 0.3),
      Rule("e", "", 0.3, RuleContext::kFinal),
      Rule("ck", "k", 0.3, RuleContext::kFinal),
      Rule("k", "ck", 0.3, RuleContext::kFinal),
      Rule("ll", "l", 0.3, RuleContext::kFinal),
      Rule("l", "ll", 0.3, RuleContext::kFinal),
      Rule("oa", "o", 0.4), Rule("o", "oa", 0.4),
      Rule("ea", "ee", 0.4), Rule("ee", "ea", 0.4),
  };
  for (char c : kConsonants) {
    const std::string one(1, c), two(2, c);
    // Final -e added after a consonant.
    rules.push_back(Rule(one, one + "e", 0.3, RuleContext::kFinal));
    rules.push_back(Rule(two, one, 0.3));
    rules.push_back(Rule(one, two, 0.3));
  }
  return rules;
}

std::vector<RewriteRule> LoadRulesStream(std::istream& in) {
  std::vector<RewriteRule> rules;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "rules line " + std::to_string(line) + ": ";
    json rec;
    try {
      rec = json::parse(raw);
    } catch (const json::parse_error& e) {
      throw std::runtime_error(where + e.what());
    }
    RewriteRule r;
    try {
      r.pattern = FoldCase(rec.at("pattern").get<std::string>());
      r.replacement = FoldCase(rec.value("replacement", std::string()));
      r.cost = rec.at("cost").get<double>();
      auto ctx = ParseRuleContext(rec.value("context", std::string("anywhere")));
      if (!ctx) throw std::runtime_error("invalid context");
      r.context = *ctx;
    } catch (const json::exception& e) {
      throw std::runtime_error(where + e.what());
    }
    if (r.pattern.empty()) throw std::runtime_error(where + "empty pattern");
    if (!(r.cost >= 0)) throw std::runtime_error(where + "negative cost");
    rules.push_back(std::move(r));
  }
  return rules;
}

std::vector<RewriteRule> LoadRules(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open rules file '" + path + "'");
  return LoadRulesStream(in);
}

std::vector<std::string> ApplyRule(const RewriteRule& rule,
                                   std::string_view form) {
  std::vector<std::string> out;
  const std::string_view pat = rule.pattern;
  if (pat.empty() || pat.size() > form.size()) return out;
  auto rewrite = [&](size_t at) {
    std::string s;
    s.reserve(form.size() + rule.replacement.size());
    s.append(form.substr(0, at));
    s.append(rule.replacement);
    s.append(form.substr(at + pat.size()));
    out.push_back(std::move(s));
  };
  switch (rule.context) {
    case RuleContext::kInitial:
      if (form.substr(0, pat.size()) == pat) rewrite(0);
      break;
    case RuleContext::kFinal:
      if (form.substr(form.size() - pat.size()) == pat) {
        rewrite(form.size() - pat.size());
      }
      break;
    case RuleContext::kAnywhere:
      for (size_t at = form.find(pat); at != std::string_view::npos;
           at = form.find(pat, at + 1)) {
        rewrite(at);
      }
      break;
  }
  return out;
}

double EditWeights::Substitution(char32_t a, char32_t b) const {
  if (a == b) return 0.0;
  for (const auto& [x, y] : confusable_pairs) {
    if ((a == x && b == y) || (a == y && b == x)) return confusable;
  }
  return substitution;
}

double WeightedDamerauLevenshtein(std::u32string_view a, std::u32string_view b,
                                  const EditWeights& w, double bound) {
  const size_t n = a.size(), m = b.size();
  // Three rolling rows: i-2, i-1, i.
  std::vector<double> r0(m + 1), r1(m + 1), r2(m + 1);
  for (size_t j = 0; j <= m; ++j) r1[j] = static_cast<double>(j) * w.insertion;
  double prev_min = 0.0;
  for (size_t i = 1; i <= n; ++i) {
    r2[0] = static_cast<double>(i) * w.deletion;
    double row_min = r2[0];
    for (size_t j = 1; j <= m; ++j) {
      double d = std::min(r1[j] + w.deletion, r2[j - 1] + w.insertion);
      d = std::min(d, r1[j - 1] + w.Substitution(a[i - 1], b[j - 1]));
      if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1] &&
          a[i - 1] != a[i - 2]) {
        d = std::min(d, r0[j - 2] + w.transposition);
      }
      r2[j] = d;
      row_min = std::min(row_min, d);
    }
    // Transpositions reach back two rows, so both must exceed the bound.
    if (row_min > bound && prev_min > bound) return row_min;
    prev_min = row_min;
    std::swap(r0, r1);
    std::swap(r1, r2);
  }
  return r1[m];
}

Normalizer::Normalizer(const Lexicon& lexicon, std::vector<RewriteRule> rules,
                       EditWeights weights)
    : lexicon_(&lexicon), rules_(std::move(rules)), weights_(std::move(weights)) {
  for (RewriteRule& r : rules_) {
    if (r.pattern.empty()) throw std::invalid_argument("rewrite rule with empty pattern");
    if (r.cost < 0) throw std::invalid_argument("rewrite rule with negative cost");
  }
  variants_.reserve(lexicon.variant_index().size());
  for (const auto& [variant, ids] : lexicon.variant_index()) {
    variants_.emplace_back(DecodeUtf8(variant), ids);
  }
  // Index iteration order is unspecified; fix it.
  std::sort(variants_.begin(), variants_.end());
}

std::vector<NormalizationCandidate> Normalizer::ExactStage(
    std::string_view form) const {
  std::vector<NormalizationCandidate> out;
  for (const LexiconEntry* e : lexicon_->LookupVariant(form)) {
    out.push_back({std::string(form), e, 1.0, Method::kExact});
  }
  return out;
}

std::map<std::string, double> Normalizer::RuleClosure(std::string_view form,
                                                      double max_cost) const {
  std::unordered_map<std::string, double> best{{FoldCase(form), 0.0}};
  std::unordered_map<std::string, double> frontier = best;
  for (int depth = 0; depth < rule_depth_ && !frontier.empty(); ++depth) {
    std::unordered_map<std::string, double> next;
    for (const auto& [f, cost] : frontier) {
      for (const RewriteRule& rule : rules_) {
        const double c = cost + rule.cost;
        if (c > max_cost) continue;
        for (std::string& out : ApplyRule(rule, f)) {
          auto it = best.find(out);
          if (it != best.end() && it->second <= c) continue;
          best[out] = c;
          auto nit = next.find(out);
          if (nit == next.end() || nit->second > c) next[out] = c;
        }
      }
    }
    frontier = std::move(next);
  }
  return {best.begin(), best.end()};
}

std::vector<NormalizationCandidate> Normalizer::RuleStage(
    std::string_view form, double max_cost) const {
  std::unordered_map<const LexiconEntry*, NormalizationCandidate> best;
  for (const auto& [rewritten, cost] : RuleClosure(form, max_cost)) {
    if (cost == 0.0) continue;
    std::vector<NormalizationCandidate> hits;
    for (const LexiconEntry* e : lexicon_->LookupVariant(rewritten)) {
      hits.push_back({std::string(form), e, 1.0 / (1.0 + cost), Method::kRule});
    }
    Merge(std::move(hits), &best);
  }
  std::vector<NormalizationCandidate> out;
  for (auto& [e, c] : best) out.push_back(std::move(c));
  return out;
}

std::vector<NormalizationCandidate> Normalizer::EditStage(
    std::string_view form, double max_cost) const {
  const std::u32string query = DecodeUtf8(FoldCase(form));
  const double min_indel = std::min(weights_.insertion, weights_.deletion);
  std::unordered_map<const LexiconEntry*, NormalizationCandidate> best;
  for (const auto& [variant, ids] : variants_) {
    const double len_gap =
        std::abs(static_cast<double>(variant.size()) -
                 static_cast<double>(query.size()));
    if (len_gap * min_indel > max_cost) continue;
    const double d =
        WeightedDamerauLevenshtein(query, variant, weights_, max_cost);
    if (d > max_cost) continue;
    std::vector<NormalizationCandidate> hits;
    for (size_t i : ids) {
      hits.push_back({std::string(form), &lexicon_->entries()[i],
                      1.0 / (1.0 + d), Method::kEdit});
    }
    Merge(std::move(hits), &best);
  }
  std::vector<NormalizationCandidate> out;
  for (auto& [e, c] : best) out.push_back(std::move(c));
  return out;
}

void SortCandidates(std::vector<NormalizationCandidate>* candidates) {
  std::sort(candidates->begin(), candidates->end(),
            [](const NormalizationCandidate& a, const NormalizationCandidate& b) {
              if (a.score != b.score) return a.score > b.score;
              if (a.entry->lemma != b.entry->lemma) {
                return a.entry->lemma < b.entry->lemma;
              }
              return a.entry->pos < b.entry->pos;
            });
}

std::vector<NormalizationCandidate> Normalizer::Normalize(
    std::string_view form, int k, double max_cost) const {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (!(max_cost >= 0)) throw std::invalid_argument("max_cost must be >= 0");
  std::vector<NormalizationCandidate> out = ExactStage(form);
  if (out.empty()) {
    std::unordered_map<const LexiconEntry*, NormalizationCandidate> best;
    Merge(RuleStage(form, max_cost), &best);
    Merge(EditStage(form, max_cost), &best);
    for (auto& [e, c] : best) out.push_back(std::move(c));
  }
  SortCandidates(&out);
  if (out.size() > static_cast<size_t>(k)) out.resize(k);
  return out;
}

namespace {

NormalizerMetrics Score(const std::vector<const GoldItem*>& items,
                        const Normalizer& normalizer,
                        const NormalizerOptions& opts) {
  NormalizerMetrics m;
  m.total = static_cast<int>(items.size());
  for (const GoldItem* g : items) {
    auto cands = normalizer.Normalize(g->form, opts);
    if (cands.empty()) continue;
    ++m.matched;
    if (cands[0].entry->lemma != g->lemma) continue;
    ++m.lemma_correct;
    if (cands[0].entry->pos == g->pos) ++m.pos_correct;
  }
  auto ratio = [](int a, int b) { return b > 0 ? static_cast<double>(a) / b : 0.0; };
  m.matched_fraction = ratio(m.matched, m.total);
  m.lemma_accuracy = ratio(m.lemma_correct, m.matched);
  m.pos_accuracy = ratio(m.pos_correct, m.lemma_correct);
  return m;
}

}  // namespace

NormalizerMetrics EvaluateNormalizer(const std::vector<GoldItem>& gold,
                                     const Normalizer& normalizer,
                                     const NormalizerOptions& opts) {
  if (gold.empty()) throw std::invalid_argument("empty gold list");
  std::vector<const GoldItem*> items;
  for (const GoldItem& g : gold) items.push_back(&g);
  return Score(items, normalizer, opts);
}

std::map<std::string, NormalizerMetrics> EvaluateNormalizerByCategory(
    const std::vector<GoldItem>& gold, const Normalizer& normalizer,
    const NormalizerOptions& opts) {
  if (gold.empty()) throw std::invalid_argument("empty gold list");
  std::map<std::string, std::vector<const GoldItem*>> groups;
  for (const GoldItem& g : gold) groups[g.category].push_back(&g);
  std::map<std::string, NormalizerMetrics> out;
  for (const auto& [cat, items] : groups) {
    out[cat] = Score(items, normalizer, opts);
  }
  return out;
}

std::vector<GoldItem> LoadGold(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open gold file '" + path + "'");
  std::vector<GoldItem> gold;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (raw.empty() || raw[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ss(raw);
    std::string col;
    while (std::getline(ss, col, '\t')) cols.push_back(col);
    if (cols.size() < 3) {
      throw std::runtime_error("gold line " + std::to_string(line) +
                               ": expected form, lemma, pos");
    }
    auto pos = ParsePartOfSpeech(cols[2]);
    if (!pos) {
      throw std::runtime_error("gold line " + std::to_string(line) +
                               ": bad pos '" + cols[2] + "'");
    }
    gold.push_back({cols[0], cols[1], *pos, cols.size() > 3 ? cols[3] : ""});
  }
  return gold;
}

}  // namespace neologia
