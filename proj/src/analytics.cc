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

#include "neologia/analytics.h"

#include <algorithm>
#include <climits>
#include <functional>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace neologia {

using json = nlohmann::json;

namespace {

constexpr std::string_view kUndefined = "\xE2\x80\x93";  // en dash

double OneDecimal(double x) { return std::round(x * 10.0) / 10.0; }

std::string JoinPath(const std::vector<std::string>& path, size_t levels) {
  std::string out;
  for (size_t i = 0; i < std::min(levels, path.size()); ++i) {
    if (i > 0) out += kHtSeparator;
    out += path[i];
  }
  return out;
}

// Accumulates tokens and words for labelled values in a fixed row order.
class Tally {
 public:
  void AddRow(std::string label) {
    index_.emplace(label, rows_.size());
    FrequencyRow r;
    r.value = std::move(label);
    rows_.push_back(std::move(r));
  }
  void AddWords(const std::string& label, int64_t n) { row(label).words += n; }
  void AddToken(const std::string& label) { ++row(label).tokens; }

  std::vector<FrequencyRow> Finish() && {
    for (FrequencyRow& r : rows_) {
      if (r.words > 0) {
        r.per_10k = static_cast<double>(r.tokens) / static_cast<double>(r.words) * 1e4;
      }
    }
    std::stable_sort(rows_.begin(), rows_.end(),
                     [](const FrequencyRow& a, const FrequencyRow& b) {
                       if (a.per_10k.has_value() != b.per_10k.has_value()) {
                         return a.per_10k.has_value();
                       }
                       return a.per_10k && *a.per_10k > *b.per_10k;
                     });
    return std::move(rows_);
  }

 private:
  FrequencyRow& row(const std::string& label) {
    auto it = index_.find(label);
    if (it == index_.end()) throw std::logic_error("no row '" + label + "'");
    return rows_[it->second];
  }

  std::vector<FrequencyRow> rows_;
  std::map<std::string, size_t> index_;
};

}  // namespace

std::string_view ToString(Axis a) {
  switch (a) {
    case Axis::kGender:
      return "gender";
    case Axis::kRank:
      return "rank";
    case Axis::kRelationship:
      return "relationship";
    case Axis::kAgeGroup:
      return "age_group";
  }
  return "?";
}

std::optional<Axis> ParseAxis(std::string_view s) {
  if (s == "gender") return Axis::kGender;
  if (s == "rank") return Axis::kRank;
  if (s == "relationship") return Axis::kRelationship;
  if (s == "age" || s == "age_group") return Axis::kAgeGroup;
  return std::nullopt;
}

std::string_view DisplayName(Axis a) {
  switch (a) {
    case Axis::kGender:
      return "Gender";
    case Axis::kRank:
      return "Social Rank";
    case Axis::kRelationship:
      return "Relationship";
    case Axis::kAgeGroup:
      return "Age";
  }
  return "?";
}

std::string_view DisplayName(Gender g) {
  switch (g) {
    case Gender::kMale:
      return "Male";
    case Gender::kFemale:
      return "Female";
    case Gender::kUnknown:
      return "Unknown";
  }
  return "?";
}

std::string_view DisplayName(Rank r) {
  switch (r) {
    case Rank::kRoyalty:
      return "Royalty";
    case Rank::kNobility:
      return "Nobility";
    case Rank::kGentry:
      return "Gentry";
    case Rank::kClergy:
      return "Clergy";
    case Rank::kProfessionals:
      return "Professionals";
    case Rank::kMerchants:
      return "Merchants";
    case Rank::kOtherNonGentry:
      return "Other non-gentry";
    case Rank::kUnknown:
      return "Unknown";
  }
  return "?";
}

std::string_view DisplayName(Relationship r) {
  switch (r) {
    case Relationship::kNuclearFamily:
      return "Nuclear family";
    case Relationship::kOtherFamily:
      return "Other family";
    case Relationship::kCloseFriends:
      return "Close friends";
    case Relationship::kOtherAcquaintances:
      return "Other acquaintances";
  }
  return "?";
}

const FrequencyRow* FrequencyReport::Find(std::string_view value) const {
  for (const FrequencyRow& r : rows) {
    if (r.value == value) return &r;
  }
  return nullptr;
}

FrequencyReport ComputeFrequencyReport(
    const std::vector<NeologismRecord>& records, const Corpus& corpus,
    Axis axis, const LetterFilter& in_scope, std::optional<int> age_split) {
  auto scoped = [&](const Letter& l) { return !in_scope || in_scope(l); };
  Tally tally;
  // Label for a letter's writer on this axis, or nullopt when unknown.
  std::function<std::optional<std::string>(const Person&, Relationship, int)> label;

  switch (axis) {
    case Axis::kGender:
      for (Gender g : kAllGenders) {
        if (g != Gender::kUnknown) tally.AddRow(std::string(DisplayName(g)));
      }
      label = [](const Person& p, Relationship, int) -> std::optional<std::string> {
        if (p.gender == Gender::kUnknown) return std::nullopt;
        return std::string(DisplayName(p.gender));
      };
      break;
    case Axis::kRank:
      for (Rank r : kAllRanks) {
        if (r != Rank::kUnknown) tally.AddRow(std::string(DisplayName(r)));
      }
      label = [](const Person& p, Relationship, int) -> std::optional<std::string> {
        if (p.rank == Rank::kUnknown) return std::nullopt;
        return std::string(DisplayName(p.rank));
      };
      break;
    case Axis::kRelationship:
      for (Relationship r : kAllRelationships) {
        tally.AddRow(std::string(DisplayName(r)));
      }
      label = [](const Person&, Relationship r, int) -> std::optional<std::string> {
        return std::string(DisplayName(r));
      };
      break;
    case Axis::kAgeGroup: {
      if (!age_split) throw std::invalid_argument("age axis needs an age split");
      const int split = *age_split;
      int lo = INT_MAX, hi = INT_MIN;
      for (const Letter& l : corpus.letters()) {
        if (!scoped(l)) continue;
        if (auto age = WriterAge(corpus, l)) {
          lo = std::min(lo, *age);
          hi = std::max(hi, *age);
        }
      }
      const std::string young =
          lo < split ? std::to_string(lo) + "\xE2\x80\x93" + std::to_string(split - 1)
                     : "<" + std::to_string(split);
      const std::string old =
          hi >= split ? std::to_string(split) + "\xE2\x80\x93" + std::to_string(hi)
                      : ">=" + std::to_string(split);
      tally.AddRow(young);
      tally.AddRow(old);
      label = [=](const Person& p, Relationship,
                  int year) -> std::optional<std::string> {
        if (!p.birth_year) return std::nullopt;
        return year - *p.birth_year < split ? young : old;
      };
      break;
    }
  }

  for (const Letter& l : corpus.letters()) {
    if (!scoped(l)) continue;
    if (auto v = label(corpus.sender(l), l.relationship, l.year)) {
      tally.AddWords(*v, static_cast<int64_t>(l.tokens.size()));
    }
  }
  for (const NeologismRecord& r : records) {
    const Letter* l = corpus.FindLetter(r.letter_id);
    if (!l) throw std::invalid_argument("record letter '" + r.letter_id + "' not in corpus");
    if (!scoped(*l)) continue;
    if (auto v = label(r.writer, r.relationship, r.corpus_year)) tally.AddToken(*v);
  }
  return {axis, std::move(tally).Finish()};
}

std::string RenderRate(const FrequencyRow& row) {
  if (!row.per_10k) return std::string(kUndefined);
  return std::to_string(std::lround(*row.per_10k));
}

std::string FrequencyReportToTsv(const FrequencyReport& report) {
  std::ostringstream out;
  out << "category\tvalue\tper_10k_words\ttokens\twords\n";
  bool first = true;
  for (const FrequencyRow& r : report.rows) {
    out << (first ? DisplayName(report.axis) : "") << '\t' << r.value << '\t'
        << RenderRate(r) << '\t' << r.tokens << '\t' << r.words << '\n';
    first = false;
  }
  return out.str();
}

namespace {

json ReportJson(const FrequencyReport& report) {
  json rows = json::array();
  for (const FrequencyRow& r : report.rows) {
    rows.push_back({{"value", r.value},
                    {"tokens", r.tokens},
                    {"words", r.words},
                    {"per_10k", r.per_10k ? json(OneDecimal(*r.per_10k)) : json()}});
  }
  return {{"axis", ToString(report.axis)}, {"rows", std::move(rows)}};
}

}  // namespace

std::string FrequencyReportToJson(const FrequencyReport& report, int indent) {
  return ReportJson(report).dump(indent);
}

std::string_view ToString(Dimension d) {
  switch (d) {
    case Dimension::kPos:
      return "pos";
    case Dimension::kEtymologyKind:
      return "etymology_kind";
    case Dimension::kSourceLanguage:
      return "source_language";
    case Dimension::kHtLevel1:
      return "ht_level_1";
    case Dimension::kHtLevel2:
      return "ht_level_2";
  }
  return "?";
}

std::optional<Dimension> ParseDimension(std::string_view s) {
  for (Dimension d : {Dimension::kPos, Dimension::kEtymologyKind,
                      Dimension::kSourceLanguage, Dimension::kHtLevel1,
                      Dimension::kHtLevel2}) {
    if (ToString(d) == s) return d;
  }
  return std::nullopt;
}

int Breakdown::count(const std::string& label) const {
  auto it = counts.find(label);
  return it == counts.end() ? 0 : it->second;
}

std::vector<std::pair<std::string, int>> Breakdown::Sorted() const {
  std::vector<std::pair<std::string, int>> out(counts.begin(), counts.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  return out;
}

Breakdown ComputeBreakdown(const std::vector<NeologismRecord>& records,
                           Dimension dimension) {
  Breakdown b;
  b.dimension = dimension;
  std::set<EntryKey> seen;
  for (const NeologismRecord& r : records) {
    if (!seen.insert(r.type()).second) continue;
    ++b.types;
    switch (dimension) {
      case Dimension::kPos:
        ++b.counts[std::string(ToString(r.pos))];
        break;
      case Dimension::kEtymologyKind:
        ++b.counts[std::string(ToString(r.etymology.kind))];
        break;
      case Dimension::kSourceLanguage:
        if (r.etymology.source_language) ++b.counts[*r.etymology.source_language];
        break;
      case Dimension::kHtLevel1:
        ++b.counts[JoinPath(r.ht_path, 1)];
        break;
      case Dimension::kHtLevel2:
        ++b.counts[JoinPath(r.ht_path, 2)];
        break;
    }
  }
  return b;
}

std::string BreakdownToTsv(const Breakdown& b) {
  std::ostringstream out;
  out << ToString(b.dimension) << "\ttypes\n";
  for (const auto& [label, n] : b.Sorted()) out << label << '\t' << n << '\n';
  return out.str();
}

std::vector<NeologismRecord> Antedatings(
    const std::vector<NeologismRecord>& records) {
  std::vector<NeologismRecord> out;
  for (const NeologismRecord& r : records) {
    if (r.antedating) out.push_back(r);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const NeologismRecord& a, const NeologismRecord& b) {
                     return a.delta_years < b.delta_years;
                   });
  return out;
}

std::string FullReportJson(const std::vector<NeologismRecord>& records,
                           const Corpus& corpus, const LetterFilter& in_scope,
                           const std::vector<int>& age_splits) {
  json freq = json::array();
  for (Axis a : {Axis::kGender, Axis::kRank, Axis::kRelationship}) {
    freq.push_back(ReportJson(ComputeFrequencyReport(records, corpus, a, in_scope)));
  }
  for (int split : age_splits) {
    json j = ReportJson(
        ComputeFrequencyReport(records, corpus, Axis::kAgeGroup, in_scope, split));
    j["age_split"] = split;
    freq.push_back(std::move(j));
  }
  json breakdowns = json::object();
  for (Dimension d : {Dimension::kPos, Dimension::kEtymologyKind,
                      Dimension::kSourceLanguage, Dimension::kHtLevel1,
                      Dimension::kHtLevel2}) {
    breakdowns[std::string(ToString(d))] = ComputeBreakdown(records, d).counts;
  }
  json ante = json::array();
  std::set<EntryKey> ante_types;
  for (const NeologismRecord& r : Antedatings(records)) {
    ante_types.insert(r.type());
    ante.push_back({{"lemma", r.lemma},
                    {"pos", ToString(r.pos)},
                    {"form", r.form},
                    {"letter_id", r.letter_id},
                    {"corpus_year", r.corpus_year},
                    {"attestation_year", r.attestation_year},
                    {"delta_years", r.delta_years}});
  }
  return json{{"tokens", records.size()},
              {"types", CountTypes(records)},
              {"running_words", RunningWords(corpus, in_scope)},
              {"frequencies", std::move(freq)},
              {"breakdowns", std::move(breakdowns)},
              {"antedated_types", ante_types.size()},
              {"antedatings", std::move(ante)}}
      .dump(2);
}

}  // namespace neologia
