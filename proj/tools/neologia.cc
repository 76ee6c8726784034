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

// neologia: command-line entry point.
//
// Exit status: 0 success, 1 usage error, 2 data error.

#include <fstream>
#include <iostream>
#include <set>

#include "CLI11.hpp"
#include "json.hpp"
#include "neologia/analytics.h"
#include "neologia/classifier.h"
#include "neologia/corpus.h"
#include "neologia/lexicon.h"
#include "neologia/normalizer.h"
#include "neologia/pipeline.h"
#include "neologia/review_service.h"
#include "neologia/sampler.h"

namespace {

using json = nlohmann::json;
using namespace neologia;

constexpr int kUsage = 1;
constexpr int kDataError = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<Period> OptPeriod(const std::string& s) {
  if (s.empty()) return std::nullopt;
  try {
    return ParsePeriod(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// Writes to `path`, or stdout when empty or "-".
void Emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

std::vector<RewriteRule> Rules(const std::string& path) {
  return path.empty() ? DefaultRules() : LoadRules(path);
}

json CandidateJson(const NormalizationCandidate& c) {
  return {{"lemma", c.entry->lemma},
          {"pos", ToString(c.entry->pos)},
          {"score", c.score},
          {"method", ToString(c.method)}};
}

struct Options {
  // ingest
  std::string ingest_in, ingest_out, period;
  // lexicon
  std::string lexicon, lookup_form;
  // normalize
  std::vector<std::string> forms;
  std::string in, out, rules, gold;
  int k = 5;
  double max_cost = 2.5;
  // sample
  std::string corpus;
  int64_t target_words = 0;
  uint64_t seed = 42;
  // serve / classify
  std::string plan, log, bind = "127.0.0.1:8417", ui;
  int context_chars = 120;
  int window = kDefaultWindowYears;
  std::string no_entry_out;
  // report
  std::string records, axis, breakdown, format = "tsv";
  int age_split = 40;
  bool antedatings = false;
  // run
  std::string config, out_dir;
  bool dry_run = false, force = false;
};

int Ingest(const Options& o) {
  const Corpus corpus = ParseCorpus(o.ingest_in, OptPeriod(o.period));
  WriteIndex(corpus, o.ingest_in, o.ingest_out);
  std::cout << "indexed " << corpus.letters().size() << " letters, "
            << corpus.persons().size() << " persons, " << RunningWords(corpus)
            << " running words (" << ToString(corpus.period()) << ")\n";
  return 0;
}

int LexiconValidate(const Options& o) {
  const Lexicon lex = LoadLexicon(o.lexicon);
  size_t variants = lex.variant_index().size();
  std::cout << o.lexicon << ": " << lex.size() << " entries, " << variants
            << " distinct variants\n";
  return 0;
}

int LexiconLookup(const Options& o) {
  const Lexicon lex = LoadLexicon(o.lexicon);
  const auto hits = lex.LookupVariant(o.lookup_form);
  for (const LexiconEntry* e : hits) {
    std::cout << e->lemma << '\t' << ToString(e->pos) << '\t'
              << EarliestAttestation(*e) << '\n';
    for (const Sense& s : e->senses) {
      std::cout << "  " << s.sense_id << '\t' << s.first_attestation_year << '\t'
                << HtRollup(s, static_cast<int>(s.ht_path.size())) << '\t'
                << s.gloss << '\n';
    }
  }
  return hits.empty() ? kDataError : 0;
}

int Normalize(const Options& o) {
  const Lexicon lex = LoadLexicon(o.lexicon);
  const Normalizer normalizer(lex, Rules(o.rules));
  if (!o.gold.empty()) {
    NormalizerOptions opts;
    opts.k = o.k;
    opts.max_cost = o.max_cost;
    const auto gold = LoadGold(o.gold);
    const NormalizerMetrics m = EvaluateNormalizer(gold, normalizer, opts);
    std::cout << "items\t" << m.total << "\nmatched\t" << m.matched_fraction
              << "\nlemma_accuracy\t" << m.lemma_accuracy << "\npos_accuracy\t"
              << m.pos_accuracy << '\n';
    return 0;
  }
  std::vector<std::string> forms = o.forms;
  if (!o.in.empty()) {
    std::ifstream in(o.in);
    if (!in) throw std::runtime_error("cannot open '" + o.in + "'");
    for (std::string line; std::getline(in, line);) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) forms.push_back(line);
    }
  }
  if (forms.empty()) throw UsageError("no forms given");
  std::ostringstream out;
  for (const std::string& form : forms) {
    const auto cands = normalizer.Normalize(form, o.k, o.max_cost);
    if (!o.out.empty()) {
      json arr = json::array();
      for (const auto& c : cands) arr.push_back(CandidateJson(c));
      out << json{{"form", form}, {"candidates", std::move(arr)}}.dump() << '\n';
      continue;
    }
    if (cands.empty()) out << form << "\t-\n";
    int rank = 0;
    for (const auto& c : cands) {
      out << form << '\t' << ++rank << '\t' << c.entry->lemma << '\t'
          << ToString(c.entry->pos) << '\t' << c.score << '\t'
          << ToString(c.method) << '\n';
    }
  }
  Emit(o.out, out.str());
  return 0;
}

int Sample(const Options& o) {
  const Corpus corpus = LoadCorpusPath(o.corpus);
  const Period period = OptPeriod(o.period).value_or(corpus.period());
  SamplingPlan plan =
      DrawSample(BuildBuckets(corpus, period), o.target_words, o.seed);
  plan.period = period;
  AttachCandidateForms(&plan, FirstAppearances(corpus));
  SavePlan(plan, o.out);
  const size_t pool = CandidatePool(plan, plan.candidate_forms).size();
  std::cerr << "bucket\ttarget\tselected\tavailable\n";
  for (const BucketReport& b : plan.buckets) {
    std::cerr << ToString(b.key) << '\t' << b.words_target << '\t'
              << b.words_selected << '\t' << b.words_available << '\n';
  }
  std::cerr << plan.letters.size() << " letters, " << plan.words_selected()
            << " words, " << pool << " candidates\n";
  return 0;
}

int Serve(const Options& o) {
  const auto colon = o.bind.rfind(':');
  if (colon == std::string::npos) throw UsageError("--bind expects host:port");
  const std::string host = o.bind.substr(0, colon);
  int port = 0;
  try {
    port = std::stoi(o.bind.substr(colon + 1));
  } catch (const std::exception&) {
    throw UsageError("bad port in --bind '" + o.bind + "'");
  }
  const Corpus corpus = LoadCorpusPath(o.corpus);
  const Lexicon lex = LoadLexicon(o.lexicon);
  const Normalizer normalizer(lex, Rules(o.rules));
  ServiceOptions opts;
  opts.context_chars = o.context_chars;
  opts.normalizer.k = o.k;
  opts.normalizer.max_cost = o.max_cost;
  ReviewService service(LoadPlan(o.plan), corpus, lex, normalizer, o.log, opts);
  ReviewServer server(service, o.ui);
  const int bound = server.Bind(host, port);
  if (bound < 0) throw std::runtime_error("cannot bind " + o.bind);
  std::cout << "replayed " << service.decided() << " decisions ("
            << service.skipped() << " outside the plan); listening on " << host
            << ':' << bound << std::endl;
  return server.Run() ? 0 : kDataError;
}

int Classify(const Options& o) {
  const Corpus corpus = LoadCorpusPath(o.corpus);
  const Lexicon lex = LoadLexicon(o.lexicon);
  const SamplingPlan plan = LoadPlan(o.plan);
  const auto pool = CandidatePool(plan, plan.candidate_forms);
  const auto decisions = LoadDecisionLog(o.log);
  const AppliedDecisions applied = ApplyDecisions(pool, decisions);
  for (const MappingDecision& d : applied.skipped) {
    std::cerr << "skipped decision for '" << d.key.form << "' in '"
              << d.key.letter_id << "': not in plan\n";
  }
  const auto records = ClassifyAll(pool, decisions, corpus, lex, o.window);
  std::ostringstream out;
  WriteRecords(records, out);
  Emit(o.out, out.str());
  if (!o.no_entry_out.empty()) {
    std::ostringstream ne;
    for (const CandidateKey& k : NoEntryCandidates(applied, pool)) {
      ne << json{{"form", k.form}, {"letter_id", k.letter_id}}.dump() << '\n';
    }
    Emit(o.no_entry_out, ne.str());
  }
  std::cerr << records.size() << " records, " << CountTypes(records) << " types\n";
  return 0;
}

int Report(const Options& o) {
  const Corpus corpus = LoadCorpusPath(o.corpus);
  const auto records = LoadRecords(o.records);
  LetterFilter scope;
  std::set<std::string> letters;
  if (!o.plan.empty()) {
    const SamplingPlan plan = LoadPlan(o.plan);
    letters.insert(plan.letters.begin(), plan.letters.end());
    scope = [&](const Letter& l) { return letters.count(l.id) > 0; };
  }
  if (o.format != "tsv" && o.format != "json") {
    throw UsageError("--format must be tsv or json");
  }
  if (!o.axis.empty()) {
    auto axis = ParseAxis(o.axis);
    if (!axis) throw UsageError("unknown axis '" + o.axis + "'");
    const FrequencyReport r =
        ComputeFrequencyReport(records, corpus, *axis, scope, o.age_split);
    Emit(o.out, o.format == "tsv" ? FrequencyReportToTsv(r)
                                  : FrequencyReportToJson(r) + "\n");
    return 0;
  }
  if (!o.breakdown.empty()) {
    auto dim = ParseDimension(o.breakdown);
    if (!dim) throw UsageError("unknown breakdown '" + o.breakdown + "'");
    const Breakdown b = ComputeBreakdown(records, *dim);
    Emit(o.out, o.format == "tsv" ? BreakdownToTsv(b)
                                  : json(b.counts).dump(2) + "\n");
    return 0;
  }
  if (o.antedatings) {
    std::ostringstream out;
    for (const NeologismRecord& r : Antedatings(records)) {
      out << r.lemma << '\t' << ToString(r.pos) << '\t' << r.form << '\t'
          << r.corpus_year << '\t' << r.attestation_year << '\t' << r.delta_years
          << '\n';
    }
    Emit(o.out, out.str());
    return 0;
  }
  Emit(o.out, FullReportJson(records, corpus, scope, {o.age_split}) + "\n");
  return 0;
}

int Run(const Options& o, const CLI::App& run) {
  PipelineConfig c = LoadConfig(o.config);
  if (run.count("--period")) c.period = OptPeriod(o.period);
  if (run.count("--target-words")) c.target_words = o.target_words;
  if (run.count("--seed")) c.seed = o.seed;
  if (run.count("--window")) c.window_years = o.window;
  if (run.count("--out-dir")) c.out_dir = o.out_dir;
  PipelineOptions opts;
  opts.dry_run = o.dry_run;
  opts.force = o.force;
  RunPipeline(c, opts, std::cout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Neologism detection in historical letter corpora"};
  app.require_subcommand(1);
  Options o;

  auto* ingest = app.add_subcommand("ingest", "Validate a corpus and write an index directory");
  ingest->add_option("corpus", o.ingest_in, "Corpus JSONL")->required();
  ingest->add_option("--period", o.period, "START:END");
  ingest->add_option("--out", o.ingest_out, "Index directory")->required();

  auto* lexicon = app.add_subcommand("lexicon", "Lexicon tools");
  lexicon->require_subcommand(1);
  auto* validate = lexicon->add_subcommand("validate", "Check a lexicon file");
  validate->add_option("file", o.lexicon)->required();
  auto* lookup = lexicon->add_subcommand("lookup", "Entries listing a variant");
  lookup->add_option("form", o.lookup_form)->required();
  lookup->add_option("--lexicon", o.lexicon)->required();

  auto* normalize = app.add_subcommand("normalize", "Rank lexicon entries for spellings");
  normalize->add_option("forms", o.forms);
  normalize->add_option("--lexicon", o.lexicon)->required();
  normalize->add_option("--k", o.k)->check(CLI::PositiveNumber);
  normalize->add_option("--max-cost", o.max_cost)->check(CLI::NonNegativeNumber);
  normalize->add_option("--rules", o.rules, "Rewrite rules JSONL");
  normalize->add_option("--in", o.in, "One form per line");
  normalize->add_option("--out", o.out, "Candidates JSONL");
  normalize->add_option("--gold", o.gold, "Evaluate against a gold TSV");

  auto* sample = app.add_subcommand("sample", "Draw a stratified sampling plan");
  sample->add_option("--corpus", o.corpus, "Index directory or corpus JSONL")->required();
  sample->add_option("--period", o.period, "START:END");
  sample->add_option("--target-words", o.target_words)->required()->check(CLI::PositiveNumber);
  sample->add_option("--seed", o.seed);
  sample->add_option("--out", o.out)->required();

  auto* serve = app.add_subcommand("serve", "Run the review service");
  serve->add_option("--plan", o.plan)->required();
  serve->add_option("--log", o.log)->required();
  serve->add_option("--lexicon", o.lexicon)->required();
  serve->add_option("--corpus", o.corpus)->required();
  serve->add_option("--bind", o.bind, "host:port");
  serve->add_option("--ui", o.ui, "Static files served at /");
  serve->add_option("--context-chars", o.context_chars)->check(CLI::NonNegativeNumber);
  serve->add_option("--rules", o.rules);
  serve->add_option("--k", o.k)->check(CLI::PositiveNumber);
  serve->add_option("--max-cost", o.max_cost)->check(CLI::NonNegativeNumber);

  auto* classify = app.add_subcommand("classify", "Turn decisions into neologism records");
  classify->add_option("--plan", o.plan)->required();
  classify->add_option("--log", o.log)->required();
  classify->add_option("--lexicon", o.lexicon)->required();
  classify->add_option("--corpus", o.corpus)->required();
  classify->add_option("--window", o.window)->check(CLI::NonNegativeNumber);
  classify->add_option("--out", o.out, "Records JSONL (default stdout)");
  classify->add_option("--no-entry-out", o.no_entry_out);

  auto* report = app.add_subcommand("report", "Frequency tables and breakdowns");
  report->add_option("--records", o.records)->required();
  report->add_option("--corpus", o.corpus)->required();
  report->add_option("--plan", o.plan, "Restrict denominators to plan letters");
  auto* axis_opt = report->add_option("--axis", o.axis, "gender|rank|relationship|age");
  auto* breakdown_opt = report->add_option(
      "--breakdown", o.breakdown,
      "pos|etymology_kind|source_language|ht_level_1|ht_level_2");
  auto* ante_opt = report->add_flag("--antedatings", o.antedatings);
  axis_opt->excludes(breakdown_opt)->excludes(ante_opt);
  breakdown_opt->excludes(ante_opt);
  report->add_option("--age-split", o.age_split);
  report->add_option("--format", o.format, "tsv|json");
  report->add_option("--out", o.out);

  auto* run = app.add_subcommand("run", "Run the whole pipeline from a config file");
  run->add_option("--config", o.config)->required();
  run->add_option("--period", o.period);
  run->add_option("--target-words", o.target_words)->check(CLI::PositiveNumber);
  run->add_option("--seed", o.seed);
  run->add_option("--window", o.window)->check(CLI::NonNegativeNumber);
  run->add_option("--out-dir", o.out_dir);
  run->add_flag("--dry-run", o.dry_run, "Print the stage plan only");
  run->add_flag("--force", o.force, "Rerun up-to-date stages");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*ingest) return Ingest(o);
    if (*validate) return LexiconValidate(o);
    if (*lookup) return LexiconLookup(o);
    if (*normalize) return Normalize(o);
    if (*sample) return Sample(o);
    if (*serve) return Serve(o);
    if (*classify) return Classify(o);
    if (*report) return Report(o);
    if (*run) return Run(o, *run);
  } catch (const UsageError& e) {
    std::cerr << "neologia: " << e.what() << '\n';
    return kUsage;
  } catch (const ConfigError& e) {
    std::cerr << "neologia: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "neologia: " << e.what() << '\n';
    return kDataError;
  }
  return kUsage;
}
