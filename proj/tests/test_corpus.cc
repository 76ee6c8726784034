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

#include <sstream>
#include <string>

#include "doctest.h"
#include "helpers.h"
#include "neologia/corpus.h"

namespace neologia {
namespace {

using testing::DataPath;

std::string Surfaces(const std::vector<Token>& tokens) {
  std::string out;
  for (const Token& t : tokens) {
    if (!out.empty()) out += '|';
    out += t.surface;
    if (t.flags & kEditorial) out += "*";
  }
  return out;
}

TEST_CASE("tokenize strips punctuation and keeps inner hyphens") {
  const auto toks = Tokenize("My Lord, the packet-boat is come; tee & coffee.");
  CHECK(Surfaces(toks) == "My|Lord|the|packet-boat|is|come|tee|&|coffee");
  CHECK(toks[0].offset == 0);
  CHECK(toks[1].offset == 3);
  CHECK(toks[3].offset == 13);
}

TEST_CASE("tokenize offsets count code points") {
  const auto toks = Tokenize("ſir – yours");
  REQUIRE(toks.size() == 2);
  CHECK(toks[0].surface == "ſir");
  CHECK(toks[1].offset == 6);
}

TEST_CASE("tokenize marks editorial spans") {
  const auto toks = Tokenize("I [am sure] you [illegible] know");
  CHECK(Surfaces(toks) == "I|am*|sure*|you|illegible*|know");
  CHECK(Surfaces(Tokenize("y^e^ ^ man")) == "ye|man");
}

TEST_CASE("token exclusion flags") {
  Token t{"Paris", 0, kProperNoun};
  CHECK(t.excluded());
  t.flags = kEditorial;
  CHECK_FALSE(t.excluded());
}

TEST_CASE("period parsing") {
  CHECK(ParsePeriod("1640:1660") == Period{1640, 1660});
  CHECK(ToString(Period{1760, 1780}) == "1760:1780");
  CHECK_THROWS_AS(ParsePeriod("1660:1640"), std::invalid_argument);
  CHECK_THROWS_AS(ParsePeriod("soon"), std::invalid_argument);
}

const char* kSmall =
    R"({"type":"person","id":"a","name":"A","gender":"female","rank":"gentry","birth_year":1600}
{"type":"person","id":"b","name":"B","gender":"male","rank":"clergy"}
{"type":"letter","id":"L2","collection":"C","year":1650,"sender":"a","recipient":"b","relationship":"close_friends","text":"Deare Sir, the tee"}
{"type":"letter","id":"L1","collection":"C","year":1645,"sender":"b","recipient":"a","relationship":"nuclear_family","tokens":[{"s":"Sir","o":0},{"s":"Paris","o":4,"f":["proper_noun"]}]}
)";

TEST_CASE("parse corpus sorts letters and infers the period") {
  std::istringstream in(kSmall);
  const Corpus c = ParseCorpusStream(in);
  REQUIRE(c.letters().size() == 2);
  CHECK(c.letters()[0].id == "L1");
  CHECK(c.period() == Period{1645, 1650});
  CHECK(c.person("a").birth_year == 1600);
  CHECK(c.letters()[0].tokens[1].flags == kProperNoun);
  CHECK(c.letters()[1].tokens.size() == 4);
  CHECK(WriterAge(c, c.letters()[1]) == 50);
  CHECK_FALSE(WriterAge(c, c.letters()[0]).has_value());
  CHECK(RunningWords(c) == 6);
  CHECK(RunningWords(c, [](const Letter& l) { return l.year > 1646; }) == 4);
  CHECK(DistinctWordForms(c, false) == std::set<std::string>{"deare", "sir", "the", "tee"});
  CHECK(DistinctWordForms(c, true).count("paris"));
}

int ErrorLine(const std::string& text) {
  std::istringstream in(text);
  try {
    ParseCorpusStream(in);
  } catch (const CorpusError& e) {
    return e.line();
  }
  return 0;
}

TEST_CASE("parse errors carry line numbers") {
  const std::string p =
      R"({"type":"person","id":"a","name":"A","gender":"male","rank":"gentry"})" "\n";
  CHECK(ErrorLine(p + "{oops\n") == 2);
  CHECK(ErrorLine(p + p) == 2);
  CHECK(ErrorLine(p + R"({"type":"person","id":"b","name":"B","gender":"x","rank":"gentry"})") == 2);
  CHECK(ErrorLine(p + R"({"type":"letter","id":"L","collection":"C","year":1650,"sender":"a","recipient":"zz","relationship":"close_friends","text":"x"})") == 2);
  CHECK(ErrorLine(p + R"({"type":"letter","id":"L","collection":"C","year":1650,"sender":"a","recipient":"a","relationship":"friends","text":"x"})") == 2);
  CHECK(ErrorLine(p + R"({"type":"letter","id":"L","collection":"C","year":1650,"sender":"a","recipient":"a","relationship":"close_friends","tokens":[{"s":"a b","o":0}]})") == 2);
  CHECK(ErrorLine(p + R"({"type":"memo"})") == 2);
}

TEST_CASE("period filter rejects letters outside it") {
  std::istringstream in(kSmall);
  CHECK_THROWS_AS(ParseCorpusStream(in, Period{1646, 1660}), CorpusError);
}

TEST_CASE("letters before the writer's birth are rejected") {
  std::istringstream in(
      R"({"type":"person","id":"a","name":"A","gender":"male","rank":"gentry","birth_year":1700}
{"type":"letter","id":"L","collection":"C","year":1650,"sender":"a","recipient":"a","relationship":"close_friends","text":"x"})");
  CHECK_THROWS_AS(ParseCorpusStream(in), CorpusError);
}

TEST_CASE("serialize round trip") {
  std::istringstream in(kSmall);
  const Corpus c = ParseCorpusStream(in);
  std::stringstream buf;
  SerializeCorpus(c, buf);
  CHECK(ParseCorpusStream(buf, c.period()) == c);
}

TEST_CASE("fixture corpora") {
  const Corpus c17 = ParseCorpus(DataPath("ceec17.jsonl"));
  CHECK(c17.letters().size() == 75);
  CHECK(RunningWords(c17) == 36265);
  CHECK(c17.period() == Period{1640, 1660});
  const Corpus c18 = ParseCorpus(DataPath("ceec18.jsonl"));
  CHECK(c18.letters().size() == 98);
  CHECK(RunningWords(c18) == 47864);
  CHECK(c18.period() == Period{1760, 1780});
}

}  // namespace
}  // namespace neologia
