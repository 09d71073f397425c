#include <doctest.h>

#include <random>
#include <string>

#include "testlens/error.h"
#include "testlens/lexicon.h"
#include "testlens/patterns.h"
#include "testlens/pos_tag.h"
#include "testlens/tagger.h"

using namespace testlens;

namespace {

std::string pattern(std::string_view name) {
  return pattern_of(tag_identifier(name, Lexicon::bundled())).to_string();
}

std::vector<PosTag> tags(std::initializer_list<const char*> names) {
  std::vector<PosTag> out;
  for (const char* n : names) out.push_back(*parse_pos_tag(n));
  return out;
}

}  // namespace

TEST_CASE("tag set is closed at ten values") {
  CHECK(kAllPosTags.size() == 10);
  for (PosTag t : kAllPosTags) CHECK(parse_pos_tag(to_string(t)) == t);
  CHECK_FALSE(parse_pos_tag("ADJ").has_value());
}

TEST_CASE("annotated names") {
  CHECK(pattern("testStringEncryption") == "V NM N");
  CHECK(pattern("testParser") == "V N");
  CHECK(pattern("setup") == "V");
  CHECK(pattern("main") == "N");
  CHECK(pattern("projectClosed") == "N V");
  CHECK(pattern("testReadFileFromClasspath") == "V V N P N");
  CHECK(pattern("frobnicate") == "N");
}

TEST_CASE("term/TAG rendering") {
  CHECK(tag_identifier("testParser", Lexicon::bundled()).to_string() == "test/V Parser/N");
}

TEST_CASE("adverbs and determiners inside names") {
  const TaggedName a = tag_identifier("test_get_NotExisting", Lexicon::bundled());
  CHECK(a.tags[2] == PosTag::kVerbModifier);
  const TaggedName b = tag_identifier("findAllWithGivenIds", Lexicon::bundled());
  CHECK(b.tags[1] == PosTag::kDeterminer);
}

TEST_CASE("digits carry D and nothing else does") {
  const TaggedName t = tag_identifier("test15_6_5", Lexicon::bundled());
  CHECK(GrammarPattern(t.tags).to_string() == "V D D D");
}

TEST_CASE("verb/noun ambiguity resolves by position") {
  // "check" is both; verb first, noun later.
  CHECK(pattern("checkState") == "V N");
  CHECK(pattern("testCheck") == "V N");
}

TEST_CASE("noun run rewrite") {
  CHECK(noun_run_rewrite(tags({"V", "N", "N", "N"})) == tags({"V", "NM", "NM", "N"}));
  CHECK(noun_run_rewrite(tags({"V", "N"})) == tags({"V", "N"}));
  CHECK(noun_run_rewrite(tags({"N", "P", "N"})) == tags({"N", "P", "N"}));
  CHECK(noun_run_rewrite(tags({"NPL", "N"})) == tags({"NM", "N"}));
  CHECK(noun_run_rewrite(tags({"N", "NPL"})) == tags({"NM", "NPL"}));
}

TEST_CASE("empty input is rejected") {
  CHECK_THROWS_AS(tag(TermSequence(), Lexicon::bundled()), InvalidInput);
}

TEST_CASE("invariants over random word sequences") {
  const Lexicon& lex = Lexicon::bundled();
  const std::vector<std::string> words = {"test", "get",  "of",  "the",   "and", "it",
                                          "not",  "file", "files", "12", "closed", "all",
                                          "parser", "status", "from", "by"};
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::uniform_int_distribution<int> len(1, 7);
  for (int iter = 0; iter < 1000; ++iter) {
    std::string name;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
      std::string w = words[pick(rng)];
      if (i > 0) name += "_";
      name += w;
    }
    CAPTURE(name);
    const TaggedName t = tag_identifier(name, lex);
    REQUIRE(t.tags.size() == t.terms.size());
    for (std::size_t i = 0; i < t.tags.size(); ++i) {
      const std::string w = normalize(t.terms[i].text);
      CHECK((t.tags[i] == PosTag::kDigit) == is_all_digits(w));
      if (lex.prepositions.count(w)) CHECK(t.tags[i] == PosTag::kPreposition);
      if (lex.determiners.count(w)) CHECK(t.tags[i] == PosTag::kDeterminer);
      if (lex.conjunctions.count(w)) CHECK(t.tags[i] == PosTag::kConjunction);
      if (lex.pronouns.count(w)) CHECK(t.tags[i] == PosTag::kPronoun);
      if (i > 0) CHECK_FALSE((is_noun_like(t.tags[i - 1]) && is_noun_like(t.tags[i])));
    }
    CHECK(tag_identifier(name, lex) == t);
  }
}

TEST_CASE("bundled lexicon satisfies its invariants") {
  const Lexicon& lex = Lexicon::bundled();
  CHECK_NOTHROW(lex.validate());
  for (const char* w : {"not", "when", "exactly"}) CHECK(lex.adverbs.count(w));
  for (const char* w : {"the", "no", "all"}) CHECK(lex.determiners.count(w));
}

TEST_CASE("lexicon overrides") {
  const Lexicon lex = Lexicon::from_json(R"({"verbs": ["frobnicate"]})", Lexicon::bundled());
  CHECK(lex.verbs == std::set<std::string>{"frobnicate"});
  CHECK(lex.prepositions == Lexicon::bundled().prepositions);
  CHECK(pattern_of(tag_identifier("frobnicateWidget", lex)).to_string() == "V N");
  CHECK_THROWS_AS(Lexicon::from_json(R"({"nouns": []})", Lexicon::bundled()), InvalidInput);
  CHECK_THROWS_AS(Lexicon::from_json(R"({"verbs": ["Upper"]})", Lexicon::bundled()),
                  InvalidInput);
  CHECK_THROWS_AS(Lexicon::from_json(R"({"pronouns": ["the"]})", Lexicon::bundled()),
                  InvalidInput);
  CHECK_THROWS_AS(Lexicon::from_json(R"({"adverbs": ["quietly"]})", Lexicon::bundled()),
                  InvalidInput);
  CHECK_THROWS_AS(Lexicon::from_json("{", Lexicon::bundled()), InvalidInput);
}

TEST_CASE("past participles of lexicon verbs") {
  const Lexicon& lex = Lexicon::bundled();
  CHECK(lex.is_verb("closed"));
  CHECK(lex.is_verb("invoked"));
  CHECK_FALSE(lex.is_verb("frobnicated"));
}
