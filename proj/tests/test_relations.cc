#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>

#include "testlens/error.h"
#include "testlens/relations.h"
#include "testlens/rename.h"

using namespace testlens;

namespace {

// Plain recursive definition, memo-free; only for short strings.
std::size_t naive_distance(std::string_view a, std::string_view b) {
  if (a.empty()) return b.size();
  if (b.empty()) return a.size();
  const std::size_t sub = naive_distance(a.substr(1), b.substr(1)) + (a[0] == b[0] ? 0 : 1);
  const std::size_t del = naive_distance(a.substr(1), b) + 1;
  const std::size_t ins = naive_distance(a, b.substr(1)) + 1;
  return std::min({sub, del, ins});
}

TermRelation rel(std::string_view removed, std::string_view added) {
  return relate(removed, added, LexiconRelationProvider::bundled());
}

}  // namespace

TEST_CASE("edit distance") {
  CHECK(edit_distance("kitten", "sitting") == 3);
  CHECK(edit_distance("", "abc") == 3);
  CHECK(edit_distance("inkvoked", "invoked") == 1);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> len(0, 6);
  std::uniform_int_distribution<int> ch('a', 'c');
  for (int i = 0; i < 300; ++i) {
    std::string a;
    std::string b;
    for (int k = len(rng); k > 0; --k) a += static_cast<char>(ch(rng));
    for (int k = len(rng); k > 0; --k) b += static_cast<char>(ch(rng));
    CAPTURE(a);
    CAPTURE(b);
    CHECK(edit_distance(a, b) == naive_distance(a, b));
  }
}

TEST_CASE("bundled relations cover the cited pairs") {
  const auto& p = LexiconRelationProvider::bundled();
  CHECK(p.synonyms("cube").count("box"));
  CHECK(p.synonyms("box").count("cube"));
  CHECK(p.synonyms("has").count("contains"));
  CHECK(p.synonyms("all of").count("at least"));
  CHECK(p.antonyms("accept").count("reject"));
  CHECK(p.antonyms("specific").count("generic"));
  CHECK(p.hypernyms("list").count("collection"));
  CHECK(hypernym_closure(p, "list").count("container"));
  CHECK(p.in_dictionary("invoked"));
  CHECK_FALSE(p.in_dictionary("inkvoked"));
}

TEST_CASE("relation typing fixtures") {
  CHECK(rel("cube", "box") == TermRelation::kSynonym);
  CHECK(rel("generic", "specific") == TermRelation::kAntonym);
  CHECK(rel("list", "collection") == TermRelation::kGeneralization);
  CHECK(rel("test", "validate") == TermRelation::kSpecialization);
  CHECK(rel("uploader", "upload") == TermRelation::kSameStem);
  CHECK(rel("job", "jobs") == TermRelation::kPluralityChange);
  CHECK(rel("inkvoked", "invoked") == TermRelation::kSpellingFix);
  CHECK(rel("string", "strong") == TermRelation::kUnrelated);
  CHECK(rel("accept", "reject") == TermRelation::kAntonym);
}

TEST_CASE("relation files") {
  const auto p = LexiconRelationProvider::from_json(
      R"({"synonyms": [["quick", "fast"]], "hypernyms": {"sedan": ["car"], "car": ["vehicle"]},
          "phrases": [["at", "least"]]})");
  CHECK(p.synonyms("fast") == std::set<std::string>{"quick"});
  CHECK(hypernym_closure(p, "sedan") == std::set<std::string>{"car", "vehicle"});
  CHECK(relate("vehicle", "sedan", p) == TermRelation::kSpecialization);
  CHECK(p.phrases().size() == 1);
  CHECK_THROWS_AS(LexiconRelationProvider::from_json(R"({"hypernyms": {"a": ["b"], "b": ["a"]}})"),
                  InvalidInput);
  CHECK_THROWS_AS(LexiconRelationProvider::from_json(R"({"meronyms": []})"), InvalidInput);
  CHECK_THROWS_AS(LexiconRelationProvider::from_json(R"({"phrases": [["solo"]]})"),
                  InvalidInput);
  CHECK_THROWS_AS(LexiconRelationProvider::from_json("[]"), InvalidInput);
}
