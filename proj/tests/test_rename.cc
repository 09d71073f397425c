#include <doctest.h>

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "testlens/error.h"
#include "testlens/relations.h"
#include "testlens/rename.h"

using namespace testlens;

namespace {

RenameEvent ev(std::string a, std::string b) { return RenameEvent{std::move(a), std::move(b), {}, {}}; }

FormCategory form(std::string a, std::string b) { return classify_form(ev(a, b)); }

SemanticCategory sem(std::string a, std::string b) {
  return classify_semantics(ev(a, b), LexiconRelationProvider::bundled());
}

std::vector<std::string> texts(const std::vector<DiffTerm>& ts) {
  std::vector<std::string> out;
  for (const DiffTerm& t : ts) out.push_back(t.text);
  return out;
}

using V = std::vector<std::string>;
using P = std::vector<std::pair<std::string, std::string>>;

}  // namespace

TEST_CASE("category names round-trip") {
  CHECK(to_string(FormCategory::kReordering) == "Reordering");
  CHECK(parse_semantic_category("Broaden") == SemanticCategory::kBroaden);
  CHECK(parse_term_relation("PluralityChange") == TermRelation::kPluralityChange);
  CHECK_FALSE(parse_form_category("simple").has_value());
}

TEST_CASE("event validation") {
  CHECK_NOTHROW(ev("a", "A").validate());
  CHECK_THROWS_AS(ev("same", "same").validate(), InvalidInput);
  CHECK_THROWS_AS(ev("", "x").validate(), InvalidInput);
  CHECK_THROWS_AS(ev("x", "has space").validate(), InvalidInput);
}

TEST_CASE("term diff") {
  const TermDiff d = diff_terms(split("getEmployeeName"), split("testEmployeeLastName"));
  CHECK(texts(d.added) == V{"test", "last"});
  CHECK(texts(d.removed) == V{"get"});
  CHECK(texts(d.preserved) == V{"employee", "name"});
  const TermDiff e = diff_terms(split("findAllWithGivenIds"), split("findAllWithIds"));
  CHECK(e.added.empty());
  CHECK(texts(e.removed) == V{"given"});
  const TermDiff f = diff_terms(split("abc"), split("ABC"));
  CHECK(f.added.empty());
  CHECK(f.removed.empty());
  // Multiset, not set.
  const TermDiff g = diff_terms(split("testTestA"), split("testA"));
  CHECK(texts(g.removed) == V{"test"});
}

TEST_CASE("content diff drops digits and joins phrases") {
  const auto& phrases = LexiconRelationProvider::bundled().phrases();
  const TermDiff d = content_diff(split("hasAllOfItems"), split("hasAtLeastItems2"), phrases);
  CHECK(texts(d.added) == V{"at least"});
  CHECK(texts(d.removed) == V{"all of"});
  CHECK(d.added[0].index == 1);
}

TEST_CASE("form categories") {
  CHECK(form("test_13", "test13") == FormCategory::kFormatting);
  CHECK(form("testparser", "testParser") == FormCategory::kFormatting);
  CHECK(form("test15_6_5", "test_15_6") == FormCategory::kFormatting);
  CHECK(form("parserTest", "testParser") == FormCategory::kReordering);
  CHECK(form("testStringEncryption", "testStrongEncryption") == FormCategory::kSimple);
  CHECK(form("testPinnedExternals", "pinnedExternals") == FormCategory::kSimple);
  CHECK(form("testLog", "testEigenSingularValues") == FormCategory::kComplex);
  CHECK(form("getEmployeeName", "testEmployeeLastName") == FormCategory::kComplex);
}

TEST_CASE("semantic categories") {
  CHECK(sem("testPinnedExternals", "pinnedExternals") == SemanticCategory::kBroaden);
  CHECK(sem("shouldAcceptRaxProtocols", "shouldRejectRaxProtocols") == SemanticCategory::kChange);
  CHECK(sem("test_13", "test13") == SemanticCategory::kPreserve);
  CHECK(sem("testLog", "testEigenSingularValues") == SemanticCategory::kChange);
  CHECK(sem("boundingCube", "boundingBox") == SemanticCategory::kPreserve);
  CHECK(sem("enqueueJob", "enqueueJobs") == SemanticCategory::kPreserve);
  CHECK(sem("parserTest", "testParser") == SemanticCategory::kPreserve);
  CHECK(sem("listContains", "collectionContains") == SemanticCategory::kBroaden);
  CHECK(sem("testParser", "validateParser") == SemanticCategory::kNarrow);
  CHECK(sem("testParser", "testXmlParser") == SemanticCategory::kNarrow);
  CHECK(sem("testParser", "testParserTwice") == SemanticCategory::kAdd);
  CHECK(sem("testXmlParser", "testParser") == SemanticCategory::kBroaden);
  CHECK(sem("testParserTwice", "testParser") == SemanticCategory::kRemove);
}

TEST_CASE("term pairs") {
  CHECK(term_pairs(ev("getEmployeeName", "testEmployeeLastName")) ==
        P{{"test", "get"}, {"last", "get"}});
  CHECK(term_pairs(ev("abc", "ABC")).empty());
  CHECK(term_pairs(ev("testHasItem", "testContainsItem")) == P{{"contains", "has"}});
}

TEST_CASE("classification carries relations per pair") {
  const RenameClassification c =
      RenameClassifier::bundled().classify(ev("getEmployeeName", "testEmployeeLastName"));
  REQUIRE(c.pairs.size() == 2);
  CHECK(c.pairs[0].relation == TermRelation::kUnrelated);
  CHECK(c.pairs[1].relation == TermRelation::kUnrelated);
  CHECK(c.added == V{"test", "last"});
  CHECK(c.removed == V{"get"});
}

TEST_CASE("properties over random renames") {
  const std::vector<std::string> words = {"test", "get", "Parser", "File", "all",  "of",
                                          "Item", "list", "Box",   "cube", "Jobs", "7"};
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::uniform_int_distribution<int> len(1, 5);
  std::uniform_int_distribution<int> coin(0, 1);
  const auto make = [&] {
    std::string s;
    for (int n = len(rng); n > 0; --n) {
      if (!s.empty() && coin(rng)) s += "_";
      s += words[pick(rng)];
    }
    return s;
  };
  const auto& provider = LexiconRelationProvider::bundled();
  for (int iter = 0; iter < 500; ++iter) {
    const std::string a = make();
    const std::string b = make();
    if (a == b) continue;
    CAPTURE(a);
    CAPTURE(b);
    const RenameClassification c = RenameClassifier::bundled().classify(ev(a, b));
    CHECK(c.pairs.size() == c.added.size() * c.removed.size());
    CHECK(term_pairs(ev(a, b)).size() == c.pairs.size());
    if (c.form == FormCategory::kFormatting) CHECK(c.semantics == SemanticCategory::kPreserve);
    // Formatting-only perturbation of a: toggle separators and first-letter case.
    std::string fa;
    for (char ch : a) {
      if (ch != '_') fa += ch;
    }
    fa = "_" + fa;
    if (fa != a) {
      CHECK(classify_form(ev(a, fa)) == FormCategory::kFormatting);
      CHECK(classify_semantics(ev(a, fa), provider) == SemanticCategory::kPreserve);
    }
  }
}

TEST_CASE("relation symmetry") {
  const auto& p = LexiconRelationProvider::bundled();
  const std::vector<std::string> words = {"cube", "box", "list", "collection", "test",
                                          "validate", "has", "contains", "accept", "reject",
                                          "container", "check", "verify"};
  for (const auto& a : words) {
    for (const auto& b : words) {
      if (a == b) continue;
      CAPTURE(a);
      CAPTURE(b);
      CHECK((relate(a, b, p) == TermRelation::kSynonym) ==
            (relate(b, a, p) == TermRelation::kSynonym));
      CHECK((relate(a, b, p) == TermRelation::kSpecialization) ==
            (relate(b, a, p) == TermRelation::kGeneralization));
    }
  }
}
