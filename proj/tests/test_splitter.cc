#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "testlens/error.h"
#include "testlens/splitter.h"

using namespace testlens;

namespace {

std::vector<std::string> texts(const TermSequence& ts) {
  std::vector<std::string> out;
  for (const Term& t : ts.terms()) out.push_back(t.text);
  return out;
}

using V = std::vector<std::string>;

std::string random_identifier(std::mt19937& rng) {
  static const std::string kAlphabet =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_$";
  std::uniform_int_distribution<std::size_t> len(1, 24);
  std::uniform_int_distribution<std::size_t> pick(0, kAlphabet.size() - 1);
  while (true) {
    std::string s;
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) s += kAlphabet[pick(rng)];
    if (is_valid_identifier(s)) return s;
  }
}

bool has_digit(const std::string& s) {
  return s.find_first_of("0123456789") != std::string::npos;
}

bool has_letter(const std::string& s) {
  for (char c : s) {
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("basic splits") {
  CHECK(texts(split("testStringEncryption")) == V{"test", "String", "Encryption"});
  CHECK(texts(split("x")) == V{"x"});
  CHECK(texts(split("test15_6_5")) == V{"test", "15", "6", "5"});
}

TEST_CASE("acronym runs end one capital early") {
  // Hand application of the boundary rules.
  CHECK(texts(split("HTTPSServer")) == V{"HTTPS", "Server"});
  CHECK(texts(split("IGNOREtestHttpsCheckOut")) ==
        V{"IGNORE", "test", "Https", "Check", "Out"});
  CHECK(texts(split("parseXMLFile")) == V{"parse", "XML", "File"});
  CHECK(texts(split("ABC")) == V{"ABC"});
}

TEST_CASE("separators are dropped and spans skip them") {
  const TermSequence ts = split("test_get_NotExisting");
  CHECK(texts(ts) == V{"test", "get", "Not", "Existing"});
  CHECK(ts[1].span == Span{5, 8});
  CHECK(ts[2].span == Span{9, 12});
  CHECK(texts(split("a$$b__c")) == V{"a", "b", "c"});
  CHECK(texts(split("__init")) == V{"init"});
}

TEST_CASE("same-case runs are never split by dictionary") {
  CHECK(texts(split("deleteindexNotExists")) == V{"deleteindex", "Not", "Exists"});
}

TEST_CASE("invalid identifiers are rejected") {
  CHECK_THROWS_AS(split(""), InvalidInput);
  CHECK_THROWS_AS(split("has space"), InvalidInput);
  CHECK_THROWS_AS(split("dash-ed"), InvalidInput);
  CHECK_THROWS_AS(split("___"), InvalidInput);
  CHECK_THROWS_AS(split("caf\xc3\xa9"), InvalidInput);
}

TEST_CASE("normalize lowercases and keeps digits") {
  CHECK(normalize("String") == "string");
  CHECK(normalize("15") == "15");
  CHECK(normalize("IGNORE") == "ignore");
}

TEST_CASE("properties over random identifiers") {
  std::mt19937 rng(20211019);
  for (int iter = 0; iter < 2000; ++iter) {
    const std::string id = random_identifier(rng);
    CAPTURE(id);
    const TermSequence ts = split(id);
    REQUIRE_FALSE(ts.empty());
    // Reconstruction.
    CHECK(ts.reconstruct() == id);
    std::size_t prev_end = 0;
    std::string skipped;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const Term& t = ts[i];
      CHECK_FALSE(t.text.empty());
      CHECK(t.span.start >= prev_end);
      CHECK(t.span.end > t.span.start);
      CHECK(id.substr(t.span.start, t.span.size()) == t.text);
      skipped += id.substr(prev_end, t.span.start - prev_end);
      prev_end = t.span.end;
      // Digit isolation.
      CHECK_FALSE((has_digit(t.text) && has_letter(t.text)));
      // Idempotence.
      CHECK(texts(split(t.text)) == V{t.text});
    }
    skipped += id.substr(prev_end);
    for (char c : skipped) CHECK((c == '_' || c == '$'));
    // Determinism.
    CHECK(split(id) == ts);
  }
}
