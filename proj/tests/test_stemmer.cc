#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "testlens/stemmer.h"

using namespace testlens;

TEST_CASE("step examples from the algorithm description") {
  CHECK(porter_stem("caresses") == "caress");
  CHECK(porter_stem("ponies") == "poni");
  CHECK(porter_stem("ties") == "ti");
  CHECK(porter_stem("cats") == "cat");
  CHECK(porter_stem("feed") == "feed");
  CHECK(porter_stem("plastered") == "plaster");
  CHECK(porter_stem("bled") == "bled");
  CHECK(porter_stem("motoring") == "motor");
  CHECK(porter_stem("sing") == "sing");
  CHECK(porter_stem("hopping") == "hop");
  CHECK(porter_stem("falling") == "fall");
  CHECK(porter_stem("hissing") == "hiss");
  CHECK(porter_stem("filing") == "file");
  CHECK(porter_stem("sky") == "sky");
  CHECK(porter_stem("at") == "at");
}

TEST_CASE("reference vectors") {
  std::ifstream in(TESTLENS_TEST_DATA "/porter_vectors.tsv");
  REQUIRE(in.good());
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    const auto tab = line.find('\t');
    REQUIRE(tab != std::string::npos);
    const std::string word = line.substr(0, tab);
    const std::string want = line.substr(tab + 1);
    CAPTURE(word);
    CHECK(porter_stem(word) == want);
    ++n;
  }
  CHECK(n > 500);
}

TEST_CASE("stem iterates to a fixpoint and lowercases") {
  CHECK(porter_stem("agreed") == "agre");
  CHECK(stem("agreed") == "agr");
  CHECK(stem("Uploader") == "upload");
  CHECK(stem("Upload") == "upload");
  CHECK(stem("Exception") == stem("exceptions"));
  for (const char* w : {"generalizations", "agreed", "relational", "oscillators", "jobs"}) {
    CHECK(stem(stem(w)) == stem(w));
  }
}
