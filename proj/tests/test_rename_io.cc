#include <doctest.h>

#include <string>
#include <vector>

#include "testlens/csv.h"
#include "testlens/error.h"
#include "testlens/rename.h"
#include "testlens/rename_io.h"

using namespace testlens;

TEST_CASE("csv reader") {
  const auto rows = parse_csv("a,b\r\n\"x,y\",\"say \"\"hi\"\"\"\n\n\"multi\nline\",z\n");
  REQUIRE(rows.size() == 3);
  CHECK(rows[1] == CsvRow{"x,y", "say \"hi\""});
  CHECK(rows[2] == CsvRow{"multi\nline", "z"});
  CHECK(csv_line({"plain", "a,b", "q\"q"}) == "plain,\"a,b\",\"q\"\"q\"\n");
  CHECK_THROWS_AS(parse_csv("\"open"), InvalidInput);
}

TEST_CASE("csv rename logs") {
  const auto events = parse_rename_csv(
      "commit,new_name,old_name,file\n"
      "abc123,testStrongEncryption,testStringEncryption,src/T.java\n"
      ",pinnedExternals,testPinnedExternals,\n");
  REQUIRE(events.size() == 2);
  CHECK(events[0].old_name == "testStringEncryption");
  CHECK(events[0].new_name == "testStrongEncryption");
  CHECK(events[0].file == "src/T.java");
  CHECK(events[0].commit == "abc123");
  CHECK_FALSE(events[1].file.has_value());
  CHECK_FALSE(events[1].commit.has_value());

  const auto minimal = parse_rename_csv("old_name,new_name\na,b\n");
  REQUIRE(minimal.size() == 1);
  CHECK_FALSE(minimal[0].file.has_value());

  CHECK_THROWS_AS(parse_rename_csv(""), InvalidInput);
  CHECK_THROWS_AS(parse_rename_csv("old_name\na\n"), InvalidInput);
  CHECK_THROWS_AS(parse_rename_csv("old_name,new_name,author\na,b,c\n"), InvalidInput);
  CHECK_THROWS_AS(parse_rename_csv("old_name,new_name,old_name\na,b,c\n"), InvalidInput);
  CHECK_THROWS_AS(parse_rename_csv("old_name,new_name\na\n"), InvalidInput);
}

TEST_CASE("json rename logs") {
  const auto events = parse_rename_json(
      R"([{"old_name": "a", "new_name": "b", "commit": null, "score": 0.75},
          {"old_name": "c", "new_name": "d", "file": "F.java"}])");
  REQUIRE(events.size() == 2);
  CHECK_FALSE(events[0].commit.has_value());
  CHECK(events[1].file == "F.java");
  CHECK_THROWS_AS(parse_rename_json("{}"), InvalidInput);
  CHECK_THROWS_AS(parse_rename_json("[1]"), InvalidInput);
  CHECK_THROWS_AS(parse_rename_json(R"([{"old_name": "a"}])"), InvalidInput);
  CHECK_THROWS_AS(parse_rename_json(R"([{"old_name": "a", "new_name": 3}])"), InvalidInput);
  CHECK_THROWS_AS(parse_rename_json(R"([{"old_name": "a", "new_name": "b", "x": 1}])"),
                  InvalidInput);
  CHECK_THROWS_AS(parse_rename_json("[{"), InvalidInput);
}

TEST_CASE("event json") {
  const RenameEvent e{"a", "b", std::string("F.java"), std::nullopt};
  const auto j = event_to_json(e);
  CHECK(j["old_name"] == "a");
  CHECK(j["file"] == "F.java");
  CHECK(j["commit"].is_null());
  CHECK(parse_rename_json("[" + j.dump() + "]")[0] == e);
}

TEST_CASE("classified records round-trip") {
  const RenameClassifier& cls = RenameClassifier::bundled();
  for (const auto& [a, b] : std::vector<std::pair<std::string, std::string>>{
           {"getEmployeeName", "testEmployeeLastName"},
           {"test_13", "test13"},
           {"hasAllOfItems", "hasAtLeastItems"},
           {"listContains", "collectionContains"},
           {"testParserTwice", "testParser"}}) {
    CAPTURE(a);
    const RenameClassification c = cls.classify(RenameEvent{a, b, std::nullopt, "c1"});
    const auto j = classification_to_json(c);
    const RenameClassification back = classification_from_json(j);
    CHECK(back.event == c.event);
    CHECK(back.old_tagged == c.old_tagged);
    CHECK(back.new_tagged == c.new_tagged);
    CHECK(back.form == c.form);
    CHECK(back.semantics == c.semantics);
    CHECK(back.added == c.added);
    CHECK(back.removed == c.removed);
    CHECK(back.pairs == c.pairs);
    CHECK(classification_to_json(back) == j);
  }
}

TEST_CASE("classified record errors") {
  const auto good = classification_to_json(
      RenameClassifier::bundled().classify(RenameEvent{"testLog", "testEigen", {}, {}}));
  auto bad = good;
  bad["form"] = "Tiny";
  CHECK_THROWS_AS(classification_from_json(bad), InvalidInput);
  bad = good;
  bad["old_pattern"] = "V";
  CHECK_THROWS_AS(classification_from_json(bad), InvalidInput);
  bad = good;
  bad["pairs"] = nlohmann::json::array();
  CHECK_THROWS_AS(classification_from_json(bad), InvalidInput);
  bad = good;
  bad["pairs"][0]["relation"] = "Cousin";
  CHECK_THROWS_AS(classification_from_json(bad), InvalidInput);
  CHECK_THROWS_AS(parse_classified_json("{}"), InvalidInput);
}

TEST_CASE("rendering") {
  const std::vector<RenameClassification> items = {RenameClassifier::bundled().classify(
      RenameEvent{"getEmployeeName", "testEmployeeLastName", std::nullopt, std::nullopt})};
  const std::string csv = render_classifications(items, "csv");
  const auto rows = parse_csv(csv);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].front() == "old_name");
  CHECK(rows[1][4] == "Complex");
  CHECK(rows[1][10] == "test>get:Unrelated;last>get:Unrelated");
  const std::string md = render_classifications(items, "md");
  CHECK(md.find("| getEmployeeName | testEmployeeLastName | V NM N | V NM NM N |") !=
        std::string::npos);
  CHECK(parse_classified_json(render_classifications(items, "json")).size() == 1);
  CHECK_THROWS_AS(render_classifications(items, "xml"), UsageError);
}
