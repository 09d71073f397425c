#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "testlens/cli.h"

using namespace testlens;

namespace {

namespace fs = std::filesystem;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "testlens");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = TESTLENS_TEST_DATA;

fs::path temp_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("testlens_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

}  // namespace

TEST_CASE("split and tag") {
  const Result s = cli({"split", "testStringEncryption"});
  CHECK(s.code == kExitOk);
  CHECK(s.out == "test\nString\nEncryption\n");
  const Result sj = cli({"split", "test_get", "--json"});
  const auto j = nlohmann::json::parse(sj.out);
  CHECK(j["terms"][1]["start"] == 5);
  const Result t = cli({"tag", "testParser"});
  CHECK(t.code == kExitOk);
  CHECK(t.out == "test/V Parser/N\nV N\n");
  CHECK(cli({"tag", "has space"}).code == kExitError);
}

TEST_CASE("pattern") {
  const Result p = cli({"pattern", "testGetActions", "--prefix", "2", "--catalog"});
  CHECK(p.code == kExitOk);
  CHECK(p.out == "V V\nIs and Past Principle Phrase\tV V+\tprior\n");
  const auto j = nlohmann::json::parse(cli({"pattern", "main", "--catalog", "--json"}).out);
  CHECK(j["pattern"] == "N");
  CHECK(j["catalog"][0]["name"] == "Noun Phrase");
  CHECK(cli({"pattern", "main", "--prefix", "0"}).code == kExitError);
}

TEST_CASE("usage errors exit 2") {
  CHECK(cli({}).code == kExitError);
  CHECK(cli({"frobnicate"}).code == kExitError);
  CHECK(cli({"lint"}).code == kExitError);
  CHECK(cli({"lint", kData + "/lint/clean.java", "--rules", "R7"}).code == kExitError);
  CHECK(cli({"lint", kData + "/lint/clean.java", "--format", "xml"}).code == kExitError);
  CHECK(cli({"report", "--input", kData + "/report/classified.json", "--k", "0"}).code ==
        kExitError);
  CHECK(cli({"report", "--input", kData + "/report/classified.json", "--prefix-len", "7"}).code ==
        kExitError);
  CHECK(cli({"report", "--input", kData + "/report/classified.json", "--table", "x"}).code ==
        kExitError);
  CHECK(cli({"rename", "detect", "--before", kData + "/detect/Before.java", "--after",
             kData + "/detect/After.java", "--threshold", "0"})
            .code == kExitError);
  const Result missing = cli({"scan", "/nonexistent/dir"});
  CHECK(missing.code == kExitError);
  CHECK(missing.err.find("testlens: error:") == 0);
  CHECK(cli({"--version"}).code == kExitOk);
  CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("lint exit codes and output") {
  const Result clean = cli({"lint", kData + "/lint/clean.java"});
  CHECK(clean.code == kExitOk);
  CHECK(clean.out.empty());
  const Result bad = cli({"lint", kData + "/lint/r2_violated.java"});
  CHECK(bad.code == kExitFindings);
  CHECK(bad.out.find(": warning: [R2] testUntilFalseOnEmptyPath: ") != std::string::npos);
  CHECK(bad.err.find("1 diagnostic in 1 file") != std::string::npos);
  CHECK(cli({"lint", kData + "/lint/r2_violated.java", "--rules", "R1,R3"}).code == kExitOk);
  const Result dir = cli({"lint", kData + "/lint", "--format", "json", "--jobs", "3"});
  CHECK(dir.code == kExitFindings);
  const auto j = nlohmann::json::parse(dir.out);
  CHECK(j["diagnostics"].size() == 5);
  // Same answer single-threaded.
  CHECK(cli({"lint", kData + "/lint", "--format", "json", "--jobs", "1"}).out == dir.out);
}

TEST_CASE("scan") {
  const Result r = cli({"scan", kData + "/lint/r5_satisfied.java", kData + "/not_junit.java"});
  CHECK(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["files"].size() == 2);
  const auto& f = j["files"][1]["path"].get<std::string>().ends_with("r5_satisfied.java")
                      ? j["files"][1]
                      : j["files"][0];
  CHECK(f["test_file"] == true);
  CHECK(f["methods"].size() == 2);
  CHECK(f["methods"][1]["annotations"][0] == "@Test(expected = IllegalStateException.class)");

  const fs::path dir = temp_dir("partial");
  write(dir / "Broken.java", "import org.junit.Test;\nclass B { @Test void testA() { }\n"
                             "@Test void testB() { if (x) {\n");
  const Result p = cli({"scan", dir.string()});
  CHECK(p.code == kExitOk);
  CHECK(p.err.find("Broken.java") != std::string::npos);
  const auto pj = nlohmann::json::parse(p.out);
  CHECK(pj["files"][0]["partial"] == true);
  CHECK(pj["files"][0]["methods"].size() == 1);
  fs::remove_all(dir);
}

TEST_CASE("rename detect and classify") {
  const Result d = cli({"rename", "detect", "--before", kData + "/detect/Before.java", "--after",
                        kData + "/detect/After.java"});
  CHECK(d.code == kExitOk);
  const auto j = nlohmann::json::parse(d.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["old_name"] == "testParse");
  CHECK(j[0]["new_name"] == "parsesSignedIntegers");
  CHECK(j[0]["score"] == 1.0);
  CHECK(j[1]["old_name"] == "testEmptyInput");
  CHECK(j[1]["new_name"] == "testBlankInputParsesToZero");

  // The detector's output feeds straight into classification.
  const fs::path dir = temp_dir("classify");
  write(dir / "renames.json", d.out);
  const Result c = cli({"rename", "classify", "--input", (dir / "renames.json").string(),
                        "--format", "csv"});
  CHECK(c.code == kExitOk);
  CHECK(c.out.find("testParse,parsesSignedIntegers,") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("report from a log and from classified json agree") {
  const Result a = cli({"report", "--input", kData + "/report/corpus.csv", "--table",
                        "semantic"});
  const Result b = cli({"report", "--input", kData + "/report/classified.json", "--table",
                        "semantic", "--jobs", "4"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  std::ifstream in(kData + "/report/golden_semantic.md");
  std::stringstream golden;
  golden << in.rdbuf();
  CHECK(a.out == golden.str());
}

TEST_CASE("config file and environment") {
  const fs::path dir = temp_dir("config");
  write(dir / "only_r1.toml", "rules = [\"R1\"]\nlint_format = \"json\"\n");
  write(dir / "bad.toml", "colour = 1\n");
  const std::string target = kData + "/lint/r2_violated.java";

  const Result flag = cli({"--config", (dir / "only_r1.toml").string(), "lint", target});
  CHECK(flag.code == kExitOk);
  CHECK(nlohmann::json::parse(flag.out)["diagnostics"].empty());

  ::setenv("TESTLENS_CONFIG", (dir / "only_r1.toml").c_str(), 1);
  CHECK(cli({"lint", target}).code == kExitOk);
  // Flags beat the file.
  CHECK(cli({"lint", target, "--rules", "R2"}).code == kExitFindings);
  ::setenv("TESTLENS_CONFIG", (dir / "bad.toml").c_str(), 1);
  const Result bad = cli({"lint", target});
  CHECK(bad.code == kExitError);
  CHECK(bad.err.find("line 1") != std::string::npos);
  ::unsetenv("TESTLENS_CONFIG");
  CHECK(cli({"lint", target}).code == kExitFindings);
  fs::remove_all(dir);
}
