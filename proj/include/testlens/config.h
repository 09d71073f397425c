#ifndef TESTLENS_CONFIG_H_
#define TESTLENS_CONFIG_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace testlens {

// Settings read from a TOML file of top-level `key = value` pairs (strings,
// numbers, booleans, arrays of strings). Unknown keys, duplicate keys and
// tables are rejected. Relative paths resolve against the config file's
// directory.
//
//   lexicon = "path.json"             tagger lexicon override
//   catalog = "path.json"             pattern catalog override
//   relations = "path.json"           word relation file override
//   rules = ["R1", "R3"]              enabled lint rules (or "R1,R3")
//   collection_vocabulary = ["List"]  R4 collection tokens
//   r3_accepts_assert_false = false
//   threshold = 0.6                   rename detection threshold
//   lint_format = "text"              text | json
//   classify_format = "json"          json | csv | md
//   report_format = "md"              md | csv | json
//   jobs = 4                          worker threads for scan/lint
struct Config {
  std::optional<std::string> lexicon;
  std::optional<std::string> catalog;
  std::optional<std::string> relations;
  std::optional<std::string> rules;
  std::optional<std::vector<std::string>> collection_vocabulary;
  std::optional<bool> r3_accepts_assert_false;
  std::optional<double> threshold;
  std::optional<std::string> lint_format;
  std::optional<std::string> classify_format;
  std::optional<std::string> report_format;
  std::optional<std::size_t> jobs;
};

// `base_dir` anchors relative paths; empty leaves them as written. Throws
// InvalidInput naming the offending line.
Config parse_config(std::string_view text, const std::string& base_dir = "");

// Throws IoError or InvalidInput.
Config load_config(const std::string& path);

}  // namespace testlens

#endif  // TESTLENS_CONFIG_H_
