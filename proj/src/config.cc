#include "testlens/config.h"

#include <filesystem>
#include <sstream>

#include <toml.hpp>

#include "testlens/error.h"
#include "testlens/file_util.h"

namespace testlens {

namespace {

[[noreturn]] void fail(const toml::source_region& where, const std::string& what) {
  throw InvalidInput("config line " + std::to_string(where.begin.line) + ": " + what);
}

std::string resolve(const std::string& path, const std::string& base_dir) {
  if (base_dir.empty() || path.empty()) return path;
  const std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  return (std::filesystem::path(base_dir) / p).lexically_normal().string();
}

std::string string_value(const toml::node& v, const std::string& key) {
  if (const auto s = v.value_exact<std::string>()) return *s;
  fail(v.source(), "'" + key + "' must be a string");
}

std::vector<std::string> string_array(const toml::node& v, const std::string& key) {
  const toml::array* arr = v.as_array();
  if (arr == nullptr) fail(v.source(), "'" + key + "' must be an array of strings");
  std::vector<std::string> out;
  for (const toml::node& item : *arr) {
    const auto s = item.value_exact<std::string>();
    if (!s) fail(item.source(), "'" + key + "' holds a non-string");
    out.push_back(*s);
  }
  return out;
}

std::string format_value(const toml::node& v, const std::string& key,
                         std::initializer_list<std::string_view> allowed) {
  const std::string s = string_value(v, key);
  for (std::string_view a : allowed) {
    if (s == a) return s;
  }
  std::string list;
  for (std::string_view a : allowed) list += (list.empty() ? "" : "|") + std::string(a);
  fail(v.source(), "'" + key + "' must be one of " + list);
}

}  // namespace

Config parse_config(std::string_view text, const std::string& base_dir) {
  toml::table doc;
  try {
    doc = toml::parse(text);
  } catch (const toml::parse_error& e) {
    fail(e.source(), std::string(e.description()));
  }
  Config c;
  for (const auto& [k, v] : doc) {
    const std::string key(k.str());
    if (v.is_table() || v.is_array_of_tables()) fail(v.source(), "tables are not supported");
    if (key == "lexicon" || key == "catalog" || key == "relations") {
      std::string path = resolve(string_value(v, key), base_dir);
      (key == "lexicon" ? c.lexicon : key == "catalog" ? c.catalog : c.relations) = path;
    } else if (key == "rules") {
      if (v.is_array()) {
        std::string joined;
        for (const std::string& r : string_array(v, key)) joined += (joined.empty() ? "" : ",") + r;
        c.rules = joined;
      } else if (v.is_string()) {
        c.rules = string_value(v, key);
      } else {
        fail(v.source(), "'rules' must be a string or array of strings");
      }
    } else if (key == "collection_vocabulary") {
      c.collection_vocabulary = string_array(v, key);
    } else if (key == "r3_accepts_assert_false") {
      const auto b = v.value_exact<bool>();
      if (!b) fail(v.source(), "'" + key + "' must be true or false");
      c.r3_accepts_assert_false = *b;
    } else if (key == "threshold") {
      if (!v.is_number()) fail(v.source(), "'threshold' must be a number");
      const double t = *v.value<double>();
      if (!(t > 0.0 && t <= 1.0)) fail(v.source(), "'threshold' must be in (0, 1]");
      c.threshold = t;
    } else if (key == "lint_format") {
      c.lint_format = format_value(v, key, {"text", "json"});
    } else if (key == "classify_format") {
      c.classify_format = format_value(v, key, {"json", "csv", "md"});
    } else if (key == "report_format") {
      c.report_format = format_value(v, key, {"md", "csv", "json"});
    } else if (key == "jobs") {
      const auto j = v.value_exact<int64_t>();
      if (!j || *j < 1) fail(v.source(), "'jobs' must be a positive integer");
      c.jobs = static_cast<std::size_t>(*j);
    } else {
      fail(k.source(), "unknown key '" + key + "'");
    }
  }
  return c;
}

Config load_config(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_config(text, std::filesystem::path(path).parent_path().string());
  } catch (const InvalidInput& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

}  // namespace testlens
