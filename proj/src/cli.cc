#include "testlens/cli.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <optional>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "testlens/config.h"
#include "testlens/error.h"
#include "testlens/extraction.h"
#include "testlens/file_util.h"
#include "testlens/lexicon.h"
#include "testlens/lint.h"
#include "testlens/patterns.h"
#include "testlens/relations.h"
#include "testlens/rename.h"
#include "testlens/rename_io.h"
#include "testlens/renamedetect.h"
#include "testlens/report.h"
#include "testlens/tagger.h"

namespace testlens {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

Config effective_config(const std::optional<std::string>& flag) {
  if (flag) return load_config(*flag);
  const char* env = std::getenv("TESTLENS_CONFIG");
  if (env != nullptr && *env != '\0') return load_config(env);
  return {};
}

Lexicon lexicon_for(const std::optional<std::string>& flag, const Config& config) {
  if (flag) return Lexicon::load_file(*flag);
  if (config.lexicon) return Lexicon::load_file(*config.lexicon);
  return Lexicon::bundled();
}

Catalog catalog_for(const std::optional<std::string>& flag, const Config& config) {
  if (flag) return load_catalog(*flag);
  if (config.catalog) return load_catalog(*config.catalog);
  return bundled_catalog();
}

LexiconRelationProvider relations_for(const std::optional<std::string>& flag,
                                      const Config& config) {
  if (flag) return LexiconRelationProvider::load_file(*flag);
  if (config.relations) return LexiconRelationProvider::load_file(*config.relations);
  return LexiconRelationProvider::bundled();
}

std::size_t jobs_for(std::size_t flag, const Config& config) {
  if (flag > 0) return flag;
  if (config.jobs) return *config.jobs;
  return std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
}

// Every .java file under the given files/directories, sorted and unique.
std::vector<std::string> java_files(const std::vector<std::string>& roots) {
  std::vector<std::string> out;
  for (const std::string& root : roots) {
    std::error_code ec;
    const fs::file_status st = fs::status(root, ec);
    if (ec || !fs::exists(st)) throw IoError("no such file or directory: " + root);
    if (fs::is_regular_file(st)) {
      out.push_back(root);
      continue;
    }
    if (!fs::is_directory(st)) throw IoError("not a file or directory: " + root);
    for (fs::recursive_directory_iterator it(root, ec), end; it != end; it.increment(ec)) {
      if (ec) throw IoError("cannot walk " + root + ": " + ec.message());
      if (it->is_regular_file() && it->path().extension() == ".java") {
        out.push_back(it->path().generic_string());
      }
    }
    if (ec) throw IoError("cannot walk " + root + ": " + ec.message());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Applies f to 0..n-1 on up to `jobs` threads; results keep index order. The
// first exception (by index) is rethrown after all workers finish.
template <typename F>
auto parallel_map(std::size_t n, std::size_t jobs, F f) {
  using R = decltype(f(std::size_t{0}));
  std::vector<std::optional<R>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        slots[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min(jobs, n);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  std::vector<R> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

json span_json(const Span& s) { return {{"start", s.start}, {"end", s.end}}; }

json diagnostic_json(const Diagnostic& d) {
  return {{"rule_id", d.rule_id},
          {"method", d.method},
          {"file", d.file},
          {"name_span", span_json(d.name_span)},
          {"line", d.line},
          {"column", d.column},
          {"message", d.message},
          {"severity", std::string(to_string(d.severity))}};
}

json scan_file(const std::string& path, const Lexicon& lexicon, std::string& warning_text) {
  const SourceFile src = SourceFile::load(path);
  std::vector<TestMethod> methods;
  bool partial = false;
  try {
    methods = extract_methods(src);
  } catch (const PartialParseError& e) {
    methods = e.recovered();
    partial = true;
    warning_text = std::string("warning: ") + e.what();
  }
  const bool junit = has_junit_import(src);
  bool any_test = false;
  json records = json::array();
  for (const TestMethod& m : methods) {
    const bool test = is_test_method(m);
    any_test = any_test || test;
    json r = json::object();
    r["name"] = m.name;
    r["test"] = test;
    r["annotations"] = m.annotations;
    r["name_span"] = span_json(m.name_span);
    r["body_span"] = span_json(m.body_span);
    if (is_valid_identifier(m.name)) {
      r["pattern"] = pattern_of(tag_identifier(m.name, lexicon)).to_string();
    } else {
      r["pattern"] = nullptr;
    }
    records.push_back(std::move(r));
  }
  json f = json::object();
  f["path"] = path;
  f["test_file"] = junit && any_test;
  f["junit_import"] = junit;
  f["partial"] = partial;
  f["methods"] = std::move(records);
  return f;
}

std::vector<RenameClassification> classify_all(const std::vector<RenameEvent>& events,
                                               const RenameClassifier& classifier) {
  std::vector<RenameClassification> out;
  out.reserve(events.size());
  for (std::size_t i = 0; i < events.size(); ++i) {
    try {
      events[i].validate();
      out.push_back(classifier.classify(events[i]));
    } catch (const InvalidInput& e) {
      throw InvalidInput("rename event " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

bool is_classified_json(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos || text[first] != '[') return false;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error&) {
    return false;
  }
  return doc.is_array() && !doc.empty() && doc[0].is_object() && doc[0].contains("form");
}

// Builds, parses and dispatches. Throws testlens errors; CLI11 parse errors
// are handled by the caller.
struct Cli {
  CLI::App app{"testlens: grammar-pattern analysis of unit test method names", "testlens"};
  std::optional<std::string> config_path;

  CLI::App* split_cmd = nullptr;
  std::string split_name;
  bool split_json = false;

  CLI::App* tag_cmd = nullptr;
  std::string tag_name;
  std::optional<std::string> tag_lexicon;
  bool tag_json = false;

  CLI::App* pattern_cmd = nullptr;
  std::string pattern_name;
  std::optional<std::size_t> pattern_prefix;
  bool pattern_catalog = false;
  std::optional<std::string> pattern_catalog_file;
  std::optional<std::string> pattern_lexicon;
  bool pattern_json = false;

  CLI::App* scan_cmd = nullptr;
  std::vector<std::string> scan_paths;
  std::optional<std::string> scan_lexicon;
  std::size_t scan_jobs = 0;

  CLI::App* lint_cmd = nullptr;
  std::vector<std::string> lint_paths;
  std::optional<std::string> lint_rules;
  std::optional<std::string> lint_format;
  std::optional<std::string> lint_lexicon;
  std::size_t lint_jobs = 0;

  CLI::App* rename_cmd = nullptr;
  CLI::App* detect_cmd = nullptr;
  std::string detect_before;
  std::string detect_after;
  std::optional<double> detect_threshold;

  CLI::App* classify_cmd = nullptr;
  std::string classify_input;
  std::optional<std::string> classify_format;
  std::optional<std::string> classify_lexicon;
  std::optional<std::string> classify_relations;

  CLI::App* report_cmd = nullptr;
  std::string report_input;
  std::string report_table = "full";
  std::size_t report_k = 5;
  std::optional<std::size_t> report_prefix_len;
  std::optional<std::string> report_format;
  std::optional<std::string> report_lexicon;
  std::optional<std::string> report_relations;
  std::optional<std::string> report_catalog_file;
  std::size_t report_jobs = 0;

  Cli() {
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", "testlens 0.1.0");
    app.add_option("--config", config_path,
                   "Config file (TOML); defaults to $TESTLENS_CONFIG");

    split_cmd = app.add_subcommand("split", "Split an identifier into terms");
    split_cmd->add_option("name", split_name, "Identifier")->required();
    split_cmd->add_flag("--json", split_json, "Emit terms with spans as JSON");

    tag_cmd = app.add_subcommand("tag", "Split and POS-tag an identifier");
    tag_cmd->add_option("name", tag_name, "Identifier")->required();
    tag_cmd->add_option("--lexicon", tag_lexicon, "Lexicon JSON override");
    tag_cmd->add_flag("--json", tag_json, "Emit JSON");

    pattern_cmd = app.add_subcommand("pattern", "Grammar pattern and catalog matches");
    pattern_cmd->add_option("name", pattern_name, "Identifier")->required();
    pattern_cmd->add_option("--prefix", pattern_prefix, "Only the first k tags")
        ->check(CLI::PositiveNumber);
    pattern_cmd->add_flag("--catalog", pattern_catalog, "List matching catalog entries");
    pattern_cmd->add_option("--catalog-file", pattern_catalog_file, "Catalog JSON override");
    pattern_cmd->add_option("--lexicon", pattern_lexicon, "Lexicon JSON override");
    pattern_cmd->add_flag("--json", pattern_json, "Emit JSON");

    scan_cmd = app.add_subcommand("scan", "Extract test methods from Java sources (JSON)");
    scan_cmd->add_option("paths", scan_paths, "Files or directories")->required();
    scan_cmd->add_option("--lexicon", scan_lexicon, "Lexicon JSON override");
    scan_cmd->add_option("--jobs", scan_jobs, "Worker threads")->check(CLI::PositiveNumber);

    lint_cmd = app.add_subcommand("lint", "Check test names against their bodies");
    lint_cmd->add_option("paths", lint_paths, "Files or directories")->required();
    lint_cmd->add_option("--rules", lint_rules, "Comma-separated rule ids, e.g. R1,R3");
    lint_cmd->add_option("--format", lint_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    lint_cmd->add_option("--lexicon", lint_lexicon, "Lexicon JSON override");
    lint_cmd->add_option("--jobs", lint_jobs, "Worker threads")->check(CLI::PositiveNumber);

    rename_cmd = app.add_subcommand("rename", "Rename detection and classification");
    rename_cmd->require_subcommand(1);
    detect_cmd = rename_cmd->add_subcommand("detect", "Find renamed test methods");
    detect_cmd->add_option("--before", detect_before, "Old version of the file")->required();
    detect_cmd->add_option("--after", detect_after, "New version of the file")->required();
    detect_cmd->add_option("--threshold", detect_threshold, "Minimum similarity, (0, 1]");

    classify_cmd = rename_cmd->add_subcommand("classify", "Classify renames from a log");
    classify_cmd->add_option("--input", classify_input, "Rename log (CSV or JSON)")->required();
    classify_cmd->add_option("--format", classify_format, "json|csv|md")
        ->check(CLI::IsMember({"json", "csv", "md"}));
    classify_cmd->add_option("--lexicon", classify_lexicon, "Lexicon JSON override");
    classify_cmd->add_option("--relations", classify_relations, "Relations JSON override");

    report_cmd = app.add_subcommand("report", "Corpus tables from classified renames");
    report_cmd->add_option("--input", report_input, "Classified JSON or rename log")
        ->required();
    report_cmd->add_option("--table", report_table, "full|pairs|prefix|semantic|terms|catalog");
    report_cmd->add_option("--k", report_k, "Rows before the Others row")
        ->check(CLI::PositiveNumber);
    report_cmd->add_option("--prefix-len", report_prefix_len, "Prefix length 2..5")
        ->check(CLI::Range(2, 5));
    report_cmd->add_option("--format", report_format, "md|csv|json")
        ->check(CLI::IsMember({"md", "csv", "json"}));
    report_cmd->add_option("--lexicon", report_lexicon, "Lexicon JSON override");
    report_cmd->add_option("--relations", report_relations, "Relations JSON override");
    report_cmd->add_option("--catalog-file", report_catalog_file, "Catalog JSON override");
    report_cmd->add_option("--jobs", report_jobs, "Aggregation shards")
        ->check(CLI::PositiveNumber);
  }

  int dispatch(std::ostream& out, std::ostream& err) {
    const Config config = effective_config(config_path);
    if (*split_cmd) return do_split(out);
    if (*tag_cmd) return do_tag(config, out);
    if (*pattern_cmd) return do_pattern(config, out);
    if (*scan_cmd) return do_scan(config, out, err);
    if (*lint_cmd) return do_lint(config, out, err);
    if (*detect_cmd) return do_detect(config, out);
    if (*classify_cmd) return do_classify(config, out);
    if (*report_cmd) return do_report(config, out);
    throw UsageError("no subcommand given");
  }

  int do_split(std::ostream& out) {
    const TermSequence terms = split(split_name);
    if (split_json) {
      json arr = json::array();
      for (const Term& t : terms.terms()) {
        arr.push_back({{"text", t.text}, {"start", t.span.start}, {"end", t.span.end}});
      }
      out << json{{"name", split_name}, {"terms", arr}}.dump(2) << "\n";
    } else {
      for (const Term& t : terms.terms()) out << t.text << "\n";
    }
    return kExitOk;
  }

  int do_tag(const Config& config, std::ostream& out) {
    const Lexicon lexicon = lexicon_for(tag_lexicon, config);
    const TaggedName tagged = tag_identifier(tag_name, lexicon);
    const std::string pattern = pattern_of(tagged).to_string();
    if (tag_json) {
      json arr = json::array();
      for (std::size_t i = 0; i < tagged.tags.size(); ++i) {
        arr.push_back({{"text", tagged.terms[i].text},
                       {"tag", std::string(to_string(tagged.tags[i]))}});
      }
      out << json{{"name", tag_name}, {"terms", arr}, {"pattern", pattern}}.dump(2) << "\n";
    } else {
      out << tagged.to_string() << "\n" << pattern << "\n";
    }
    return kExitOk;
  }

  int do_pattern(const Config& config, std::ostream& out) {
    const Lexicon lexicon = lexicon_for(pattern_lexicon, config);
    GrammarPattern p = pattern_of(tag_identifier(pattern_name, lexicon));
    if (pattern_prefix) p = prefix(p, *pattern_prefix);
    std::vector<CatalogEntry> hits;
    if (pattern_catalog) hits = catalog_match(p, catalog_for(pattern_catalog_file, config));
    if (pattern_json) {
      json j = {{"name", pattern_name}, {"pattern", p.to_string()}};
      if (pattern_catalog) {
        json arr = json::array();
        for (const CatalogEntry& e : hits) {
          arr.push_back({{"name", e.name},
                         {"template", e.pattern.to_string()},
                         {"origin", std::string(to_string(e.origin))}});
        }
        j["catalog"] = std::move(arr);
      }
      out << j.dump(2) << "\n";
    } else {
      out << p.to_string() << "\n";
      for (const CatalogEntry& e : hits) {
        out << e.name << "\t" << e.pattern.to_string() << "\t" << to_string(e.origin) << "\n";
      }
    }
    return kExitOk;
  }

  int do_scan(const Config& config, std::ostream& out, std::ostream& err) {
    const Lexicon lexicon = lexicon_for(scan_lexicon, config);
    const std::vector<std::string> files = java_files(scan_paths);
    std::vector<std::string> warnings(files.size());
    const std::vector<json> records =
        parallel_map(files.size(), jobs_for(scan_jobs, config), [&](std::size_t i) {
          return scan_file(files[i], lexicon, warnings[i]);
        });
    for (const std::string& w : warnings) {
      if (!w.empty()) err << "testlens: " << w << "\n";
    }
    out << json{{"files", records}}.dump(2) << "\n";
    return kExitOk;
  }

  int do_lint(const Config& config, std::ostream& out, std::ostream& err) {
    const Lexicon lexicon = lexicon_for(lint_lexicon, config);
    const RuleSet rules = lint_rules     ? RuleSet::parse(*lint_rules)
                          : config.rules ? RuleSet::parse(*config.rules)
                                         : RuleSet();
    LintOptions options;
    if (config.collection_vocabulary) options.collection_vocabulary = *config.collection_vocabulary;
    if (config.r3_accepts_assert_false) {
      options.r3_accepts_assert_false = *config.r3_accepts_assert_false;
    }
    const std::string format = lint_format.value_or(config.lint_format.value_or("text"));
    const std::vector<std::string> files = java_files(lint_paths);
    const auto per_file =
        parallel_map(files.size(), jobs_for(lint_jobs, config), [&](std::size_t i) {
          return lint_file(SourceFile::load(files[i]), lexicon, rules, options);
        });
    std::vector<Diagnostic> all;
    for (const auto& ds : per_file) all.insert(all.end(), ds.begin(), ds.end());
    if (format == "json") {
      json arr = json::array();
      for (const Diagnostic& d : all) arr.push_back(diagnostic_json(d));
      out << json{{"diagnostics", arr}}.dump(2) << "\n";
    } else {
      for (const Diagnostic& d : all) out << format_diagnostic(d) << "\n";
    }
    if (!all.empty()) {
      err << "testlens: " << all.size() << " diagnostic" << (all.size() == 1 ? "" : "s")
          << " in " << files.size() << " file" << (files.size() == 1 ? "" : "s") << "\n";
    }
    return all.empty() ? kExitOk : kExitFindings;
  }

  int do_detect(const Config& config, std::ostream& out) {
    const double threshold =
        detect_threshold.value_or(config.threshold.value_or(kDefaultRenameThreshold));
    const auto renames =
        detect_renames(SourceFile::load(detect_before), SourceFile::load(detect_after), threshold);
    out << detected_to_json(renames).dump(2) << "\n";
    return kExitOk;
  }

  int do_classify(const Config& config, std::ostream& out) {
    const Lexicon lexicon = lexicon_for(classify_lexicon, config);
    const LexiconRelationProvider relations = relations_for(classify_relations, config);
    const RenameClassifier classifier(lexicon, relations, relations.phrases());
    const auto items = classify_all(load_rename_events(classify_input), classifier);
    const std::string format = classify_format.value_or(config.classify_format.value_or("json"));
    out << render_classifications(items, format);
    return kExitOk;
  }

  int do_report(const Config& config, std::ostream& out) {
    ReportRequest req;
    req.table = parse_report_table(report_table);
    req.k = report_k;
    req.prefix_len = report_prefix_len;
    req.format = report_format.value_or(config.report_format.value_or("md"));
    const Catalog catalog = catalog_for(report_catalog_file, config);

    const std::string text = read_file(report_input);
    std::vector<RenameClassification> items;
    if (is_classified_json(text)) {
      try {
        items = parse_classified_json(text);
      } catch (const InvalidInput& e) {
        throw InvalidInput(report_input + ": " + e.what());
      }
    } else {
      const Lexicon lexicon = lexicon_for(report_lexicon, config);
      const LexiconRelationProvider relations = relations_for(report_relations, config);
      const RenameClassifier classifier(lexicon, relations, relations.phrases());
      items = classify_all(load_rename_events(report_input), classifier);
    }

    // Shard, aggregate independently, then merge in shard order.
    const std::size_t shards = std::max<std::size_t>(
        1, std::min(jobs_for(report_jobs, config), items.size()));
    const auto parts = parallel_map(shards, shards, [&](std::size_t s) {
      CorpusStats stats;
      for (std::size_t i = s; i < items.size(); i += shards) accumulate(stats, items[i], catalog);
      return stats;
    });
    CorpusStats total;
    for (const CorpusStats& p : parts) total = merge(total, p);
    out << render(total, req, catalog);
    return kExitOk;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Cli cli;
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    cli.app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = cli.app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }
  try {
    return cli.dispatch(out, err);
  } catch (const Error& e) {
    err << "testlens: error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "testlens: error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace testlens
