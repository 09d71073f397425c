#include "testlens/rename_io.h"

#include <map>

#include "testlens/csv.h"
#include "testlens/error.h"
#include "testlens/file_util.h"
#include "testlens/patterns.h"

namespace testlens {

namespace {

std::optional<std::string> optional_cell(const std::string& cell) {
  if (cell.empty()) return std::nullopt;
  return cell;
}

std::optional<std::string> optional_member(const nlohmann::json& obj, const char* key) {
  if (!obj.contains(key) || obj[key].is_null()) return std::nullopt;
  if (!obj[key].is_string()) {
    throw InvalidInput(std::string("rename log: '") + key + "' must be a string");
  }
  std::string v = obj[key].get<std::string>();
  if (v.empty()) return std::nullopt;
  return v;
}

std::string required_member(const nlohmann::json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_string()) {
    throw InvalidInput(std::string("missing string '") + key + "'");
  }
  return obj[key].get<std::string>();
}

RenameEvent event_from_object(const nlohmann::json& obj) {
  RenameEvent e;
  e.old_name = required_member(obj, "old_name");
  e.new_name = required_member(obj, "new_name");
  e.file = optional_member(obj, "file");
  e.commit = optional_member(obj, "commit");
  return e;
}

nlohmann::json parse_json(std::string_view text, const char* what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string(what) + ": " + e.what());
  }
}

nlohmann::json optional_json(const std::optional<std::string>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

TaggedName rebuild_tagged(const std::string& name, const std::string& pattern) {
  TaggedName t{split(name), GrammarPattern::parse(pattern).tags()};
  if (t.tags.size() != t.terms.size()) {
    throw InvalidInput("pattern '" + pattern + "' does not fit name '" + name + "'");
  }
  return t;
}

std::vector<std::string> string_array(const nlohmann::json& obj, const char* key) {
  std::vector<std::string> out;
  if (!obj.contains(key)) return out;
  if (!obj[key].is_array()) {
    throw InvalidInput(std::string("'") + key + "' must be an array");
  }
  for (const auto& v : obj[key]) {
    if (!v.is_string()) throw InvalidInput(std::string("'") + key + "' holds a non-string");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

std::string pairs_cell(const RenameClassification& c) {
  std::vector<std::string> cells;
  for (const TermPair& p : c.pairs) {
    cells.push_back(p.added + ">" + p.removed + ":" + std::string(to_string(p.relation)));
  }
  return join(cells, ";");
}

std::string md_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '|' || c == '_' || c == '*' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::vector<RenameEvent> parse_rename_csv(std::string_view text) {
  const std::vector<CsvRow> rows = parse_csv(text);
  if (rows.empty()) throw InvalidInput("rename log: missing CSV header");
  std::map<std::string, std::size_t> column;
  for (std::size_t i = 0; i < rows[0].size(); ++i) {
    const std::string& name = rows[0][i];
    if (name != "old_name" && name != "new_name" && name != "file" && name != "commit") {
      throw InvalidInput("rename log: unknown CSV column '" + name + "'");
    }
    if (!column.emplace(name, i).second) {
      throw InvalidInput("rename log: duplicate CSV column '" + name + "'");
    }
  }
  if (!column.count("old_name") || !column.count("new_name")) {
    throw InvalidInput("rename log: CSV header needs old_name and new_name");
  }
  std::vector<RenameEvent> events;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const CsvRow& row = rows[r];
    if (row.size() != rows[0].size()) {
      throw InvalidInput("rename log: row " + std::to_string(r + 1) + " has " +
                         std::to_string(row.size()) + " cells, expected " +
                         std::to_string(rows[0].size()));
    }
    RenameEvent e;
    e.old_name = row[column["old_name"]];
    e.new_name = row[column["new_name"]];
    if (column.count("file")) e.file = optional_cell(row[column["file"]]);
    if (column.count("commit")) e.commit = optional_cell(row[column["commit"]]);
    events.push_back(std::move(e));
  }
  return events;
}

std::vector<RenameEvent> parse_rename_json(std::string_view text) {
  const nlohmann::json doc = parse_json(text, "rename log");
  if (!doc.is_array()) throw InvalidInput("rename log: expected a JSON array");
  std::vector<RenameEvent> events;
  for (const auto& obj : doc) {
    if (!obj.is_object()) throw InvalidInput("rename log: entries must be objects");
    for (const auto& [key, value] : obj.items()) {
      if (key == "score" && value.is_number()) continue;
      if (key != "old_name" && key != "new_name" && key != "file" && key != "commit") {
        throw InvalidInput("rename log: unknown key '" + key + "'");
      }
    }
    events.push_back(event_from_object(obj));
  }
  return events;
}

std::vector<RenameEvent> load_rename_events(const std::string& path) {
  const std::string text = read_file(path);
  if (path.ends_with(".csv")) return parse_rename_csv(text);
  if (path.ends_with(".json")) return parse_rename_json(text);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') return parse_rename_json(text);
  return parse_rename_csv(text);
}

nlohmann::json event_to_json(const RenameEvent& event) {
  nlohmann::json j = nlohmann::json::object();
  j["old_name"] = event.old_name;
  j["new_name"] = event.new_name;
  j["file"] = optional_json(event.file);
  j["commit"] = optional_json(event.commit);
  return j;
}

nlohmann::json classification_to_json(const RenameClassification& c) {
  nlohmann::json j = event_to_json(c.event);
  j["form"] = std::string(to_string(c.form));
  j["semantics"] = std::string(to_string(c.semantics));
  j["old_pattern"] = GrammarPattern(c.old_tagged.tags).to_string();
  j["new_pattern"] = GrammarPattern(c.new_tagged.tags).to_string();
  j["added"] = c.added;
  j["removed"] = c.removed;
  nlohmann::json pairs = nlohmann::json::array();
  for (const TermPair& p : c.pairs) {
    pairs.push_back({{"added", p.added},
                     {"removed", p.removed},
                     {"relation", std::string(to_string(p.relation))}});
  }
  j["pairs"] = std::move(pairs);
  return j;
}

RenameClassification classification_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInput("classified record must be an object");
  RenameClassification c;
  c.event = event_from_object(j);
  c.old_tagged = rebuild_tagged(c.event.old_name, required_member(j, "old_pattern"));
  c.new_tagged = rebuild_tagged(c.event.new_name, required_member(j, "new_pattern"));
  const std::string form = required_member(j, "form");
  const std::string semantics = required_member(j, "semantics");
  auto f = parse_form_category(form);
  auto s = parse_semantic_category(semantics);
  if (!f) throw InvalidInput("unknown form category '" + form + "'");
  if (!s) throw InvalidInput("unknown semantic category '" + semantics + "'");
  c.form = *f;
  c.semantics = *s;
  c.added = string_array(j, "added");
  c.removed = string_array(j, "removed");
  if (j.contains("pairs")) {
    if (!j["pairs"].is_array()) throw InvalidInput("'pairs' must be an array");
    for (const auto& p : j["pairs"]) {
      const std::string rel = required_member(p, "relation");
      auto r = parse_term_relation(rel);
      if (!r) throw InvalidInput("unknown term relation '" + rel + "'");
      c.pairs.push_back({required_member(p, "added"), required_member(p, "removed"), *r});
    }
  }
  if (c.pairs.size() != c.added.size() * c.removed.size()) {
    throw InvalidInput("pairs count does not equal |added| x |removed| for '" +
                       c.event.old_name + "'");
  }
  return c;
}

std::vector<RenameClassification> parse_classified_json(std::string_view text) {
  const nlohmann::json doc = parse_json(text, "classified input");
  if (!doc.is_array()) throw InvalidInput("classified input: expected a JSON array");
  std::vector<RenameClassification> out;
  out.reserve(doc.size());
  for (const auto& j : doc) out.push_back(classification_from_json(j));
  return out;
}

std::string render_classifications(const std::vector<RenameClassification>& items,
                                   std::string_view format) {
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : items) arr.push_back(classification_to_json(c));
    return arr.dump(2) + "\n";
  }
  if (format == "csv") {
    std::string out = csv_line({"old_name", "new_name", "file", "commit", "form",
                                "semantics", "old_pattern", "new_pattern", "added",
                                "removed", "pairs"});
    for (const auto& c : items) {
      out += csv_line({c.event.old_name, c.event.new_name, c.event.file.value_or(""),
                       c.event.commit.value_or(""), std::string(to_string(c.form)),
                       std::string(to_string(c.semantics)),
                       GrammarPattern(c.old_tagged.tags).to_string(),
                       GrammarPattern(c.new_tagged.tags).to_string(), join(c.added, ";"),
                       join(c.removed, ";"), pairs_cell(c)});
    }
    return out;
  }
  if (format == "md") {
    std::string out =
        "| Old Name | New Name | Old Pattern | New Pattern | Form | Semantics | Term Pairs |\n"
        "|---|---|---|---|---|---|---|\n";
    for (const auto& c : items) {
      out += "| " + md_escape(c.event.old_name) + " | " + md_escape(c.event.new_name) +
             " | " + GrammarPattern(c.old_tagged.tags).to_string() + " | " +
             GrammarPattern(c.new_tagged.tags).to_string() + " | " +
             std::string(to_string(c.form)) + " | " +
             std::string(to_string(c.semantics)) + " | " + md_escape(pairs_cell(c)) +
             " |\n";
    }
    return out;
  }
  throw UsageError("unsupported format '" + std::string(format) + "' (json|csv|md)");
}

}  // namespace testlens
