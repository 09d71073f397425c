#include "testlens/patterns.h"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "testlens/bundled_data.h"
#include "testlens/error.h"
#include "testlens/file_util.h"

namespace testlens {

namespace {

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t') ++i;
    if (i > start) out.push_back(text.substr(start, i - start));
  }
  return out;
}

PosTag parse_tag_or_throw(std::string_view text) {
  auto tag = parse_pos_tag(text);
  if (!tag) throw InvalidInput("unknown POS tag '" + std::string(text) + "'");
  return *tag;
}

std::string join_tags(const std::vector<PosTag>& tags) {
  std::string out;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (i > 0) out += ' ';
    out += to_string(tags[i]);
  }
  return out;
}

bool equal_at(const std::vector<PosTag>& hay, std::size_t offset,
              const std::vector<PosTag>& needle) {
  return std::equal(needle.begin(), needle.end(), hay.begin() + offset);
}

bool get_flag(const nlohmann::json& obj, const char* key) {
  if (!obj.contains(key)) return false;
  if (!obj[key].is_boolean()) {
    throw InvalidInput(std::string("catalog: '") + key + "' must be a boolean");
  }
  return obj[key].get<bool>();
}

}  // namespace

GrammarPattern::GrammarPattern(std::vector<PosTag> tags)
    : tags_(std::move(tags)) {}

GrammarPattern GrammarPattern::parse(std::string_view text) {
  std::vector<PosTag> tags;
  for (std::string_view word : split_ws(text)) {
    tags.push_back(parse_tag_or_throw(word));
  }
  if (tags.empty()) throw InvalidInput("empty grammar pattern");
  return GrammarPattern(std::move(tags));
}

std::string GrammarPattern::to_string() const { return join_tags(tags_); }

std::strong_ordering GrammarPattern::operator<=>(
    const GrammarPattern& other) const {
  return to_string() <=> other.to_string();
}

PatternTemplate PatternTemplate::parse(std::string_view text) {
  std::vector<std::string_view> words = split_ws(text);
  PatternTemplate t;
  if (words.empty()) throw InvalidInput("empty pattern template");
  if (words.front().starts_with('+')) {
    t.leading_wildcard = true;
    words.front().remove_prefix(1);
  }
  if (words.back().ends_with('+')) {
    t.trailing_wildcard = true;
    words.back().remove_suffix(1);
  }
  for (std::string_view w : words) t.tags.push_back(parse_tag_or_throw(w));
  t.containment = t.leading_wildcard && t.trailing_wildcard;
  return t;
}

std::string PatternTemplate::to_string() const {
  std::string out = leading_wildcard ? "+" : "";
  out += join_tags(tags);
  if (trailing_wildcard) out += '+';
  return out;
}

std::string_view to_string(CatalogOrigin origin) {
  return origin == CatalogOrigin::kPrior ? "prior" : "extension";
}

Catalog parse_catalog(std::string_view json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("catalog: ") + e.what());
  }
  if (!doc.is_array() || doc.empty()) {
    throw InvalidInput("catalog: expected a non-empty JSON array");
  }
  static const std::set<std::string> kKeys = {
      "name", "tags", "leading_wildcard", "trailing_wildcard", "containment",
      "origin"};
  Catalog catalog;
  std::set<std::string> names;
  for (const auto& obj : doc) {
    if (!obj.is_object()) throw InvalidInput("catalog: entries must be objects");
    for (const auto& [key, _] : obj.items()) {
      if (!kKeys.count(key)) throw InvalidInput("catalog: unknown key '" + key + "'");
    }
    if (!obj.contains("name") || !obj["name"].is_string()) {
      throw InvalidInput("catalog: entry without a string 'name'");
    }
    CatalogEntry entry;
    entry.name = obj["name"].get<std::string>();
    if (!names.insert(entry.name).second) {
      throw InvalidInput("catalog: duplicate entry name '" + entry.name + "'");
    }
    if (!obj.contains("tags") || !obj["tags"].is_array() || obj["tags"].empty()) {
      throw InvalidInput("catalog: '" + entry.name + "' needs a non-empty 'tags'");
    }
    for (const auto& t : obj["tags"]) {
      if (!t.is_string()) throw InvalidInput("catalog: tags must be strings");
      entry.pattern.tags.push_back(parse_tag_or_throw(t.get<std::string>()));
    }
    entry.pattern.leading_wildcard = get_flag(obj, "leading_wildcard");
    entry.pattern.trailing_wildcard = get_flag(obj, "trailing_wildcard");
    entry.pattern.containment = get_flag(obj, "containment");
    if (entry.pattern.containment &&
        !(entry.pattern.leading_wildcard && entry.pattern.trailing_wildcard)) {
      throw InvalidInput("catalog: '" + entry.name +
                         "' uses containment without both wildcards");
    }
    if (obj.contains("origin")) {
      const std::string origin =
          obj["origin"].is_string() ? obj["origin"].get<std::string>() : "";
      if (origin == "prior") {
        entry.origin = CatalogOrigin::kPrior;
      } else if (origin == "extension") {
        entry.origin = CatalogOrigin::kExtension;
      } else {
        throw InvalidInput("catalog: bad origin for '" + entry.name + "'");
      }
    }
    catalog.push_back(std::move(entry));
  }
  return catalog;
}

Catalog load_catalog(const std::string& path) {
  return parse_catalog(read_file(path));
}

const Catalog& bundled_catalog() {
  static const Catalog catalog = parse_catalog(bundled_catalog_json());
  return catalog;
}

GrammarPattern pattern_of(const TaggedName& name) {
  return GrammarPattern(name.tags);
}

GrammarPattern prefix(const GrammarPattern& p, std::size_t k) {
  if (k == 0) throw InvalidInput("prefix length must be >= 1");
  const std::size_t n = std::min(k, p.size());
  return GrammarPattern(
      std::vector<PosTag>(p.tags().begin(), p.tags().begin() + n));
}

bool matches(const PatternTemplate& t, const GrammarPattern& p) {
  const std::vector<PosTag>& hay = p.tags();
  const std::vector<PosTag>& needle = t.tags;
  if (needle.size() > hay.size()) return false;
  const bool anywhere = t.containment || (t.leading_wildcard && t.trailing_wildcard);
  if (anywhere) {
    for (std::size_t off = 0; off + needle.size() <= hay.size(); ++off) {
      if (equal_at(hay, off, needle)) return true;
    }
    return false;
  }
  if (t.trailing_wildcard) return equal_at(hay, 0, needle);
  if (t.leading_wildcard) return equal_at(hay, hay.size() - needle.size(), needle);
  return hay == needle;
}

std::vector<CatalogEntry> catalog_match(const GrammarPattern& p,
                                        const Catalog& catalog) {
  std::vector<CatalogEntry> out;
  for (const CatalogEntry& e : catalog) {
    if (matches(e.pattern, p)) out.push_back(e);
  }
  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    if (a.pattern.tags.size() != b.pattern.tags.size()) {
      return a.pattern.tags.size() > b.pattern.tags.size();
    }
    return a.name < b.name;
  });
  return out;
}

bool pattern_preserved(const GrammarPattern& old_pattern,
                       const GrammarPattern& new_pattern) {
  return old_pattern.tags() == new_pattern.tags();
}

std::pair<GrammarPattern, GrammarPattern> prefix_pair(
    const GrammarPattern& old_pattern, const GrammarPattern& new_pattern,
    std::size_t k) {
  return {prefix(old_pattern, k), prefix(new_pattern, k)};
}

}  // namespace testlens
