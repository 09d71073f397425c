#include "testlens/report.h"

#include <algorithm>
#include <cstdio>

#include "testlens/csv.h"
#include "testlens/error.h"

namespace testlens {

namespace {

template <typename K>
void add_all(std::map<K, std::size_t>& into, const std::map<K, std::size_t>& from) {
  for (const auto& [k, n] : from) into[k] += n;
}

std::size_t basis_points(std::size_t count, std::size_t total) {
  if (total == 0) return 0;
  return (count * 20000 + total) / (2 * total);
}

std::string format_percentage(std::size_t count, std::size_t total) {
  const std::size_t bp = basis_points(count, total);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%zu.%02zu", bp / 100, bp % 100);
  return buf;
}

struct Row {
  std::vector<std::string> key;
  std::size_t count = 0;
  // Percentage numerator and denominator.
  std::size_t part = 0;
  std::size_t whole = 0;
};

struct Section {
  std::string title;
  std::vector<std::string> columns;
  std::string count_header = "Count";
  std::string percentage_header = "Percentage";
  std::vector<Row> rows;
  std::optional<Row> others;
};

Section top_section(std::string title, std::vector<std::string> columns, const CountMap& counts,
                    std::size_t k, std::size_t total) {
  Section s;
  s.title = std::move(title);
  s.columns = std::move(columns);
  const TopK top = top_k(counts, k);
  for (const TopKRow& r : top.rows) s.rows.push_back({r.key, r.count, r.count, total});
  if (top.has_others) s.others = Row{{"Others"}, top.others, top.others, total};
  return s;
}

CountMap single_key(const std::map<GrammarPattern, std::size_t>& m) {
  CountMap out;
  for (const auto& [p, n] : m) out[{p.to_string()}] += n;
  return out;
}

CountMap pair_key(const std::map<PatternPair, std::size_t>& m) {
  CountMap out;
  for (const auto& [p, n] : m) out[{p.first.to_string(), p.second.to_string()}] += n;
  return out;
}

const char* prefix_word(std::size_t k) {
  static const char* kWords[] = {"", "One", "Two", "Three", "Four", "Five"};
  return k < 6 ? kWords[k] : "";
}

std::vector<Section> build_sections(const CorpusStats& stats, const ReportRequest& req,
                                    const Catalog& catalog) {
  std::vector<Section> out;
  const std::size_t n = stats.events;
  switch (req.table) {
    case ReportTable::kFull:
      out.push_back(top_section("Old name grammar pattern", {"Grammar Pattern"},
                                single_key(stats.full_pattern_counts_old), req.k, n));
      out.push_back(top_section("New name grammar pattern", {"Grammar Pattern"},
                                single_key(stats.full_pattern_counts_new), req.k, n));
      break;
    case ReportTable::kPairs:
      out.push_back(top_section("Complete grammar pattern pairs",
                                {"Old Pattern", "New Pattern"},
                                pair_key(stats.pattern_pair_counts), req.k, n));
      break;
    case ReportTable::kPrefix: {
      std::size_t lo = kMinPrefixLen;
      std::size_t hi = kMaxPrefixLen;
      if (req.prefix_len) lo = hi = *req.prefix_len;
      for (std::size_t len = lo; len <= hi; ++len) {
        CountMap counts;
        for (const auto& [key, c] : stats.prefix_pair_counts) {
          if (key.first != len) continue;
          counts[{key.second.first.to_string(), key.second.second.to_string()}] += c;
        }
        out.push_back(top_section(std::string(prefix_word(len)) + " prefix pattern pairs",
                                  {"Old Pattern", "New Pattern"}, counts, req.k, n));
      }
      break;
    }
    case ReportTable::kSemantic: {
      Section forms;
      forms.title = "Rename form";
      forms.columns = {"Form"};
      for (FormCategory f : {FormCategory::kFormatting, FormCategory::kReordering,
                             FormCategory::kSimple, FormCategory::kComplex}) {
        const auto it = stats.form_counts.find(f);
        const std::size_t c = it == stats.form_counts.end() ? 0 : it->second;
        forms.rows.push_back({{std::string(to_string(f))}, c, c, n});
      }
      out.push_back(std::move(forms));
      Section sem;
      sem.title = "Semantic category";
      sem.columns = {"Semantics"};
      for (SemanticCategory s :
           {SemanticCategory::kPreserve, SemanticCategory::kChange, SemanticCategory::kNarrow,
            SemanticCategory::kBroaden, SemanticCategory::kAdd, SemanticCategory::kRemove}) {
        const auto it = stats.semantic_counts.find(s);
        const std::size_t c = it == stats.semantic_counts.end() ? 0 : it->second;
        sem.rows.push_back({{std::string(to_string(s))}, c, c, n});
      }
      out.push_back(std::move(sem));
      CountMap by_pair;
      for (const auto& [key, c] : stats.semantic_by_pattern_pair) {
        by_pair[{key.first.first.to_string(), key.first.second.to_string(),
                 std::string(to_string(key.second))}] += c;
      }
      out.push_back(top_section("Semantic updates by complete grammar pattern pair",
                                {"Old Pattern", "New Pattern", "Semantics"}, by_pair, req.k,
                                n));
      break;
    }
    case ReportTable::kTerms: {
      CountMap counts;
      std::size_t total = 0;
      for (const auto& [key, c] : stats.term_pair_counts) {
        counts[{key.first, key.second}] += c;
        total += c;
      }
      out.push_back(
          top_section("Added and removed term pairs", {"Added", "Removed"}, counts, req.k, total));
      break;
    }
    case ReportTable::kCatalog: {
      Section s;
      s.title = "Catalog pattern occurrences";
      s.columns = {"Pattern Name", "Grammar Pattern"};
      s.count_header = "Instances";
      s.percentage_header = "Preserved After Rename";
      for (const CatalogEntry& e : catalog) {
        const auto it = stats.catalog_tally.find(e.name);
        const CatalogTally t = it == stats.catalog_tally.end() ? CatalogTally{} : it->second;
        s.rows.push_back({{e.name, e.pattern.to_string()}, t.instances,
                          2 * t.preserved_after_rename, t.instances});
      }
      out.push_back(std::move(s));
      break;
    }
  }
  return out;
}

std::size_t key_width(const std::vector<Section>& sections) {
  std::size_t w = 0;
  for (const Section& s : sections) w = std::max(w, s.columns.size());
  return w;
}

std::string snake(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == ' ') {
      out += '_';
    } else {
      out += (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
    }
  }
  return out;
}

std::string render_md(const std::vector<Section>& sections) {
  std::string out;
  for (std::size_t i = 0; i < sections.size(); ++i) {
    const Section& s = sections[i];
    if (i > 0) out += "\n";
    out += "## " + s.title + "\n\n|";
    for (const std::string& c : s.columns) out += " " + c + " |";
    out += " " + s.count_header + " | " + s.percentage_header + " |\n|";
    for (std::size_t c = 0; c < s.columns.size(); ++c) out += "---|";
    out += "---:|---:|\n";
    auto line = [&](const Row& r) {
      out += "|";
      for (std::size_t c = 0; c < s.columns.size(); ++c) {
        out += " " + (c < r.key.size() ? r.key[c] : std::string()) + " |";
      }
      out += " " + std::to_string(r.count) + " | " + format_percentage(r.part, r.whole) + "% |\n";
    };
    for (const Row& r : s.rows) line(r);
    if (s.others) line(*s.others);
  }
  return out;
}

std::string render_csv(const std::vector<Section>& sections) {
  const std::size_t width = key_width(sections);
  std::vector<std::string> header = {"section"};
  for (const Section& s : sections) {
    if (s.columns.size() != width) continue;
    for (const std::string& c : s.columns) header.push_back(snake(c));
    header.push_back(snake(s.count_header));
    header.push_back(snake(s.percentage_header));
    break;
  }
  std::string out = csv_line(header);
  for (const Section& s : sections) {
    // Narrower sections fill the rightmost key columns.
    const std::size_t pad = width - s.columns.size();
    auto line = [&](const Row& r, bool others) {
      std::vector<std::string> cells = {s.title};
      for (std::size_t c = 0; c < width; ++c) {
        if (others) {
          cells.push_back(c == 0 ? "Others" : "");
        } else {
          cells.push_back(c < pad ? "" : r.key[c - pad]);
        }
      }
      cells.push_back(std::to_string(r.count));
      cells.push_back(format_percentage(r.part, r.whole));
      out += csv_line(cells);
    };
    for (const Row& r : s.rows) line(r, false);
    if (s.others) line(*s.others, true);
  }
  return out;
}

nlohmann::json row_json(const Row& r) {
  return {{"key", r.key},
          {"count", r.count},
          {"percentage", static_cast<double>(basis_points(r.part, r.whole)) / 100.0}};
}

std::string render_json(const std::vector<Section>& sections, const CorpusStats& stats,
                        ReportTable table) {
  nlohmann::json doc = nlohmann::json::object();
  doc["table"] = std::string(to_string(table));
  doc["events"] = stats.events;
  nlohmann::json arr = nlohmann::json::array();
  for (const Section& s : sections) {
    nlohmann::json j = nlohmann::json::object();
    j["title"] = s.title;
    j["columns"] = s.columns;
    j["count_header"] = s.count_header;
    j["percentage_header"] = s.percentage_header;
    nlohmann::json rows = nlohmann::json::array();
    for (const Row& r : s.rows) rows.push_back(row_json(r));
    j["rows"] = std::move(rows);
    if (s.others) {
      nlohmann::json o = row_json(*s.others);
      o.erase("key");
      j["others"] = std::move(o);
    } else {
      j["others"] = nullptr;
    }
    arr.push_back(std::move(j));
  }
  doc["sections"] = std::move(arr);
  return doc.dump(2) + "\n";
}

}  // namespace

void accumulate(CorpusStats& stats, const RenameClassification& c, const Catalog& catalog) {
  const GrammarPattern old_p(c.old_tagged.tags);
  const GrammarPattern new_p(c.new_tagged.tags);
  const PatternPair pair{old_p, new_p};
  ++stats.events;
  ++stats.full_pattern_counts_old[old_p];
  ++stats.full_pattern_counts_new[new_p];
  ++stats.pattern_pair_counts[pair];
  for (std::size_t k = kMinPrefixLen; k <= kMaxPrefixLen; ++k) {
    ++stats.prefix_pair_counts[{k, prefix_pair(old_p, new_p, k)}];
  }
  ++stats.form_counts[c.form];
  ++stats.semantic_counts[c.semantics];
  ++stats.semantic_by_pattern_pair[{pair, c.semantics}];
  for (const TermPair& p : c.pairs) ++stats.term_pair_counts[{p.added, p.removed}];
  for (const CatalogEntry& e : catalog) {
    const bool in_old = matches(e.pattern, old_p);
    const bool in_new = matches(e.pattern, new_p);
    if (!in_old && !in_new) continue;
    CatalogTally& t = stats.catalog_tally[e.name];
    t.instances += static_cast<std::size_t>(in_old) + static_cast<std::size_t>(in_new);
    if (in_old && in_new) ++t.preserved_after_rename;
  }
}

CorpusStats accumulate_all(const std::vector<RenameClassification>& items,
                           const Catalog& catalog) {
  CorpusStats stats;
  for (const RenameClassification& c : items) accumulate(stats, c, catalog);
  return stats;
}

CorpusStats merge(const CorpusStats& a, const CorpusStats& b) {
  CorpusStats out = a;
  out.events += b.events;
  add_all(out.full_pattern_counts_old, b.full_pattern_counts_old);
  add_all(out.full_pattern_counts_new, b.full_pattern_counts_new);
  add_all(out.pattern_pair_counts, b.pattern_pair_counts);
  add_all(out.prefix_pair_counts, b.prefix_pair_counts);
  add_all(out.form_counts, b.form_counts);
  add_all(out.semantic_counts, b.semantic_counts);
  add_all(out.semantic_by_pattern_pair, b.semantic_by_pattern_pair);
  add_all(out.term_pair_counts, b.term_pair_counts);
  for (const auto& [name, t] : b.catalog_tally) {
    CatalogTally& into = out.catalog_tally[name];
    into.instances += t.instances;
    into.preserved_after_rename += t.preserved_after_rename;
  }
  return out;
}

TopK top_k(const CountMap& counts, std::size_t k) {
  if (k == 0) throw InvalidInput("top_k needs k >= 1");
  TopK out;
  std::vector<TopKRow> rows;
  for (const auto& [key, n] : counts) {
    rows.push_back({key, n});
    out.total += n;
  }
  // Map iteration is already key-ordered, so a stable sort on count alone
  // leaves ties in lexicographic key order.
  std::stable_sort(rows.begin(), rows.end(),
                   [](const TopKRow& a, const TopKRow& b) { return a.count > b.count; });
  if (rows.size() > k) rows.resize(k);
  std::size_t shown = 0;
  for (const TopKRow& r : rows) shown += r.count;
  out.rows = std::move(rows);
  out.has_others = !counts.empty();
  out.others = out.total - shown;
  return out;
}

double percentage(std::size_t count, std::size_t total) {
  return static_cast<double>(basis_points(count, total)) / 100.0;
}

std::string_view to_string(ReportTable t) {
  switch (t) {
    case ReportTable::kFull: return "full";
    case ReportTable::kPairs: return "pairs";
    case ReportTable::kPrefix: return "prefix";
    case ReportTable::kSemantic: return "semantic";
    case ReportTable::kTerms: return "terms";
    case ReportTable::kCatalog: return "catalog";
  }
  return "full";
}

ReportTable parse_report_table(std::string_view text) {
  for (ReportTable t : {ReportTable::kFull, ReportTable::kPairs, ReportTable::kPrefix,
                        ReportTable::kSemantic, ReportTable::kTerms, ReportTable::kCatalog}) {
    if (to_string(t) == text) return t;
  }
  throw UsageError("unknown report table '" + std::string(text) +
                   "' (full|pairs|prefix|semantic|terms|catalog)");
}

std::string render(const CorpusStats& stats, const ReportRequest& request,
                   const Catalog& catalog) {
  if (request.k == 0) throw UsageError("--k must be at least 1");
  if (request.prefix_len &&
      (*request.prefix_len < kMinPrefixLen || *request.prefix_len > kMaxPrefixLen)) {
    throw UsageError("--prefix-len must be between 2 and 5");
  }
  if (request.format != "md" && request.format != "csv" && request.format != "json") {
    throw UsageError("unsupported format '" + request.format + "' (md|csv|json)");
  }
  const std::vector<Section> sections = build_sections(stats, request, catalog);
  if (request.format == "md") return render_md(sections);
  if (request.format == "csv") return render_csv(sections);
  return render_json(sections, stats, request.table);
}

nlohmann::json stats_to_json(const CorpusStats& stats) {
  using nlohmann::json;
  json j = json::object();
  j["events"] = stats.events;
  auto patterns = [](const std::map<GrammarPattern, std::size_t>& m) {
    json arr = json::array();
    for (const auto& [p, n] : m) arr.push_back({{"pattern", p.to_string()}, {"count", n}});
    return arr;
  };
  j["full_pattern_counts_old"] = patterns(stats.full_pattern_counts_old);
  j["full_pattern_counts_new"] = patterns(stats.full_pattern_counts_new);
  json pairs = json::array();
  for (const auto& [p, n] : stats.pattern_pair_counts) {
    pairs.push_back({{"old", p.first.to_string()}, {"new", p.second.to_string()}, {"count", n}});
  }
  j["pattern_pair_counts"] = std::move(pairs);
  json prefixes = json::array();
  for (const auto& [key, n] : stats.prefix_pair_counts) {
    prefixes.push_back({{"k", key.first},
                        {"old", key.second.first.to_string()},
                        {"new", key.second.second.to_string()},
                        {"count", n}});
  }
  j["prefix_pair_counts"] = std::move(prefixes);
  json forms = json::object();
  for (const auto& [f, n] : stats.form_counts) forms[std::string(to_string(f))] = n;
  j["form_counts"] = std::move(forms);
  json sems = json::object();
  for (const auto& [s, n] : stats.semantic_counts) sems[std::string(to_string(s))] = n;
  j["semantic_counts"] = std::move(sems);
  json by_pair = json::array();
  for (const auto& [key, n] : stats.semantic_by_pattern_pair) {
    by_pair.push_back({{"old", key.first.first.to_string()},
                       {"new", key.first.second.to_string()},
                       {"semantics", std::string(to_string(key.second))},
                       {"count", n}});
  }
  j["semantic_by_pattern_pair"] = std::move(by_pair);
  json terms = json::array();
  for (const auto& [key, n] : stats.term_pair_counts) {
    terms.push_back({{"added", key.first}, {"removed", key.second}, {"count", n}});
  }
  j["term_pair_counts"] = std::move(terms);
  json tally = json::object();
  for (const auto& [name, t] : stats.catalog_tally) {
    tally[name] = {{"instances", t.instances},
                   {"preserved_after_rename", t.preserved_after_rename}};
  }
  j["catalog_tally"] = std::move(tally);
  return j;
}

}  // namespace testlens
