#ifndef TESTLENS_REPORT_H_
#define TESTLENS_REPORT_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "testlens/patterns.h"
#include "testlens/rename.h"

namespace testlens {

using PatternPair = std::pair<GrammarPattern, GrammarPattern>;
using CountMap = std::map<std::vector<std::string>, std::size_t>;

inline constexpr std::size_t kMinPrefixLen = 2;
inline constexpr std::size_t kMaxPrefixLen = 5;

struct CatalogTally {
  // Old names plus new names matching the entry.
  std::size_t instances = 0;
  // Events whose old and new names both match it.
  std::size_t preserved_after_rename = 0;

  bool operator==(const CatalogTally&) const = default;
};

struct CorpusStats {
  std::size_t events = 0;
  std::map<GrammarPattern, std::size_t> full_pattern_counts_old;
  std::map<GrammarPattern, std::size_t> full_pattern_counts_new;
  std::map<PatternPair, std::size_t> pattern_pair_counts;
  // Keyed by (k, (old prefix, new prefix)) for k in 2..5. Prefixes of names
  // shorter than k are the whole pattern, so every event counts at every k.
  std::map<std::pair<std::size_t, PatternPair>, std::size_t> prefix_pair_counts;
  std::map<FormCategory, std::size_t> form_counts;
  std::map<SemanticCategory, std::size_t> semantic_counts;
  std::map<std::pair<PatternPair, SemanticCategory>, std::size_t> semantic_by_pattern_pair;
  // (added, removed)
  std::map<std::pair<std::string, std::string>, std::size_t> term_pair_counts;
  // By catalog entry name.
  std::map<std::string, CatalogTally> catalog_tally;

  bool operator==(const CorpusStats&) const = default;
};

// Adds one event to every map.
void accumulate(CorpusStats& stats, const RenameClassification& c, const Catalog& catalog);

CorpusStats accumulate_all(const std::vector<RenameClassification>& items,
                           const Catalog& catalog);

// Pointwise sum.
CorpusStats merge(const CorpusStats& a, const CorpusStats& b);

struct TopKRow {
  std::vector<std::string> key;
  std::size_t count = 0;
};

struct TopK {
  std::vector<TopKRow> rows;
  // Count outside the top k; only meaningful when the input was non-empty.
  std::size_t others = 0;
  std::size_t total = 0;
  bool has_others = false;
};

// Descending count, ties by lexicographic key. A non-empty input also gets
// an "Others" residual (possibly 0). Throws InvalidInput when k == 0.
TopK top_k(const CountMap& counts, std::size_t k);

// count / total * 100 rounded half away from zero to 2 decimals.
double percentage(std::size_t count, std::size_t total);

enum class ReportTable { kFull, kPairs, kPrefix, kSemantic, kTerms, kCatalog };

std::string_view to_string(ReportTable t);
// Throws UsageError on anything but full|pairs|prefix|semantic|terms|catalog.
ReportTable parse_report_table(std::string_view text);

struct ReportRequest {
  ReportTable table = ReportTable::kFull;
  std::size_t k = 5;
  // Prefix table only; unset renders every length 2..5.
  std::optional<std::size_t> prefix_len;
  // md | csv | json
  std::string format = "md";
};

// Throws UsageError on an unsupported format, k == 0 or a prefix length
// outside 2..5. `catalog` supplies entry order and patterns for the catalog
// table.
std::string render(const CorpusStats& stats, const ReportRequest& request,
                   const Catalog& catalog);

// Every map, for inspection and diffing.
nlohmann::json stats_to_json(const CorpusStats& stats);

}  // namespace testlens

#endif  // TESTLENS_REPORT_H_
