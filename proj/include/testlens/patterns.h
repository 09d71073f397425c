#ifndef TESTLENS_PATTERNS_H_
#define TESTLENS_PATTERNS_H_

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "testlens/pos_tag.h"
#include "testlens/tagger.h"

namespace testlens {

// An ordered, non-empty sequence of POS tags such as "V NM N".
class GrammarPattern {
 public:
  GrammarPattern() = default;
  explicit GrammarPattern(std::vector<PosTag> tags);

  // Parses the canonical space-separated rendering. Throws InvalidInput.
  static GrammarPattern parse(std::string_view text);

  const std::vector<PosTag>& tags() const { return tags_; }
  std::size_t size() const { return tags_.size(); }
  bool empty() const { return tags_.empty(); }

  std::string to_string() const;

  bool operator==(const GrammarPattern&) const = default;
  // Orders by canonical rendering so map keys sort the way tables print.
  std::strong_ordering operator<=>(const GrammarPattern& other) const;

 private:
  std::vector<PosTag> tags_;
};

// Tag sequence with "+" wildcards. With containment the tags may occur
// anywhere as a contiguous run ("+VM+").
struct PatternTemplate {
  std::vector<PosTag> tags;
  bool leading_wildcard = false;
  bool trailing_wildcard = false;
  bool containment = false;

  // Parses "V V N+", "+VM+", "N". Throws InvalidInput.
  static PatternTemplate parse(std::string_view text);
  std::string to_string() const;

  bool operator==(const PatternTemplate&) const = default;
};

// kPrior: templates from earlier naming studies. kExtension: templates added
// here for shapes those miss.
enum class CatalogOrigin { kPrior, kExtension };

std::string_view to_string(CatalogOrigin origin);

struct CatalogEntry {
  std::string name;
  PatternTemplate pattern;
  CatalogOrigin origin = CatalogOrigin::kPrior;

  bool operator==(const CatalogEntry&) const = default;
};

using Catalog = std::vector<CatalogEntry>;

// Catalog file format: a JSON array of objects
//   {"name": str, "tags": [str...], "leading_wildcard": bool,
//    "trailing_wildcard": bool, "containment": bool,
//    "origin": "prior" | "extension"}
// Flags default to false and origin to "prior". Names must be unique.
Catalog parse_catalog(std::string_view json);
Catalog load_catalog(const std::string& path);
const Catalog& bundled_catalog();

GrammarPattern pattern_of(const TaggedName& name);

// First min(k, |p|) tags. k must be >= 1.
GrammarPattern prefix(const GrammarPattern& p, std::size_t k);

bool matches(const PatternTemplate& t, const GrammarPattern& p);

// Matching entries, most concrete tags first, ties by name.
std::vector<CatalogEntry> catalog_match(const GrammarPattern& p,
                                        const Catalog& catalog);

bool pattern_preserved(const GrammarPattern& old_pattern,
                       const GrammarPattern& new_pattern);

std::pair<GrammarPattern, GrammarPattern> prefix_pair(
    const GrammarPattern& old_pattern, const GrammarPattern& new_pattern,
    std::size_t k);

}  // namespace testlens

#endif  // TESTLENS_PATTERNS_H_
