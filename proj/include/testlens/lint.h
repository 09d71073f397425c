#ifndef TESTLENS_LINT_H_
#define TESTLENS_LINT_H_

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "testlens/extraction.h"
#include "testlens/lexicon.h"
#include "testlens/tagger.h"

namespace testlens {

enum class Severity { kWarning, kInfo };

std::string_view to_string(Severity s);

struct LintOptions {
  // Word tokens naming collection types. A body token matches when it equals
  // an entry or ends with it (ArrayList, HashMap). The entry "[]" matches any
  // '[' punctuation token.
  std::vector<std::string> collection_vocabulary = {"List", "Map", "Set", "Collection",
                                                    "Iterable", "[]"};
  // R3 normally accepts only assertNull/assertNotNull. When set, assertFalse
  // also satisfies it.
  bool r3_accepts_assert_false = false;
};

struct Rule {
  std::string id;
  std::string summary;
  Severity severity = Severity::kWarning;
  // Depends only on the tagged name.
  std::function<bool(const TaggedName&)> trigger;
  // Receives the name as well since R2 expects assertTrue or assertFalse
  // depending on which term fired.
  std::function<bool(const TaggedName&, const TestMethod&, const LintOptions&)> expectation;
  std::string message;
};

// R1..R5 in id order.
const std::vector<Rule>& rule_registry();

// Enabled rule ids. Default-constructed means every registered rule.
class RuleSet {
 public:
  RuleSet();
  // "R1,R3" (spaces allowed). Throws UsageError on an unknown id or an empty
  // list.
  static RuleSet parse(std::string_view ids);
  explicit RuleSet(std::set<std::string> ids);

  bool enabled(std::string_view id) const { return ids_.count(std::string(id)) > 0; }
  const std::set<std::string>& ids() const { return ids_; }

 private:
  std::set<std::string> ids_;
};

struct Diagnostic {
  std::string rule_id;
  std::string method;
  std::string file;
  Span name_span;
  // 1-based position of name_span.start; 0 when no source text is known.
  std::size_t line = 0;
  std::size_t column = 0;
  std::string message;
  Severity severity = Severity::kWarning;

  bool operator==(const Diagnostic&) const = default;
};

// One diagnostic per enabled rule whose trigger fires on `name` and whose
// expectation fails on `method`. `name` must be derived from method.name.
std::vector<Diagnostic> lint(const TestMethod& method, const TaggedName& name,
                             const RuleSet& rules, const LintOptions& options = {});

// Lints every test method of a test file (see is_test_file), filling in the
// file path and line/column. Methods whose names cannot be split are skipped.
// Non-test files yield nothing.
std::vector<Diagnostic> lint_file(const SourceFile& src, const Lexicon& lexicon,
                                  const RuleSet& rules, const LintOptions& options = {});

// "path:line:col: warning: [R1] name: message"
std::string format_diagnostic(const Diagnostic& d);

}  // namespace testlens

#endif  // TESTLENS_LINT_H_
