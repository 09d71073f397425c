#ifndef TESTLENS_RENAME_H_
#define TESTLENS_RENAME_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "testlens/lexicon.h"
#include "testlens/relations.h"
#include "testlens/splitter.h"
#include "testlens/tagger.h"

namespace testlens {

enum class FormCategory { kFormatting, kReordering, kSimple, kComplex };

enum class SemanticCategory { kPreserve, kChange, kNarrow, kBroaden, kAdd, kRemove };

enum class TermRelation {
  kSynonym,
  kAntonym,
  kSpecialization,
  kGeneralization,
  kSameStem,
  kTenseChange,
  kPluralityChange,
  kSpellingFix,
  kUnrelated,
};

std::string_view to_string(FormCategory c);
std::string_view to_string(SemanticCategory c);
std::string_view to_string(TermRelation r);
std::optional<FormCategory> parse_form_category(std::string_view text);
std::optional<SemanticCategory> parse_semantic_category(std::string_view text);
std::optional<TermRelation> parse_term_relation(std::string_view text);

struct RenameEvent {
  std::string old_name;
  std::string new_name;
  std::optional<std::string> file;
  std::optional<std::string> commit;

  // Throws InvalidInput unless both names are valid identifiers and differ.
  void validate() const;

  bool operator==(const RenameEvent&) const = default;
};

// A term that survived the diff, with its index in the name it came from.
// Collapsed phrases carry the index of their first term.
struct DiffTerm {
  std::string text;
  std::size_t index = 0;

  bool operator==(const DiffTerm&) const = default;
};

// Multiset difference of normalized terms. `added` keeps new-name order,
// `removed` and `preserved` keep old-name order.
struct TermDiff {
  std::vector<DiffTerm> added;
  std::vector<DiffTerm> removed;
  std::vector<DiffTerm> preserved;
};

TermDiff diff_terms(const TermSequence& old_terms, const TermSequence& new_terms);

// Drops all-digit terms from `diff` and merges consecutive terms that spell a
// phrase of `phrases` into one entry ("all", "of" -> "all of"). This is the
// diff that drives semantic classification and term pairing.
TermDiff content_diff(const TermSequence& old_terms, const TermSequence& new_terms,
                      const PhraseTable& phrases);

// Formatting: same letters ignoring case, separators and digits.
// Reordering: same word multiset in a different order.
// Simple: at most one word added and at most one removed. Otherwise Complex.
FormCategory classify_form(const RenameEvent& event);

// First match of SpellingFix, SameStem (refined to PluralityChange or
// TenseChange), Synonym, Antonym, Specialization, Generalization; otherwise
// Unrelated.
TermRelation relate(std::string_view removed, std::string_view added,
                    const WordRelationProvider& provider);

struct TermPair {
  std::string added;
  std::string removed;
  TermRelation relation = TermRelation::kUnrelated;

  bool operator==(const TermPair&) const = default;
};

struct RenameClassification {
  RenameEvent event;
  TaggedName old_tagged;
  TaggedName new_tagged;
  FormCategory form = FormCategory::kSimple;
  SemanticCategory semantics = SemanticCategory::kChange;
  std::vector<std::string> added;
  std::vector<std::string> removed;
  // added x removed, added-major order.
  std::vector<TermPair> pairs;
};

// Holds the lexicon, relation provider and phrase table shared by every
// classification. The referenced objects must outlive the classifier.
class RenameClassifier {
 public:
  RenameClassifier(const Lexicon& lexicon, const WordRelationProvider& provider,
                   PhraseTable phrases);

  // Bundled lexicon, relations and phrases.
  static const RenameClassifier& bundled();

  RenameClassification classify(const RenameEvent& event) const;
  SemanticCategory classify_semantics(const RenameEvent& event) const;

  const Lexicon& lexicon() const { return lexicon_; }
  const WordRelationProvider& provider() const { return provider_; }
  const PhraseTable& phrases() const { return phrases_; }

 private:
  const Lexicon& lexicon_;
  const WordRelationProvider& provider_;
  PhraseTable phrases_;
};

// Uses the bundled lexicon and phrase table.
SemanticCategory classify_semantics(const RenameEvent& event,
                                    const WordRelationProvider& provider);

// Cross product of content_diff(...).added x removed as (added, removed),
// ordered by added position then removed position. Uses the bundled phrases.
std::vector<std::pair<std::string, std::string>> term_pairs(const RenameEvent& event);

}  // namespace testlens

#endif  // TESTLENS_RENAME_H_
