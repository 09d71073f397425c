#ifndef TESTLENS_LEXICON_H_
#define TESTLENS_LEXICON_H_

#include <set>
#include <string>
#include <string_view>

namespace testlens {

// Word lists driving the tagger. All entries are lowercase.
//
// File format: a JSON object whose keys are a subset of
//   "prepositions", "determiners", "conjunctions", "pronouns",
//   "adverbs", "verbs", "known_nouns"
// each mapping to an array of lowercase strings. Unknown keys are rejected.
// When loaded as an override, every key present replaces the bundled list of
// the same name; absent keys keep the bundled list.
struct Lexicon {
  std::set<std::string> prepositions;
  std::set<std::string> determiners;
  std::set<std::string> conjunctions;
  std::set<std::string> pronouns;
  std::set<std::string> adverbs;
  std::set<std::string> verbs;
  std::set<std::string> known_nouns;

  // Lexicon compiled into the binary.
  static const Lexicon& bundled();

  // Parses a JSON document, starting from `base` for absent keys.
  // Throws InvalidInput on syntax errors, unknown keys or broken invariants.
  static Lexicon from_json(std::string_view json, const Lexicon& base);
  static Lexicon load_file(const std::string& path);

  // Throws InvalidInput when an invariant does not hold: lowercase entries,
  // pairwise-disjoint closed classes, required seed words present.
  void validate() const;

  // Verb lookup including "-ed"/"-d" past forms of lexicon verbs.
  bool is_verb(std::string_view word) const;
};

}  // namespace testlens

#endif  // TESTLENS_LEXICON_H_
