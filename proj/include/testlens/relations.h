#ifndef TESTLENS_RELATIONS_H_
#define TESTLENS_RELATIONS_H_

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace testlens {

// Lexical-relation lookups over lowercase words. Synonymy and antonymy must
// be symmetric. Multi-word phrases ("all of") are single entries.
class WordRelationProvider {
 public:
  virtual ~WordRelationProvider() = default;

  virtual std::set<std::string> synonyms(std::string_view word) const = 0;
  virtual std::set<std::string> antonyms(std::string_view word) const = 0;
  // Direct hypernyms only; callers take the transitive closure.
  virtual std::set<std::string> hypernyms(std::string_view word) const = 0;
  virtual bool in_dictionary(std::string_view word) const = 0;
};

// Multi-term units collapsed before term pairing, e.g. {"all", "of"}.
using PhraseTable = std::vector<std::vector<std::string>>;

// Provider backed by a curated word list.
//
// File format (JSON object, all keys optional, unknown keys rejected):
//   "dictionary": [word...]
//   "synonyms":   [[a, b]...]        symmetric pairs
//   "antonyms":   [[a, b]...]        symmetric pairs
//   "hypernyms":  {word: [hypernym...]}   must be acyclic
//   "phrases":    [[term, term...]...]    each at least two terms
// A word counts as in the dictionary when it, or its stem, matches a
// dictionary word or any word named in a relation.
class LexiconRelationProvider : public WordRelationProvider {
 public:
  static LexiconRelationProvider from_json(std::string_view json);
  static LexiconRelationProvider load_file(const std::string& path);
  static const LexiconRelationProvider& bundled();

  std::set<std::string> synonyms(std::string_view word) const override;
  std::set<std::string> antonyms(std::string_view word) const override;
  std::set<std::string> hypernyms(std::string_view word) const override;
  bool in_dictionary(std::string_view word) const override;

  const PhraseTable& phrases() const { return phrases_; }

 private:
  std::set<std::string> words_;
  std::set<std::string> stems_;
  std::map<std::string, std::set<std::string>, std::less<>> synonyms_;
  std::map<std::string, std::set<std::string>, std::less<>> antonyms_;
  std::map<std::string, std::set<std::string>, std::less<>> hypernyms_;
  PhraseTable phrases_;
};

// Levenshtein distance (unit-cost insert, delete, substitute).
std::size_t edit_distance(std::string_view a, std::string_view b);

// All words reachable by following hypernym links from `word`, excluding
// `word` itself.
std::set<std::string> hypernym_closure(const WordRelationProvider& provider,
                                       std::string_view word);

}  // namespace testlens

#endif  // TESTLENS_RELATIONS_H_
