#include "testlens/tagger.h"

#include <cassert>

#include "testlens/error.h"

namespace testlens {

namespace {

bool has(const std::set<std::string>& s, const std::string& w) {
  return s.find(w) != s.end();
}

bool looks_plural(const std::string& w) {
  if (w.size() < 3 || w.back() != 's') return false;
  return !(w.ends_with("ss") || w.ends_with("us") || w.ends_with("is"));
}

PosTag tag_term(const std::string& word, std::size_t position,
                const Lexicon& lex) {
  if (is_all_digits(word)) return PosTag::kDigit;
  if (has(lex.prepositions, word)) return PosTag::kPreposition;
  if (has(lex.determiners, word)) return PosTag::kDeterminer;
  if (has(lex.conjunctions, word)) return PosTag::kConjunction;
  if (has(lex.pronouns, word)) return PosTag::kPronoun;
  if (has(lex.adverbs, word)) return PosTag::kVerbModifier;
  if (lex.is_verb(word)) {
    const bool ambiguous = has(lex.known_nouns, word);
    if (!ambiguous || position == 0) return PosTag::kVerb;
  }
  if (looks_plural(word)) return PosTag::kNounPlural;
  return PosTag::kNoun;
}

}  // namespace

std::string TaggedName::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (i > 0) out += ' ';
    out += terms[i].text;
    out += '/';
    out += testlens::to_string(tags[i]);
  }
  return out;
}

std::vector<PosTag> noun_run_rewrite(std::vector<PosTag> tags) {
  for (std::size_t i = 0; i + 1 < tags.size(); ++i) {
    if (is_noun_like(tags[i]) && is_noun_like(tags[i + 1])) {
      tags[i] = PosTag::kNounModifier;
    }
  }
  return tags;
}

TaggedName tag(const TermSequence& terms, const Lexicon& lexicon) {
  if (terms.empty()) throw InvalidInput("cannot tag an empty term sequence");
  std::vector<PosTag> tags;
  tags.reserve(terms.size());
  const std::vector<std::string> words = terms.normalized();
  for (std::size_t i = 0; i < words.size(); ++i) {
    tags.push_back(tag_term(words[i], i, lexicon));
  }
  TaggedName out{terms, noun_run_rewrite(std::move(tags))};
  assert(out.tags.size() == out.terms.size());
  return out;
}

TaggedName tag_identifier(std::string_view name, const Lexicon& lexicon) {
  return tag(split(name), lexicon);
}

}  // namespace testlens
