#include "testlens/rename.h"

#include <algorithm>
#include <array>
#include <map>

#include "testlens/error.h"
#include "testlens/stemmer.h"

namespace testlens {

namespace {

constexpr std::array<std::string_view, 4> kFormNames = {
    "Formatting", "Reordering", "Simple", "Complex"};
constexpr std::array<std::string_view, 6> kSemanticNames = {
    "Preserve", "Change", "Narrow", "Broaden", "Add", "Remove"};
constexpr std::array<std::string_view, 9> kRelationNames = {
    "Synonym",  "Antonym",        "Specialization",
    "Generalization", "SameStem", "TenseChange",
    "PluralityChange", "SpellingFix", "Unrelated"};

template <typename Enum, std::size_t N>
std::optional<Enum> parse_enum(const std::array<std::string_view, N>& names,
                               std::string_view text) {
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == text) return static_cast<Enum>(i);
  }
  return std::nullopt;
}

std::string letters_lowercase(std::string_view name) {
  std::string out;
  for (char c : name) {
    if (c >= 'A' && c <= 'Z') out += static_cast<char>(c - 'A' + 'a');
    else if (c >= 'a' && c <= 'z') out += c;
  }
  return out;
}

std::vector<std::string> word_terms(const TermSequence& terms) {
  std::vector<std::string> out;
  for (const std::string& t : terms.normalized()) {
    if (!is_all_digits(t)) out.push_back(t);
  }
  return out;
}

std::vector<DiffTerm> drop_digits(std::vector<DiffTerm> terms) {
  std::erase_if(terms, [](const DiffTerm& t) { return is_all_digits(t.text); });
  return terms;
}

// Merges runs of consecutive indices spelling a phrase into single entries.
std::vector<DiffTerm> collapse_phrases(const std::vector<DiffTerm>& terms,
                                       const PhraseTable& phrases) {
  std::vector<DiffTerm> out;
  std::size_t i = 0;
  while (i < terms.size()) {
    const std::vector<std::string>* hit = nullptr;
    for (const auto& phrase : phrases) {
      if (i + phrase.size() > terms.size()) continue;
      bool ok = true;
      for (std::size_t k = 0; k < phrase.size() && ok; ++k) {
        ok = terms[i + k].text == phrase[k] &&
             terms[i + k].index == terms[i].index + k;
      }
      if (ok && (hit == nullptr || phrase.size() > hit->size())) hit = &phrase;
    }
    if (hit == nullptr) {
      out.push_back(terms[i]);
      ++i;
      continue;
    }
    std::string joined;
    for (std::size_t k = 0; k < hit->size(); ++k) {
      if (k > 0) joined += ' ';
      joined += (*hit)[k];
    }
    out.push_back({std::move(joined), terms[i].index});
    i += hit->size();
  }
  return out;
}

bool differs_by_suffix(std::string_view a, std::string_view b,
                       std::initializer_list<std::string_view> suffixes) {
  for (std::string_view s : suffixes) {
    if (a.size() == b.size() + s.size() && a.starts_with(b) && a.ends_with(s)) {
      return true;
    }
    if (b.size() == a.size() + s.size() && b.starts_with(a) && b.ends_with(s)) {
      return true;
    }
  }
  return false;
}

bool preserves_meaning(TermRelation r) {
  switch (r) {
    case TermRelation::kSynonym:
    case TermRelation::kSameStem:
    case TermRelation::kTenseChange:
    case TermRelation::kPluralityChange:
    case TermRelation::kSpellingFix:
      return true;
    default:
      return false;
  }
}

// Kuhn's augmenting-path matching: does every left node get a partner?
bool has_perfect_matching(const std::vector<std::vector<bool>>& edges,
                          std::size_t right_count) {
  std::vector<int> match_right(right_count, -1);
  for (std::size_t left = 0; left < edges.size(); ++left) {
    std::vector<bool> seen(right_count, false);
    auto try_assign = [&](auto&& self, std::size_t l) -> bool {
      for (std::size_t r = 0; r < right_count; ++r) {
        if (!edges[l][r] || seen[r]) continue;
        seen[r] = true;
        if (match_right[r] < 0 || self(self, static_cast<std::size_t>(match_right[r]))) {
          match_right[r] = static_cast<int>(l);
          return true;
        }
      }
      return false;
    };
    if (!try_assign(try_assign, left)) return false;
  }
  return true;
}

std::optional<std::size_t> head_noun_index(const TaggedName& name) {
  for (std::size_t i = name.tags.size(); i-- > 0;) {
    if (is_noun_like(name.tags[i])) return i;
  }
  return std::nullopt;
}

// True when the head noun survives and every changed term sits before it.
bool modifies_head(const TaggedName& name, const std::vector<DiffTerm>& changed) {
  const auto head = head_noun_index(name);
  if (!head) return false;
  return std::all_of(changed.begin(), changed.end(),
                     [&](const DiffTerm& t) { return t.index < *head; });
}

}  // namespace

std::string_view to_string(FormCategory c) {
  return kFormNames[static_cast<std::size_t>(c)];
}
std::string_view to_string(SemanticCategory c) {
  return kSemanticNames[static_cast<std::size_t>(c)];
}
std::string_view to_string(TermRelation r) {
  return kRelationNames[static_cast<std::size_t>(r)];
}
std::optional<FormCategory> parse_form_category(std::string_view text) {
  return parse_enum<FormCategory>(kFormNames, text);
}
std::optional<SemanticCategory> parse_semantic_category(std::string_view text) {
  return parse_enum<SemanticCategory>(kSemanticNames, text);
}
std::optional<TermRelation> parse_term_relation(std::string_view text) {
  return parse_enum<TermRelation>(kRelationNames, text);
}

void RenameEvent::validate() const {
  if (!is_valid_identifier(old_name)) {
    throw InvalidInput("invalid old name '" + old_name + "'");
  }
  if (!is_valid_identifier(new_name)) {
    throw InvalidInput("invalid new name '" + new_name + "'");
  }
  if (old_name == new_name) {
    throw InvalidInput("old and new name are identical: '" + old_name + "'");
  }
}

TermDiff diff_terms(const TermSequence& old_terms, const TermSequence& new_terms) {
  const std::vector<std::string> old_words = old_terms.normalized();
  const std::vector<std::string> new_words = new_terms.normalized();
  TermDiff diff;

  std::map<std::string, std::size_t> budget;
  for (const std::string& w : old_words) ++budget[w];
  for (std::size_t i = 0; i < new_words.size(); ++i) {
    auto it = budget.find(new_words[i]);
    if (it != budget.end() && it->second > 0) {
      --it->second;
    } else {
      diff.added.push_back({new_words[i], i});
    }
  }

  budget.clear();
  for (const std::string& w : new_words) ++budget[w];
  for (std::size_t i = 0; i < old_words.size(); ++i) {
    auto it = budget.find(old_words[i]);
    if (it != budget.end() && it->second > 0) {
      --it->second;
      diff.preserved.push_back({old_words[i], i});
    } else {
      diff.removed.push_back({old_words[i], i});
    }
  }
  return diff;
}

TermDiff content_diff(const TermSequence& old_terms, const TermSequence& new_terms,
                      const PhraseTable& phrases) {
  TermDiff diff = diff_terms(old_terms, new_terms);
  diff.added = collapse_phrases(drop_digits(std::move(diff.added)), phrases);
  diff.removed = collapse_phrases(drop_digits(std::move(diff.removed)), phrases);
  diff.preserved = drop_digits(std::move(diff.preserved));
  return diff;
}

FormCategory classify_form(const RenameEvent& event) {
  if (letters_lowercase(event.old_name) == letters_lowercase(event.new_name)) {
    return FormCategory::kFormatting;
  }
  const TermSequence old_terms = split(event.old_name);
  const TermSequence new_terms = split(event.new_name);
  std::vector<std::string> old_words = word_terms(old_terms);
  std::vector<std::string> new_words = word_terms(new_terms);
  std::sort(old_words.begin(), old_words.end());
  std::sort(new_words.begin(), new_words.end());
  if (old_words == new_words) return FormCategory::kReordering;

  const TermDiff diff = content_diff(old_terms, new_terms, {});
  if (diff.added.size() <= 1 && diff.removed.size() <= 1) {
    return FormCategory::kSimple;
  }
  return FormCategory::kComplex;
}

TermRelation relate(std::string_view removed, std::string_view added,
                    const WordRelationProvider& provider) {
  if (edit_distance(removed, added) <= 2 &&
      provider.in_dictionary(removed) != provider.in_dictionary(added)) {
    return TermRelation::kSpellingFix;
  }
  const bool single_words = removed.find(' ') == std::string_view::npos &&
                            added.find(' ') == std::string_view::npos;
  if (single_words && stem(removed) == stem(added)) {
    if (differs_by_suffix(removed, added, {"s", "es"})) {
      return TermRelation::kPluralityChange;
    }
    if (differs_by_suffix(removed, added, {"ed", "d"})) {
      return TermRelation::kTenseChange;
    }
    return TermRelation::kSameStem;
  }
  if (provider.synonyms(removed).count(std::string(added))) {
    return TermRelation::kSynonym;
  }
  if (provider.antonyms(removed).count(std::string(added))) {
    return TermRelation::kAntonym;
  }
  if (hypernym_closure(provider, added).count(std::string(removed))) {
    return TermRelation::kSpecialization;
  }
  if (hypernym_closure(provider, removed).count(std::string(added))) {
    return TermRelation::kGeneralization;
  }
  return TermRelation::kUnrelated;
}

RenameClassifier::RenameClassifier(const Lexicon& lexicon,
                                   const WordRelationProvider& provider,
                                   PhraseTable phrases)
    : lexicon_(lexicon), provider_(provider), phrases_(std::move(phrases)) {}

const RenameClassifier& RenameClassifier::bundled() {
  static const RenameClassifier classifier(
      Lexicon::bundled(), LexiconRelationProvider::bundled(),
      LexiconRelationProvider::bundled().phrases());
  return classifier;
}

RenameClassification RenameClassifier::classify(const RenameEvent& event) const {
  event.validate();
  RenameClassification out;
  out.event = event;
  out.old_tagged = tag(split(event.old_name), lexicon_);
  out.new_tagged = tag(split(event.new_name), lexicon_);
  out.form = classify_form(event);

  const TermDiff diff = content_diff(out.old_tagged.terms, out.new_tagged.terms, phrases_);
  for (const DiffTerm& t : diff.added) out.added.push_back(t.text);
  for (const DiffTerm& t : diff.removed) out.removed.push_back(t.text);
  for (const DiffTerm& a : diff.added) {
    for (const DiffTerm& r : diff.removed) {
      out.pairs.push_back({a.text, r.text, relate(r.text, a.text, provider_)});
    }
  }

  if (out.form == FormCategory::kFormatting || out.form == FormCategory::kReordering) {
    out.semantics = SemanticCategory::kPreserve;
    return out;
  }

  const std::size_t added = diff.added.size();
  const std::size_t removed = diff.removed.size();
  if (added == removed && removed > 0) {
    std::vector<std::vector<bool>> edges(removed, std::vector<bool>(added, false));
    for (const TermPair& p : out.pairs) {
      if (!preserves_meaning(p.relation)) continue;
      for (std::size_t r = 0; r < removed; ++r) {
        for (std::size_t a = 0; a < added; ++a) {
          if (diff.removed[r].text == p.removed && diff.added[a].text == p.added) {
            edges[r][a] = true;
          }
        }
      }
    }
    if (has_perfect_matching(edges, added)) {
      out.semantics = SemanticCategory::kPreserve;
      return out;
    }
  }

  if (added > 0 && removed == 0) {
    out.semantics = modifies_head(out.new_tagged, diff.added) ? SemanticCategory::kNarrow
                                                              : SemanticCategory::kAdd;
  } else if (removed > 0 && added == 0) {
    out.semantics = modifies_head(out.old_tagged, diff.removed)
                        ? SemanticCategory::kBroaden
                        : SemanticCategory::kRemove;
  } else {
    bool specializes = false;
    bool generalizes = false;
    for (const TermPair& p : out.pairs) {
      specializes |= p.relation == TermRelation::kSpecialization;
      generalizes |= p.relation == TermRelation::kGeneralization;
    }
    if (specializes && !generalizes) {
      out.semantics = SemanticCategory::kNarrow;
    } else if (generalizes && !specializes) {
      out.semantics = SemanticCategory::kBroaden;
    } else {
      out.semantics = SemanticCategory::kChange;
    }
  }
  return out;
}

SemanticCategory RenameClassifier::classify_semantics(const RenameEvent& event) const {
  return classify(event).semantics;
}

SemanticCategory classify_semantics(const RenameEvent& event,
                                    const WordRelationProvider& provider) {
  const RenameClassifier classifier(Lexicon::bundled(), provider,
                                    LexiconRelationProvider::bundled().phrases());
  return classifier.classify_semantics(event);
}

std::vector<std::pair<std::string, std::string>> term_pairs(const RenameEvent& event) {
  const TermDiff diff = content_diff(split(event.old_name), split(event.new_name),
                                     LexiconRelationProvider::bundled().phrases());
  std::vector<std::pair<std::string, std::string>> out;
  for (const DiffTerm& a : diff.added) {
    for (const DiffTerm& r : diff.removed) out.emplace_back(a.text, r.text);
  }
  return out;
}

}  // namespace testlens
