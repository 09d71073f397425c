#ifndef TESTLENS_TAGGER_H_
#define TESTLENS_TAGGER_H_

#include <string>
#include <vector>

#include "testlens/lexicon.h"
#include "testlens/pos_tag.h"
#include "testlens/splitter.h"

namespace testlens {

// Terms aligned one-to-one with POS tags.
struct TaggedName {
  TermSequence terms;
  std::vector<PosTag> tags;

  // "test/V Parser/N"
  std::string to_string() const;

  bool operator==(const TaggedName&) const = default;
};

// Deterministic rule cascade, first match wins per term:
//   1. all digits                        -> D
//   2. preposition/determiner/conjunction/pronoun lexicon -> P/DT/CJ/PR
//   3. adverb lexicon                    -> VM
//   4. verb lexicon (incl. "-ed" forms)  -> V, except that a word also in
//      known_nouns is only a verb in first position
//   5. ends in "s" (not "ss"/"us"/"is")  -> NPL
//   6. otherwise                         -> N
// then noun_run_rewrite. `terms` must be non-empty.
TaggedName tag(const TermSequence& terms, const Lexicon& lexicon);

// Convenience: split + tag.
TaggedName tag_identifier(std::string_view name, const Lexicon& lexicon);

// In every maximal run of N/NPL tags, all but the last become NM.
std::vector<PosTag> noun_run_rewrite(std::vector<PosTag> tags);

}  // namespace testlens

#endif  // TESTLENS_TAGGER_H_
