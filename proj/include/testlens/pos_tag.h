#ifndef TESTLENS_POS_TAG_H_
#define TESTLENS_POS_TAG_H_

#include <array>
#include <optional>
#include <string_view>

namespace testlens {

// The ten part-of-speech tags used for identifier terms.
enum class PosTag {
  kNoun,         // N
  kDeterminer,   // DT
  kConjunction,  // CJ
  kPreposition,  // P
  kNounPlural,   // NPL
  kNounModifier, // NM
  kVerb,         // V
  kVerbModifier, // VM
  kPronoun,      // PR
  kDigit,        // D
};

inline constexpr std::array<PosTag, 10> kAllPosTags = {
    PosTag::kNoun,         PosTag::kDeterminer, PosTag::kConjunction,
    PosTag::kPreposition,  PosTag::kNounPlural, PosTag::kNounModifier,
    PosTag::kVerb,         PosTag::kVerbModifier, PosTag::kPronoun,
    PosTag::kDigit,
};

std::string_view to_string(PosTag tag);
std::optional<PosTag> parse_pos_tag(std::string_view text);

inline bool is_noun_like(PosTag tag) {
  return tag == PosTag::kNoun || tag == PosTag::kNounPlural;
}

}  // namespace testlens

#endif  // TESTLENS_POS_TAG_H_
