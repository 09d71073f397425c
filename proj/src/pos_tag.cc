#include "testlens/pos_tag.h"

namespace testlens {

std::string_view to_string(PosTag tag) {
  switch (tag) {
    case PosTag::kNoun: return "N";
    case PosTag::kDeterminer: return "DT";
    case PosTag::kConjunction: return "CJ";
    case PosTag::kPreposition: return "P";
    case PosTag::kNounPlural: return "NPL";
    case PosTag::kNounModifier: return "NM";
    case PosTag::kVerb: return "V";
    case PosTag::kVerbModifier: return "VM";
    case PosTag::kPronoun: return "PR";
    case PosTag::kDigit: return "D";
  }
  return "?";
}

std::optional<PosTag> parse_pos_tag(std::string_view text) {
  for (PosTag t : kAllPosTags) {
    if (to_string(t) == text) return t;
  }
  return std::nullopt;
}

}  // namespace testlens
