#ifndef TESTLENS_RENAMEDETECT_H_
#define TESTLENS_RENAMEDETECT_H_

#include <string>
#include <vector>

#include <json.hpp>

#include "testlens/extraction.h"
#include "testlens/java_lexer.h"
#include "testlens/rename.h"

namespace testlens {

inline constexpr double kDefaultRenameThreshold = 0.6;

// Dice coefficient over the multisets of adjacent token-text pairs:
// 2|A n B| / (|A| + |B|). Identical token sequences score exactly 1.0 and
// nothing else does: two different sequences whose bigram multisets coincide
// score just below 1.0, and two different sequences with no bigrams at all
// score 0.0.
double body_similarity(const TokenStream& a, const TokenStream& b);

struct DetectedRename {
  RenameEvent event;
  double score = 0.0;
};

// Test methods present only in `before` are paired with test methods present
// only in `after` (by exact name), greedily by descending body similarity,
// one-to-one, keeping pairs scoring at least `threshold`. Ties go to the
// earlier removed method, then the earlier added one. Results follow the
// source order of the removed methods. Events carry after.path as their file.
//
// Throws InvalidInput unless 0 < threshold <= 1.
std::vector<DetectedRename> detect_renames(const SourceFile& before, const SourceFile& after,
                                           double threshold = kDefaultRenameThreshold);

// The rename-log JSON shape with an extra numeric "score".
nlohmann::json detected_to_json(const std::vector<DetectedRename>& renames);

}  // namespace testlens

#endif  // TESTLENS_RENAMEDETECT_H_
