#ifndef TESTLENS_STEMMER_H_
#define TESTLENS_STEMMER_H_

#include <string>
#include <string_view>

namespace testlens {

// One pass of the classic Porter (1980) suffix-stripping algorithm over a
// lowercase word: steps 1a, 1b, 1c, 2, 3, 4, 5a, 5b. Words of length <= 2
// are returned unchanged.
std::string porter_stem(std::string_view word);

// Lowercases, then applies porter_stem until a fixpoint. A single Porter pass
// is not idempotent ("agreed" -> "agre" -> "agr"); iterating makes
// stem(stem(w)) == stem(w).
std::string stem(std::string_view term);

}  // namespace testlens

#endif  // TESTLENS_STEMMER_H_
