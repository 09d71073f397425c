#ifndef TESTLENS_SPLITTER_H_
#define TESTLENS_SPLITTER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace testlens {

// Half-open byte range [start, end) into some source text.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - start; }
  bool operator==(const Span&) const = default;
};

struct Term {
  std::string text;
  Span span;

  bool operator==(const Term&) const = default;
};

// An identifier broken into ordered terms. Separator characters ('_' and
// '$') belong to no term; every other character of `raw` is covered by
// exactly one term span.
class TermSequence {
 public:
  TermSequence() = default;
  TermSequence(std::string raw, std::vector<Term> terms);

  const std::string& raw() const { return raw_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const Term& operator[](std::size_t i) const { return terms_[i]; }

  // Lowercased term texts, in order.
  std::vector<std::string> normalized() const;

  // Rebuilds the raw identifier by interleaving term text with the skipped
  // separator characters.
  std::string reconstruct() const;

  bool operator==(const TermSequence&) const = default;

 private:
  std::string raw_;
  std::vector<Term> terms_;
};

// True when `text` is non-empty, ASCII letters/digits/'_'/'$' only, and holds
// at least one letter or digit. A leading digit is allowed so that every term
// split() returns is itself splittable.
bool is_valid_identifier(std::string_view text);

// Splits an identifier at separators, letter/digit transitions, lower-to-upper
// transitions and at the end of acronym runs ("HTTPSServer" -> HTTPS, Server).
// An all-caps run directly followed by a lowercase run starting with "test"
// stays whole ("IGNOREtest" -> IGNORE, test).
//
// Throws InvalidInput when `name` fails is_valid_identifier.
TermSequence split(std::string_view name);

// Lowercase form used for lexicon lookup.
std::string normalize(std::string_view term);

bool is_all_digits(std::string_view term);

}  // namespace testlens

#endif  // TESTLENS_SPLITTER_H_
