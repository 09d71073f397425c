#include "testlens/stemmer.h"

#include <array>
#include <utility>

#include "testlens/splitter.h"

namespace testlens {

namespace {

// The word being stemmed; each step rewrites its tail in place.
class PorterWord {
 public:
  explicit PorterWord(std::string word) : b_(std::move(word)) {}

  std::string take() && { return std::move(b_); }

  void step1a() {
    if (ends("sses")) {
      replace(2, "");
    } else if (ends("ies")) {
      replace(2, "");
    } else if (ends("ss")) {
      // keep
    } else if (ends("s")) {
      replace(1, "");
    }
  }

  void step1b() {
    if (ends("eed")) {
      if (measure(stem_len(3)) > 0) replace(1, "");
      return;
    }
    bool stripped = false;
    if (ends("ed") && has_vowel(stem_len(2))) {
      b_.resize(stem_len(2));
      stripped = true;
    } else if (ends("ing") && has_vowel(stem_len(3))) {
      b_.resize(stem_len(3));
      stripped = true;
    }
    if (!stripped) return;
    if (ends("at") || ends("bl") || ends("iz")) {
      b_ += 'e';
    } else if (double_consonant(b_.size()) && !ends("l") && !ends("s") &&
               !ends("z")) {
      b_.pop_back();
    } else if (measure(b_.size()) == 1 && cvc(b_.size())) {
      b_ += 'e';
    }
  }

  void step1c() {
    if (ends("y") && has_vowel(stem_len(1))) b_.back() = 'i';
  }

  void step2() {
    static constexpr std::array<std::pair<std::string_view, std::string_view>, 20>
        kRules = {{{"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},
                   {"anci", "ance"},   {"izer", "ize"},    {"abli", "able"},
                   {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},
                   {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
                   {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
                   {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},
                   {"iviti", "ive"},   {"biliti", "ble"}}};
    apply_measured(kRules, 0);
  }

  void step3() {
    static constexpr std::array<std::pair<std::string_view, std::string_view>, 7>
        kRules = {{{"icate", "ic"},
                   {"ative", ""},
                   {"alize", "al"},
                   {"iciti", "ic"},
                   {"ical", "ic"},
                   {"ful", ""},
                   {"ness", ""}}};
    apply_measured(kRules, 0);
  }

  void step4() {
    static constexpr std::array<std::string_view, 19> kSuffixes = {
        "al",  "ance", "ence", "er",  "ic",  "able", "ible",
        "ant", "ement", "ment", "ent", "ion", "ou",   "ism",
        "ate", "iti",  "ous",  "ive", "ize"};
    // Longest suffix wins: "ement" before "ment" before "ent".
    std::string_view best;
    for (std::string_view s : kSuffixes) {
      if (ends(s) && s.size() > best.size()) best = s;
    }
    if (best.empty()) return;
    const std::size_t k = stem_len(best.size());
    if (measure(k) <= 1) return;
    if (best == "ion" && !(k > 0 && (b_[k - 1] == 's' || b_[k - 1] == 't'))) {
      return;
    }
    b_.resize(k);
  }

  void step5a() {
    if (!ends("e")) return;
    const std::size_t k = stem_len(1);
    const int m = measure(k);
    if (m > 1 || (m == 1 && !cvc(k))) b_.resize(k);
  }

  void step5b() {
    if (measure(b_.size()) > 1 && double_consonant(b_.size()) && ends("l")) {
      b_.pop_back();
    }
  }

 private:
  bool ends(std::string_view suffix) const {
    return std::string_view(b_).ends_with(suffix);
  }

  std::size_t stem_len(std::size_t suffix_len) const {
    return b_.size() - suffix_len;
  }

  void replace(std::size_t drop, std::string_view add) {
    b_.resize(b_.size() - drop);
    b_ += add;
  }

  bool is_consonant(std::size_t i) const {
    switch (b_[i]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 || !is_consonant(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in b_[0, len).
  int measure(std::size_t len) const {
    int m = 0;
    std::size_t i = 0;
    while (i < len && is_consonant(i)) ++i;
    while (i < len) {
      while (i < len && !is_consonant(i)) ++i;
      if (i >= len) break;
      while (i < len && is_consonant(i)) ++i;
      ++m;
    }
    return m;
  }

  bool has_vowel(std::size_t len) const {
    for (std::size_t i = 0; i < len; ++i) {
      if (!is_consonant(i)) return true;
    }
    return false;
  }

  bool double_consonant(std::size_t len) const {
    return len >= 2 && b_[len - 1] == b_[len - 2] && is_consonant(len - 1);
  }

  // consonant-vowel-consonant ending at len, last consonant not w, x or y.
  bool cvc(std::size_t len) const {
    if (len < 3) return false;
    if (!is_consonant(len - 1) || is_consonant(len - 2) || !is_consonant(len - 3)) {
      return false;
    }
    const char c = b_[len - 1];
    return c != 'w' && c != 'x' && c != 'y';
  }

  template <std::size_t N>
  void apply_measured(
      const std::array<std::pair<std::string_view, std::string_view>, N>& rules,
      int min_measure) {
    for (const auto& [suffix, repl] : rules) {
      if (!ends(suffix)) continue;
      if (measure(stem_len(suffix.size())) > min_measure) {
        replace(suffix.size(), repl);
      }
      return;
    }
  }

  std::string b_;
};

}  // namespace

std::string porter_stem(std::string_view word) {
  if (word.size() <= 2) return std::string(word);
  PorterWord w{std::string(word)};
  w.step1a();
  w.step1b();
  w.step1c();
  w.step2();
  w.step3();
  w.step4();
  w.step5a();
  w.step5b();
  return std::move(w).take();
}

std::string stem(std::string_view term) {
  std::string current = normalize(term);
  // Converges in two or three passes on real words; the cap bounds
  // pathological input.
  for (int pass = 0; pass < 16; ++pass) {
    std::string next = porter_stem(current);
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

}  // namespace testlens
